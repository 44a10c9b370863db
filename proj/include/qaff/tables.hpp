#pragma once

// Transcribed tables and displayed matrices. Everything here is expectation
// data; nothing in the library computes from it.

#include "qaff/subsystem.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace qaff {

enum class CaseKind { trivial, generic, degenerate, exotic, pseudo_exotic, deaffinized };
std::string to_string(CaseKind k);

// Finite rows for n = 2..max_n.
std::vector<PiTableEntry> finite_pi_table(int max_n);
// Affine rows for catalog members with n = 2..max_n.
std::vector<PiTableEntry> affine_pi_table(int max_n);

struct PrimitiveTableEntry {
    std::string row;
    TypeLabel label;
    int ell = 0;
    int t = 0;  // the paired divisor in the dual system
    std::vector<Vec> degrees;
    TypeList target;
};

std::vector<PrimitiveTableEntry> primitive_table(int max_n);
std::optional<PrimitiveTableEntry> primitive_table_entry(const TypeLabel& label, int ell);

struct MainRow {
    std::string row;  // "B_n^(1),D_{n+1}^(2) l=4", "generic", ...
    CaseKind kind = CaseKind::generic;
    TypeList m_type;
    std::optional<int> u;  // q' = q^u
    bool twist = false;    // q' given only up to a twist ("q, qb, -1")
    bool ambiguous = false;
    std::string note;
};

// Row of the main table governing (label, ell); unlisted cases yield the
// generic row.
MainRow main_table_row(const TypeLabel& label, int ell);

// Cases listed as failing Lusztig's condition.
bool listed_as_nongeneric(const TypeLabel& label, int ell);

struct DisplayedMatrix {
    std::string name;
    TypeLabel label;
    int ell = 0;
    std::vector<Vec> degrees;
    std::vector<std::vector<std::string>> entries;
    TypeList expected_type;  // Heckenberger type
    int center = -1;         // parent simple root expected at the branch node
    // Entries printed wrongly in the source display: (i, j, corrected entry).
    std::vector<std::tuple<int, int, std::string>> errata{};
};

std::vector<DisplayedMatrix> displayed_matrices();

struct ExoticSpec {
    TypeLabel label;
    int ell = 0;
    std::vector<Vec> added;   // degrees beyond the simple roots
    TypeList final_type;      // Heckenberger type of the full degree list
    int delta_factor = 0;     // delta_final = c * delta_parent, 0 if not applicable
    int center = -1;
    std::optional<int> u;     // q' = q^u against final_type
    bool cartan_unchanged = false;
};

std::optional<ExoticSpec> exotic_spec(const TypeLabel& label, int ell);

}  // namespace qaff
