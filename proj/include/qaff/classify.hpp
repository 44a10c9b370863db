#pragma once

#include "qaff/braiding.hpp"
#include "qaff/subsystem.hpp"
#include "qaff/tables.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qaff {

// {alpha in real_roots(L) : ell does not divide (alpha, alpha)}
RootSet unity_support(const CartanDatum& d, int ell, int L);

// Tabulated degrees for degenerate rows, the simple roots for generic rows,
// nothing for trivial ones. Throws std::invalid_argument for exotic cases.
std::vector<Vec> primitive_degrees(const TypeLabel& label, int ell);

// Degrees discovered from the unity support.
std::vector<Vec> computed_degrees(const TypeLabel& label, int ell, int L);

CheckList verify_primitive_degrees(const PrimitiveTableEntry& e, int L);

struct FMapResult {
    bool applicable = false;
    std::string reason;  // why the precondition failed
    bool pass = false;
    int parent_roots = 0;  // |S(L)|
    int dual_roots = 0;    // |(Delta^vee)^t| at the dual level bound
    int mismatches = 0;
    std::vector<std::string> samples;
};

// Divisors t compatible with ell for the datum (see f_map_bijection_check).
std::vector<int> compatible_t(const CartanDatum& d, int ell);

FMapResult f_map_bijection_check(const TypeLabel& label, int ell, int t, int L);

std::optional<std::vector<Rational>> grading_functional(const std::vector<Vec>& degrees);

struct CaseReport {
    TypeLabel label;
    int ell = 0;
    CaseKind kind = CaseKind::generic;
    TypeList m_type;
    std::string m_type_str;
    TypeList g0;  // type of the pairing matrix of the degrees
    std::optional<int> u;
    bool twist = false;
    std::vector<Vec> degrees;
    std::vector<std::string> flags;
    MainRow expected;
    bool matches = false;  // computed fields agree with the expected row
    std::vector<std::string> diffs;
};

CaseReport classify_case(const TypeLabel& label, int ell, int L);

struct ExoticReport {
    TypeLabel label;
    int ell = 0;
    std::vector<Vec> degrees;
    BraidingMat braiding;
    Identification identified;
    std::optional<int> u;
    CheckList checks;
};

// Throws std::invalid_argument for unsupported (label, ell).
ExoticReport exotic_verify(const TypeLabel& label, int ell, int L);

// Entrywise comparison of a displayed matrix with the computed braiding, and
// the Heckenberger type (with branch node) of the computed braiding.
CheckList verify_displayed(const DisplayedMatrix& m);

struct IsotropicRow {
    int m = 0;
    int parent = 0;
    int target = 0;
};
std::vector<IsotropicRow> isotropic_mismatch_report(const TypeLabel& parent, const TypeLabel& target, int c, int M);

// Roots generated by the degrees (via the closed form of target) compared with
// the unity support of the parent.
struct CoverageResult {
    bool pass = false;
    int parent_roots = 0;
    int image_roots = 0;
    int missing = 0;
    int extra = 0;
};
CoverageResult root_coverage(const CartanDatum& parent, int ell, const std::vector<Vec>& degrees,
                             const Identification& id, int c, int L);

}  // namespace qaff
