#pragma once

#include "qaff/root_enum.hpp"

#include <string>
#include <vector>

namespace qaff {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckList {
    std::string subject;
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string detail = {});
    bool pass() const;
};

struct SubsystemResult {
    TypeLabel parent;
    int t = 1;
    RootSet roots;
    std::vector<Vec> simple;
    Mat gcm;
    Identification identified;
    int delta_factor = 0;  // 0 if some component is finite or unrecognized
};

RootSet divisible_subsystem(const RootSet& roots, int t);

// Positive elements of sub at level <= L/2 that are not a sum of two positive
// elements of sub (isotropic roots m*delta count as elements when
// with_isotropic is set and the datum is affine). Throws for affine sets
// enumerated with L < 2.
std::vector<Vec> find_simple_system(const RootSet& sub, bool with_isotropic = true);

// c with delta_{identified} = c * delta_parent on every component, else 0.
int delta_factor(const CartanDatum& parent, const std::vector<Vec>& simple, const Identification& id);

// Sum over label nodes j of marks_j * degrees[nodes[j]] for one component.
Vec component_delta(const Component& c, const std::vector<Vec>& degrees);

SubsystemResult subsystem_report(const TypeLabel& parent, int t, int L);

// Closure of +-simple under the reflections s_b, b in simple, dropping vectors
// with a coefficient above bound (0 = no bound).
std::vector<Vec> generated_roots(const Mat& form, const std::vector<Vec>& simple, Int bound);

struct PiTableEntry {
    std::string row;  // "B_n t=4" etc.
    TypeLabel parent;
    int t = 1;
    TypeList expected_type;
    std::vector<Vec> expected_simple;
    int expected_delta_factor = 0;  // affine rows
    int expected_roots = -1;        // finite rows: counts quoted in the proof
    int expected_long = -1;
    bool counts_positive = false;  // the quoted counts refer to positive roots
};

CheckList verify_pi_table(const PiTableEntry& e, int L);

}  // namespace qaff
