#pragma once

#include "qaff/root_datum.hpp"

#include <vector>

namespace qaff {

struct RootSet {
    TypeLabel label;
    int level_bound = 0;
    std::vector<Vec> roots;  // sorted, unique

    bool contains(const Vec& v) const;
    size_t size() const { return roots.size(); }
};

// Twice the level of v (coefficient of delta in v = bar v + level*delta).
// Returns false if 2 v_0 / a0 is not an integer. Finite data have level 0.
bool level2(const CartanDatum& d, const Vec& v, Int& out);

// Closure of +-simple roots on the given nodes under their reflections.
// The nodes must span a finite root system.
std::vector<Vec> reflection_closure(const CartanDatum& d, const std::vector<int>& nodes);

// The finite system on alpha_1..alpha_n of an affine datum (or all roots of a
// finite datum), embedded in the datum's coordinates. Memoized.
const std::vector<Vec>& bar_roots(const CartanDatum& d);

bool is_real_root(const CartanDatum& d, const Vec& v);

RootSet finite_roots(const CartanDatum& d);
RootSet real_roots(const CartanDatum& d, int L);
RootSet real_roots_by_reflection(const CartanDatum& d, int coeff_bound);

// Multiplicity of m*delta.
int isotropic_multiplicity(const TypeLabel& t, int m);

Int max_abs(const Vec& v);

}  // namespace qaff
