#include "qaff/root_enum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace qaff {

bool RootSet::contains(const Vec& v) const { return std::binary_search(roots.begin(), roots.end(), v); }

Int max_abs(const Vec& v) {
    Int m = 0;
    for (Int x : v) m = std::max(m, x < 0 ? -x : x);
    return m;
}

bool level2(const CartanDatum& d, const Vec& v, Int& out) {
    if (!d.affine()) {
        out = 0;
        return true;
    }
    if ((2 * v[0]) % d.a0 != 0) return false;
    out = 2 * v[0] / d.a0;
    return true;
}

namespace {

Vec reflect(const CartanDatum& d, const Vec& v, int i) {
    const Int c = 2 * d.pair(v, d.simple(i)) / d.form[i][i];
    Vec r(v);
    r[i] -= c;
    return r;
}

// BFS closure of the seeds under the given reflections; vectors with a
// coefficient above bound (if bound > 0) are dropped.
std::vector<Vec> closure(const CartanDatum& d, const std::vector<int>& nodes, Int bound) {
    std::set<Vec> seen;
    std::deque<Vec> todo;
    for (int i : nodes)
        for (Int sgn : {1, -1}) {
            Vec v = scale(sgn, d.simple(i));
            if (seen.insert(v).second) todo.push_back(v);
        }
    while (!todo.empty()) {
        Vec v = todo.front();
        todo.pop_front();
        for (int i : nodes) {
            Vec w = reflect(d, v, i);
            if (bound > 0 && max_abs(w) > bound) continue;
            if (seen.insert(w).second) todo.push_back(w);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<Vec> reflection_closure(const CartanDatum& d, const std::vector<int>& nodes) {
    return closure(d, nodes, 0);
}

const std::vector<Vec>& bar_roots(const CartanDatum& d) {
    static std::mutex mu;
    static std::map<TypeLabel, std::unique_ptr<std::vector<Vec>>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(d.label);
        if (it != cache.end()) return *it->second;
    }
    std::vector<int> nodes;
    for (int i = d.affine() ? 1 : 0; i < d.size; ++i) nodes.push_back(i);
    auto roots = std::make_unique<std::vector<Vec>>(reflection_closure(d, nodes));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, fresh] = cache.emplace(d.label, std::move(roots));
    return *it->second;
}

bool is_real_root(const CartanDatum& d, const Vec& v) {
    const auto& bar = bar_roots(d);
    if (!d.affine()) return std::binary_search(bar.begin(), bar.end(), v);
    Int k2;
    if (!level2(d, v, k2)) return false;
    Vec twice = sub(scale(2, v), scale(k2, d.delta()));
    if (k2 % 2 == 0) {
        Vec b(twice.size());
        for (size_t i = 0; i < b.size(); ++i) b[i] = twice[i] / 2;
        if (!std::binary_search(bar.begin(), bar.end(), b)) return false;
        if (d.a0k() == 1) return true;
        if (d.norm(b) < d.s) return true;
        return (k2 / 2) % d.k == 0;
    }
    if (d.a0k() != 4) return false;
    if (!std::binary_search(bar.begin(), bar.end(), twice)) return false;
    return d.norm(twice) == d.s;
}

RootSet finite_roots(const CartanDatum& d) {
    if (d.affine()) throw std::invalid_argument("finite_roots needs a finite datum");
    return {d.label, 0, bar_roots(d)};
}

RootSet real_roots(const CartanDatum& d, int L) {
    if (!d.affine()) throw std::invalid_argument("real_roots needs an affine datum");
    if (L < 0) throw std::invalid_argument("level bound must be non-negative");
    RootSet rs{d.label, L, {}};
    for (const Vec& b : bar_roots(d)) {
        const bool is_long = d.norm(b) == d.s;
        for (Int k2 = -2 * L; k2 <= 2 * L; ++k2) {
            Vec twice = add(scale(2, b), scale(k2, d.delta()));
            if (k2 % 2 == 0) {
                if (d.a0k() != 1 && is_long && (k2 / 2) % d.k != 0) continue;
                rs.roots.push_back(add(b, scale(k2 / 2, d.delta())));
            } else {
                if (d.a0k() != 4 || !is_long) continue;
                // (b + k2 delta)/2
                Vec v = add(b, scale(k2, d.delta()));
                bool even = true;
                for (Int& x : v) {
                    if (x % 2 != 0) even = false;
                    x /= 2;
                }
                if (!even) throw std::logic_error("half-integral root in " + to_string(d.label));
                rs.roots.push_back(v);
            }
        }
    }
    std::sort(rs.roots.begin(), rs.roots.end());
    rs.roots.erase(std::unique(rs.roots.begin(), rs.roots.end()), rs.roots.end());
    return rs;
}

RootSet real_roots_by_reflection(const CartanDatum& d, int coeff_bound) {
    std::vector<int> nodes;
    for (int i = 0; i < d.size; ++i) nodes.push_back(i);
    return {d.label, 0, closure(d, nodes, coeff_bound)};
}

int isotropic_multiplicity(const TypeLabel& t, int m) {
    if (!t.affine()) throw std::invalid_argument("isotropic roots need an affine type");
    if (m == 0) throw std::invalid_argument("m must be nonzero");
    const int n = datum_size(t) - 1;
    const bool odd = m % 2 != 0;
    if (t.twist == 2) {
        if (t.family == Family::A && t.rank % 2 == 1 && odd) return n - 1;
        if (t.family == Family::D && odd) return 1;
        if (t.family == Family::E && odd) return 2;
    }
    if (t.twist == 3 && m % 3 != 0) return 1;
    return n;
}

}  // namespace qaff
