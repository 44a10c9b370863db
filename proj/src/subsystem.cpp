#include "qaff/subsystem.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qaff {

void CheckList::add(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
}

bool CheckList::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

RootSet divisible_subsystem(const RootSet& roots, int t) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    const auto& d = datum(roots.label);
    RootSet out{roots.label, roots.level_bound, {}};
    for (const auto& v : roots.roots)
        if (d.norm(v) % t == 0) out.roots.push_back(v);
    return out;
}

namespace {

bool is_delta_multiple(const CartanDatum& d, const Vec& z) {
    if (!d.affine() || is_zero(z)) return false;
    const Vec& delta = d.delta();
    if (z[0] % delta[0] != 0) return false;
    Int m = z[0] / delta[0];
    return m > 0 && z == scale(m, delta);
}

bool leq(const Vec& a, const Vec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

std::vector<Vec> find_simple_system(const RootSet& rs, bool with_isotropic) {
    const auto& d = datum(rs.label);
    if (d.affine() && rs.level_bound < 2)
        throw std::invalid_argument("find_simple_system needs a level bound of at least 2");
    std::vector<Vec> pos;
    for (const auto& v : rs.roots)
        if (nonneg(v)) pos.push_back(v);
    std::vector<Vec> out;
    for (const auto& x : pos) {
        Int k2 = 0;
        level2(d, x, k2);
        if (k2 > rs.level_bound) continue;
        bool simple = true;
        for (const auto& y : pos) {
            if (y == x || !leq(y, x)) continue;
            Vec z = sub(x, y);
            if (rs.contains(z) || (with_isotropic && is_delta_multiple(d, z))) {
                simple = false;
                break;
            }
        }
        if (simple && with_isotropic && d.affine()) {
            // x = (x - m delta) + m delta
            for (Int m = 1; simple; ++m) {
                Vec z = sub(x, scale(m, d.delta()));
                if (!nonneg(z)) break;
                if (rs.contains(z)) simple = false;
            }
        }
        if (simple) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Vec component_delta(const Component& c, const std::vector<Vec>& degrees) {
    const auto& td = datum(*c.label);
    Vec sum(degrees.at(0).size(), 0);
    for (size_t j = 0; j < c.nodes.size(); ++j) sum = add(sum, scale(td.marks[j], degrees[c.nodes[j]]));
    return sum;
}

int delta_factor(const CartanDatum& parent, const std::vector<Vec>& simple, const Identification& id) {
    if (!parent.affine() || id.components.empty() || !id.recognized()) return 0;
    int factor = 0;
    for (const auto& c : id.components) {
        if (!c.label->affine()) return 0;
        Vec dl = component_delta(c, simple);
        const Vec& dp = parent.delta();
        if (dl[0] % dp[0] != 0) return 0;
        Int f = dl[0] / dp[0];
        if (f <= 0 || dl != scale(f, dp)) return 0;
        if (factor && factor != f) return 0;
        factor = static_cast<int>(f);
    }
    return factor;
}

SubsystemResult subsystem_report(const TypeLabel& parent, int t, int L) {
    const auto& d = datum(parent);
    SubsystemResult r;
    r.parent = parent;
    r.t = t;
    RootSet all = d.affine() ? real_roots(d, L) : finite_roots(d);
    r.roots = divisible_subsystem(all, t);
    if (r.roots.roots.empty()) return r;
    r.simple = find_simple_system(r.roots);
    if (auto g = cartan_of(d.form, r.simple)) {
        r.gcm = *g;
        r.identified = identify_type(r.gcm);
        r.delta_factor = delta_factor(d, r.simple, r.identified);
    }
    return r;
}

std::vector<Vec> generated_roots(const Mat& form, const std::vector<Vec>& simple, Int bound) {
    std::set<Vec> seen;
    std::deque<Vec> todo;
    for (const auto& b : simple)
        for (Int sgn : {1, -1}) {
            Vec v = scale(sgn, b);
            if (seen.insert(v).second) todo.push_back(v);
        }
    while (!todo.empty()) {
        Vec v = todo.front();
        todo.pop_front();
        for (const auto& b : simple) {
            const Int nb = pairing(form, b, b);
            const Int num = 2 * pairing(form, v, b);
            if (nb == 0 || num % nb != 0) continue;
            Vec w = sub(v, scale(num / nb, b));
            if (bound > 0 && max_abs(w) > bound) continue;
            if (seen.insert(w).second) todo.push_back(w);
        }
    }
    return {seen.begin(), seen.end()};
}

namespace {

std::string list_str(const CartanDatum& d, const std::vector<Vec>& vs) {
    std::string s = "{";
    for (size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + d.root(vs[i]);
    return s + "}";
}

std::vector<Vec> sorted(std::vector<Vec> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

CheckList verify_pi_table(const PiTableEntry& e, int L) {
    CheckList out;
    out.subject = e.row + " " + to_string(e.parent) + " t=" + std::to_string(e.t);
    const auto& d = datum(e.parent);
    RootSet all = d.affine() ? real_roots(d, L) : finite_roots(d);
    RootSet sub = divisible_subsystem(all, e.t);

    // (a) membership
    std::string bad;
    for (const auto& v : e.expected_simple)
        if (!sub.contains(v)) bad += (bad.empty() ? "" : ", ") + d.root(v);
    out.add("a.membership", bad.empty(), bad.empty() ? "all in Delta^t" : "not in Delta^t: " + bad);

    // (b) type of the expected simple system
    auto g = cartan_of(d.form, e.expected_simple);
    std::string got = g ? identify_type(*g).str() : "non-integral";
    bool type_ok = g && identify_type(*g).recognized() && same_type(identify_type(*g).labels(), e.expected_type);
    out.add("b.type", type_ok, got + " vs " + to_string(canonical(e.expected_type)));

    // (c) the expected simple roots generate Delta^t on the bounded region
    Int bound = d.affine() ? L : 0;
    if (!d.affine())
        for (const auto& v : all.roots) bound = std::max(bound, max_abs(v));
    auto gen = generated_roots(d.form, e.expected_simple, bound);
    std::vector<Vec> region;
    for (const auto& v : sub.roots)
        if (max_abs(v) <= bound) region.push_back(v);
    std::vector<Vec> gen_in;
    for (const auto& v : gen)
        if (max_abs(v) <= bound) gen_in.push_back(v);
    std::ostringstream cd;
    cd << gen_in.size() << " generated vs " << region.size() << " in Delta^t (|coeff| <= " << bound << ")";
    bool counts_ok = true;
    if (e.expected_roots >= 0) {
        auto count = [&](const std::vector<Vec>& vs) {
            int c = 0;
            for (const auto& v : vs) c += (!e.counts_positive || nonneg(v)) ? 1 : 0;
            return c;
        };
        int total = count(all.roots), lng = count(sub.roots);
        cd << "; " << (e.counts_positive ? "positive " : "") << "roots " << total << " (table " << e.expected_roots
           << "), t-divisible " << lng << " (table " << e.expected_long << ")";
        counts_ok = total == e.expected_roots && lng == e.expected_long;
    }
    out.add("c.generation", gen_in == region && counts_ok, cd.str());

    // (d) discovered simple system
    auto found = find_simple_system(sub);
    bool same = sorted(found) == sorted(e.expected_simple);
    out.add("d.discovery", same, "found " + list_str(d, found));

    // (e) minimality: one simple root of Delta^t in the support, coefficient 1
    std::string bad_e;
    for (const auto& v : e.expected_simple) {
        int hits = 0;
        bool coeff_one = true;
        for (int i = 0; i < d.size; ++i) {
            if (v[i] == 0 || d.form[i][i] % e.t != 0) continue;
            ++hits;
            coeff_one = coeff_one && v[i] == 1;
        }
        if (hits != 1 || !coeff_one) bad_e += (bad_e.empty() ? "" : ", ") + d.root(v);
    }
    out.add("e.minimality", bad_e.empty(), bad_e.empty() ? "ok" : "violated by " + bad_e);

    if (d.affine() && e.expected_delta_factor > 0) {
        int f = 0;
        if (g) f = delta_factor(d, e.expected_simple, identify_type(*g));
        out.add("delta.factor", f == e.expected_delta_factor,
                std::to_string(f) + " (table " + std::to_string(e.expected_delta_factor) + ")");
    }
    return out;
}

}  // namespace qaff
