#include "qaff/classify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qaff {

RootSet unity_support(const CartanDatum& d, int ell, int L) {
    RootSet all = real_roots(d, L);
    RootSet out{d.label, L, {}};
    for (const auto& v : all.roots)
        if (d.norm(v) % ell != 0) out.roots.push_back(v);
    return out;
}

namespace {

bool degenerate_case(const CartanDatum& d, int ell) {
    for (int i = 0; i < d.size; ++i)
        if (ell_alpha(ell, d.form[i][i]) == 1) return true;
    return false;
}

std::vector<Vec> simple_roots(const CartanDatum& d) {
    std::vector<Vec> out;
    for (int i = 0; i < d.size; ++i) out.push_back(d.simple(i));
    return out;
}

std::vector<Vec> sorted(std::vector<Vec> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::string list_str(const CartanDatum& d, const std::vector<Vec>& vs) {
    std::string s = "{";
    for (size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + d.root(vs[i]);
    return s + "}";
}

bool has_odd_cycle(const TypeList& ts) {
    for (const auto& t : ts)
        if (t.family == Family::A && t.twist == 1 && t.rank % 2 == 0) return true;
    return false;
}

// Branch node of D4 / D4^(1) in label numbering.
int center_node(const TypeLabel& t) {
    if (t == TypeLabel{Family::D, 4, 0}) return 1;
    if (t == TypeLabel{Family::D, 4, 1}) return 2;
    return -1;
}

}  // namespace

std::vector<Vec> primitive_degrees(const TypeLabel& label, int ell) {
    const auto& d = datum(label);
    if (ell <= 2) return {};
    if (auto e = primitive_table_entry(label, ell)) return e->degrees;
    if (degenerate_case(d, ell)) throw std::invalid_argument("no tabulated degrees for " + to_string(label));
    if (!lusztig_condition(d, ell).condA) throw std::invalid_argument("exotic case: degrees come from exotic_verify");
    return simple_roots(d);
}

std::vector<Vec> computed_degrees(const TypeLabel& label, int ell, int L) {
    return find_simple_system(unity_support(datum(label), ell, std::max(L, 2)));
}

CheckList verify_primitive_degrees(const PrimitiveTableEntry& e, int L) {
    CheckList out;
    out.subject = e.row + " " + to_string(e.label) + " l=" + std::to_string(e.ell);
    const auto& d = datum(e.label);
    const int ell = e.ell;

    std::string bad_a, bad_b, bad_e;
    auto note = [&](std::string& s, const Vec& v) { s += (s.empty() ? "" : ", ") + d.root(v); };
    for (const auto& v : e.degrees) {
        if (d.norm(v) % ell == 0) note(bad_a, v);
        int hits = 0;
        bool one = true;
        for (int i = 0; i < d.size; ++i) {
            if (v[i] == 0) continue;
            if (d.form[i][i] % ell != 0) {
                ++hits;
                one = one && v[i] == 1;
            }
        }
        if (hits != 1 || !one) note(bad_b, v);
        if (!is_real_root(d, v)) note(bad_e, v);
        Int k2 = 0;
        if (level2(d, v, k2) && std::abs(k2) > 2 * L) note(bad_e, v);
    }
    out.add("a.norm", bad_a.empty(), bad_a.empty() ? "l does not divide any norm" : "l divides norm of " + bad_a);
    out.add("b.unique", bad_b.empty(), bad_b.empty() ? "one non-degenerate simple root, coefficient 1" : bad_b);

    const TypeList target = canonical(e.target);
    auto b = braiding_matrix(d, e.degrees, ell);
    auto hk = heckenberger_gcm(b);
    std::string hk_type = hk.ok ? identify_type(hk.gcm).str() : hk.error;
    bool by_hk = hk.ok && identify_type(hk.gcm).recognized() && same_type(identify_type(hk.gcm).labels(), target);
    auto sp = standard_braiding_parameter(b, target);
    std::ostringstream dd;
    dd << "Heckenberger " << hk_type << ", standard form of " << to_string(target) << ": "
       << (sp ? "u=" + std::to_string(sp->u) : std::string("none"));
    out.add("d.type", by_hk || sp.has_value(), dd.str());
    out.add("e.real", bad_e.empty(), bad_e.empty() ? "all real roots within the level bound" : bad_e);

    auto found = computed_degrees(e.label, ell, L);
    out.add("f.discovery", sorted(found) == sorted(e.degrees), "found " + list_str(d, found));

    auto f = grading_functional(e.degrees);
    out.add("g.grading", f.has_value(), f ? "f(degree) = 1 solvable" : "inconsistent");
    return out;
}

std::vector<int> compatible_t(const CartanDatum& d, int ell) {
    std::set<Int> norms;
    for (int i = 0; i < d.size; ++i) norms.insert(d.form[i][i]);
    std::vector<int> out;
    for (int t = 2; t <= 2 * d.s; ++t) {
        bool ok = true;
        for (Int N : norms) {
            const Int dual_norm = 2 * d.s / N;
            ok = ok && ((N % ell != 0) == (dual_norm % t == 0));
        }
        if (ok) out.push_back(t);
    }
    return out;
}

namespace {

Vec to_dual(const CartanDatum& d, const Duality& du, const Vec& v) {
    Vec w(v.size());
    for (int i = 0; i < d.size; ++i) w[du.perm[i]] = v[i] * d.form[i][i];
    return primitive(w);
}

Vec from_dual(const CartanDatum& d, const CartanDatum& dd, const Duality& du, const Vec& w) {
    Vec v(w.size());
    for (int i = 0; i < d.size; ++i) v[i] = w[du.perm[i]] * dd.form[du.perm[i]][du.perm[i]];
    return primitive(v);
}

}  // namespace

FMapResult f_map_bijection_check(const TypeLabel& label, int ell, int t, int L) {
    FMapResult r;
    const auto& d = datum(label);
    if (!d.affine()) {
        r.reason = "finite type";
        return r;
    }
    if (!degenerate_case(d, ell)) {
        r.reason = "generic: every root has l_alpha != 1, t would be 1";
        return r;
    }
    auto ts = compatible_t(d, ell);
    if (std::find(ts.begin(), ts.end(), t) == ts.end()) {
        r.reason = "t=" + std::to_string(t) + " is not paired with l=" + std::to_string(ell);
        return r;
    }
    r.applicable = true;
    const Duality du = dual_datum(label);
    const auto& dd = datum(du.dual);
    auto fail = [&](const std::string& s) {
        ++r.mismatches;
        if (r.samples.size() < 5) r.samples.push_back(s);
    };
    RootSet S = unity_support(d, ell, L);
    r.parent_roots = static_cast<int>(S.size());
    for (const auto& beta : S.roots) {
        Vec x = to_dual(d, du, beta);
        if (!is_real_root(dd, x) || dd.norm(x) % t != 0) fail("dual image of " + d.root(beta) + " not in (Delta^vee)^t");
        else if (from_dual(d, dd, du, x) != beta) fail("round trip fails at " + d.root(beta));
    }
    RootSet dual_t = divisible_subsystem(real_roots(dd, L), t);
    r.dual_roots = static_cast<int>(dual_t.size());
    for (const auto& a : dual_t.roots) {
        Vec y = from_dual(d, dd, du, a);
        if (!is_real_root(d, y) || d.norm(y) % ell == 0) fail("image of dual root " + dd.root(a) + " not in S");
        else if (to_dual(d, du, y) != a) fail("round trip fails at dual " + dd.root(a));
    }
    r.pass = r.mismatches == 0;
    return r;
}

std::optional<std::vector<Rational>> grading_functional(const std::vector<Vec>& degrees) {
    if (degrees.empty()) return std::nullopt;
    return solve_rational(degrees, Vec(degrees.size(), 1));
}

CoverageResult root_coverage(const CartanDatum& parent, int ell, const std::vector<Vec>& degrees,
                             const Identification& id, int c, int L) {
    CoverageResult r;
    if (c <= 0 || !id.recognized()) return r;
    std::set<Vec> image;
    for (const auto& comp : id.components) {
        const auto& td = datum(*comp.label);
        auto map = [&](const Vec& w) {
            Vec v(parent.size, 0);
            for (size_t j = 0; j < comp.nodes.size(); ++j) v = add(v, scale(w[j], degrees[comp.nodes[j]]));
            return v;
        };
        Int m2 = 0;
        for (const auto& bar : bar_roots(td)) {
            Int k2 = 0;
            if (!level2(parent, map(bar), k2)) return r;
            m2 = std::max(m2, k2 < 0 ? -k2 : k2);
        }
        const int Lt = static_cast<int>((2 * L + m2 + 2 * c - 1) / (2 * c));
        for (const auto& w : (td.affine() ? real_roots(td, Lt) : finite_roots(td)).roots) {
            Vec v = map(w);
            Int k2 = 0;
            if (level2(parent, v, k2) && std::abs(k2) <= 2 * L) image.insert(v);
        }
    }
    RootSet S = unity_support(parent, ell, L);
    r.parent_roots = static_cast<int>(S.size());
    r.image_roots = static_cast<int>(image.size());
    for (const auto& v : S.roots)
        if (!image.count(v)) ++r.missing;
    for (const auto& v : image)
        if (!S.contains(v)) ++r.extra;
    r.pass = r.missing == 0 && r.extra == 0;
    return r;
}

CaseReport classify_case(const TypeLabel& label, int ell, int L) {
    const auto& d = datum(label);
    CaseReport r;
    r.label = label;
    r.ell = ell;
    r.expected = main_table_row(label, ell);
    L = std::max(L, 2);

    if (ell <= 2) {
        r.kind = CaseKind::trivial;
    } else if (degenerate_case(d, ell)) {
        r.degrees = computed_degrees(label, ell, L);
        auto g = cartan_of(d.form, r.degrees);
        Identification id0;
        if (g) id0 = identify_type(*g);
        r.g0 = id0.labels();
        auto b = braiding_matrix(d, r.degrees, ell);
        auto hk = heckenberger_gcm(b);
        if (hk.ok) {
            auto idM = identify_type(hk.gcm);
            r.m_type = idM.labels();
            r.m_type_str = idM.str();
            if (!idM.recognized()) r.flags.push_back("unrecognized M component " + idM.str());
        } else {
            r.flags.push_back("Heckenberger matrix: " + hk.error);
        }
        bool condA = true;
        if (g) {
            std::vector<int> la;
            for (const auto& v : r.degrees) la.push_back(ell_alpha(ell, d.norm(v)));
            condA = lusztig_condition(*g, la).condA;
        }
        bool has_a11 = std::count(r.g0.begin(), r.g0.end(), TypeLabel{Family::A, 1, 1}) > 0;
        r.kind = has_a11 && !condA ? CaseKind::deaffinized : CaseKind::degenerate;
        if (id0.recognized() && !r.g0.empty())
            if (auto sp = standard_braiding_parameter(b, r.g0)) r.u = sp->u;
        if (auto e = primitive_table_entry(label, ell))
            if (sorted(e->degrees) != sorted(r.degrees))
                r.flags.push_back("computed degrees differ from the table: " + list_str(d, r.degrees));
    } else {
        auto lc = lusztig_condition(d, ell);
        auto simple = simple_roots(d);
        auto b = braiding_matrix(d, simple, ell);
        auto hk = heckenberger_gcm(b);
        if (!lc.condA) {
            if (label == TypeLabel{Family::A, 1, 1}) {
                r.kind = CaseKind::deaffinized;
                r.degrees = simple;
                r.g0 = {label};
                if (hk.ok) {
                    auto idM = identify_type(hk.gcm);
                    r.m_type = idM.labels();
                    r.m_type_str = idM.str();
                }
                if (auto sp = standard_braiding_parameter(b, r.g0)) r.u = sp->u;
            } else if (auto spec = exotic_spec(label, ell)) {
                r.kind = CaseKind::exotic;
                r.degrees = simple;
                r.degrees.insert(r.degrees.end(), spec->added.begin(), spec->added.end());
                auto be = braiding_matrix(d, r.degrees, ell);
                auto he = heckenberger_gcm(be);
                if (he.ok) {
                    auto idM = identify_type(he.gcm);
                    r.m_type = idM.labels();
                    r.m_type_str = idM.str();
                    if (idM.recognized())
                        if (auto sp = standard_braiding_parameter(be, r.m_type)) r.u = sp->u;
                }
                if (auto g = cartan_of(d.form, r.degrees)) r.g0 = identify_type(*g).labels();
                r.twist = !r.u.has_value();
            } else {
                r.kind = CaseKind::exotic;
                r.degrees = simple;
                if (hk.ok) {
                    r.m_type = identify_type(hk.gcm).labels();
                    r.m_type_str = identify_type(hk.gcm).str();
                }
                r.flags.push_back("exotic case without known extra degrees");
            }
        } else {
            r.degrees = simple;
            r.g0 = {label};
            r.m_type = {label};
            r.m_type_str = to_string(label);
            r.u = 1;
            const bool unchanged = hk.ok && hk.gcm == d.cartan;
            if (!unchanged) r.flags.push_back("Heckenberger matrix differs from the Cartan matrix");
            if (listed_as_nongeneric(label, ell) && lc.condB && unchanged) {
                r.kind = CaseKind::pseudo_exotic;
                r.flags.push_back("listed among the cases failing Lusztig's condition, but condition a) holds and "
                                  "the Cartan matrix is unchanged");
            } else {
                r.kind = CaseKind::generic;
            }
            if (!lc.condB) r.flags.push_back("odd cycle: condition b) fails (A_n^(1), n even)");
        }
    }
    if (r.m_type_str.empty()) r.m_type_str = to_string(r.m_type);
    if (r.kind != CaseKind::generic && has_odd_cycle(r.m_type)) r.flags.push_back("odd cycle in M");

    const MainRow& e = r.expected;
    if (r.kind != e.kind) r.diffs.push_back("kind " + to_string(r.kind) + " vs " + to_string(e.kind));
    if (r.kind != CaseKind::trivial && !same_type(r.m_type, e.m_type))
        r.diffs.push_back("M " + to_string(canonical(r.m_type)) + " vs " + to_string(canonical(e.m_type)));
    if (e.twist) {
        if (r.u) r.diffs.push_back("q' standard (u=" + std::to_string(*r.u) + ") vs twist only");
    } else if (r.kind != CaseKind::trivial && r.u != e.u) {
        auto us = [](const std::optional<int>& u) { return u ? "u=" + std::to_string(*u) : std::string("none"); };
        r.diffs.push_back("q' " + us(r.u) + " vs " + us(e.u));
    }
    r.matches = r.diffs.empty();
    if (e.ambiguous) r.flags.push_back("ambiguous table row: " + e.note);
    return r;
}

CheckList verify_displayed(const DisplayedMatrix& m) {
    CheckList out;
    out.subject = m.name;
    const auto& d = datum(m.label);
    auto b = braiding_matrix(d, m.degrees, m.ell);
    std::string bad, fixed;
    auto printed = [&](int i, int j) { return parse_unity(m.entries.at(i).at(j), m.ell); };
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < b.size(); ++j) {
            auto v = printed(i, j);
            if (v && *v == b.exps[i][j]) continue;
            const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ") ";
            auto e = std::find_if(m.errata.begin(), m.errata.end(),
                                  [&](const auto& x) { return std::get<0>(x) == i && std::get<1>(x) == j; });
            auto corrected = e == m.errata.end() ? std::nullopt : parse_unity(std::get<2>(*e), m.ell);
            auto vt = printed(j, i);
            const bool same_product = v && vt && mod(*v + *vt - b.exps[i][j] - b.exps[j][i], m.ell) == 0;
            if (corrected && *corrected == b.exps[i][j] && same_product)
                fixed += at + m.entries[i][j] + " printed, " + std::get<2>(*e) + " computed; ";
            else
                bad += at + m.entries[i][j] + " vs q^" + std::to_string(b.exps[i][j]) + "; ";
        }
    out.add("entries", bad.empty(), bad.empty() ? "all entries agree" : bad);
    if (!m.errata.empty())
        out.add("errata", fixed.size() && bad.empty(),
                "documented misprints, q_ij q_ji unchanged: " + (fixed.empty() ? std::string("none found") : fixed));
    auto hk = heckenberger_gcm(b);
    Identification id;
    if (hk.ok) id = identify_type(hk.gcm);
    bool ok = hk.ok && id.recognized() && same_type(id.labels(), m.expected_type);
    out.add("type", ok, (hk.ok ? id.str() : hk.error) + " vs " + to_string(m.expected_type));
    if (m.center >= 0) {
        bool found = false;
        for (const auto& c : id.components) {
            if (!c.label) continue;
            int cn = center_node(*c.label);
            if (cn >= 0) found = m.degrees[c.nodes[cn]] == d.simple(m.center);
        }
        out.add("center", found, "branch node is " + d.root(d.simple(m.center)));
    }
    return out;
}

ExoticReport exotic_verify(const TypeLabel& label, int ell, int L) {
    auto spec = exotic_spec(label, ell);
    if (!spec) throw std::invalid_argument("no exotic verification for " + to_string(label) + " l=" + std::to_string(ell));
    const auto& d = datum(label);
    ExoticReport r;
    r.label = label;
    r.ell = ell;
    r.checks.subject = to_string(label) + " l=" + std::to_string(ell);
    r.degrees = simple_roots(d);
    r.degrees.insert(r.degrees.end(), spec->added.begin(), spec->added.end());
    r.braiding = braiding_matrix(d, r.degrees, ell);

    for (const auto& m : displayed_matrices()) {
        if (m.label != label || m.ell != ell) continue;
        auto c = verify_displayed(m);
        std::string detail;
        for (const auto& x : c.checks) detail += x.name + ": " + x.detail + "; ";
        r.checks.add("matrix " + m.name, c.pass(), detail);
    }

    auto hk = heckenberger_gcm(r.braiding);
    if (hk.ok) r.identified = identify_type(hk.gcm);
    r.checks.add("type", hk.ok && r.identified.recognized() && same_type(r.identified.labels(), spec->final_type),
                 r.identified.str() + " vs " + to_string(spec->final_type));
    if (spec->cartan_unchanged)
        r.checks.add("cartan.unchanged", hk.ok && hk.gcm == d.cartan, hk.ok ? to_string(hk.gcm) : hk.error);
    if (spec->center >= 0) {
        bool ok = false;
        for (const auto& c : r.identified.components)
            if (c.label && center_node(*c.label) >= 0) ok = r.degrees[c.nodes[center_node(*c.label)]] == d.simple(spec->center);
        r.checks.add("center", ok, "expected " + d.root(d.simple(spec->center)));
    }
    if (r.identified.recognized()) {
        if (auto sp = standard_braiding_parameter(r.braiding, r.identified.labels())) r.u = sp->u;
    }
    auto us = [](const std::optional<int>& u) { return u ? "u=" + std::to_string(*u) : std::string("twist only"); };
    r.checks.add("q'", r.u == spec->u, us(r.u) + " vs " + us(spec->u));

    if (spec->delta_factor > 0 && r.identified.recognized() && r.identified.components.size() == 1) {
        Vec dt = component_delta(r.identified.components[0], r.degrees);
        Vec expect = scale(spec->delta_factor, d.delta());
        r.checks.add("delta", dt == expect,
                     "delta_" + to_string(spec->final_type) + " = " + d.root(dt) + ", " +
                         std::to_string(spec->delta_factor) + " delta = " + d.root(expect));
        auto cov = root_coverage(d, ell, r.degrees, r.identified, spec->delta_factor, L);
        std::ostringstream os;
        os << cov.image_roots << " generated vs " << cov.parent_roots << " with l not dividing the norm (missing "
           << cov.missing << ", extra " << cov.extra << ", level <= " << L << ")";
        r.checks.add("roots", cov.pass, os.str());
    }
    return r;
}

std::vector<IsotropicRow> isotropic_mismatch_report(const TypeLabel& parent, const TypeLabel& target, int c, int M) {
    if (c < 1) throw std::invalid_argument("delta factor must be positive");
    std::vector<IsotropicRow> rows;
    for (int m = 1; m <= M; ++m)
        rows.push_back({m, isotropic_multiplicity(parent, m), m % c == 0 ? isotropic_multiplicity(target, m / c) : 0});
    return rows;
}

}  // namespace qaff
