#include "qaff/tables.hpp"

#include <initializer_list>
#include <utility>

namespace qaff {

std::string to_string(CaseKind k) {
    switch (k) {
        case CaseKind::trivial: return "trivial";
        case CaseKind::generic: return "generic";
        case CaseKind::degenerate: return "degenerate";
        case CaseKind::exotic: return "exotic";
        case CaseKind::pseudo_exotic: return "pseudo-exotic";
        case CaseKind::deaffinized: return "deaffinized";
    }
    return "?";
}

namespace {

using F = Family;

// Coefficient vector; indices are the printed subscripts, shifted by `first`.
struct Builder {
    int size;
    int first;  // 1 for finite data, 0 for affine

    Vec v(std::initializer_list<std::pair<int, Int>> terms) const {
        Vec r(size, 0);
        for (auto [i, c] : terms) r.at(i - first) += c;
        return r;
    }
    Vec a(int i) const { return v({{i, 1}}); }
    // base + c*(alpha_lo + ... + alpha_hi), empty if lo > hi
    Vec run(Vec base, int lo, int hi, Int c) const {
        for (int i = lo; i <= hi; ++i) base[i - first] += c;
        return base;
    }
};

TypeList repeat(const TypeLabel& t, int n) { return TypeList(n, t); }

// base, base + c a_{from}, base + c a_{from} + c a_{from+step}, ... (n items)
std::vector<Vec> chain(const Builder& b, const Vec& base, int from, int step, Int c, int n) {
    std::vector<Vec> out{base};
    Vec cur = base;
    for (int k = 0, i = from; k + 1 < n; ++k, i += step) {
        cur[i - b.first] += c;
        out.push_back(cur);
    }
    return out;
}

void append(std::vector<Vec>& a, const std::vector<Vec>& b) { a.insert(a.end(), b.begin(), b.end()); }

}  // namespace

std::vector<PiTableEntry> finite_pi_table(int max_n) {
    std::vector<PiTableEntry> rows;
    for (int n = 2; n <= max_n; ++n) {
        Builder b{n, 1};
        PiTableEntry e;
        e.row = "B_n";
        e.parent = {F::B, n, 0};
        e.t = 4;
        e.expected_type = {{F::D, n, 0}};
        for (int i = 1; i < n; ++i) e.expected_simple.push_back(b.a(i));
        e.expected_simple.push_back(b.v({{n - 1, 1}, {n, 2}}));
        e.expected_roots = 2 * n * n;
        e.expected_long = 2 * n * (n - 1);
        rows.push_back(e);

        PiTableEntry c;
        c.row = "C_n";
        c.parent = {F::C, n, 0};
        c.t = 4;
        c.expected_type = repeat({F::A, 1, 0}, n);
        c.expected_simple = chain(b, b.a(n), n - 1, -1, 2, n);
        c.expected_roots = 2 * n * n;
        c.expected_long = 2 * n;
        rows.push_back(c);
    }
    {
        Builder b{4, 1};
        PiTableEntry e;
        e.row = "F_4";
        e.parent = {F::F, 4, 0};
        e.t = 4;
        e.expected_type = {{F::D, 4, 0}};
        e.expected_simple = {b.a(1), b.a(2), b.v({{2, 1}, {3, 2}}), b.v({{2, 1}, {3, 2}, {4, 2}})};
        e.expected_roots = 48;
        e.expected_long = 24;
        rows.push_back(e);
    }
    for (int t : {3, 6}) {
        Builder b{2, 1};
        PiTableEntry e;
        e.row = "G_2";
        e.parent = {F::G, 2, 0};
        e.t = t;
        e.expected_type = {{F::A, 2, 0}};
        e.expected_simple = {b.a(1), b.v({{1, 1}, {2, 3}})};
        e.expected_roots = 6;
        e.expected_long = 3;
        e.counts_positive = true;
        rows.push_back(e);
    }
    return rows;
}

std::vector<PiTableEntry> affine_pi_table(int max_n) {
    std::vector<PiTableEntry> rows;
    auto push = [&](PiTableEntry e) {
        if (in_catalog(e.parent)) rows.push_back(std::move(e));
    };
    for (int n = 2; n <= max_n; ++n) {
        Builder b{n + 1, 0};
        {
            PiTableEntry e;
            e.row = "B_n^(1)";
            e.parent = {F::B, n, 1};
            e.t = 4;
            e.expected_type = {{F::D, n, 1}};
            for (int i = 0; i < n; ++i) e.expected_simple.push_back(b.a(i));
            e.expected_simple.push_back(b.v({{n - 1, 1}, {n, 2}}));
            e.expected_delta_factor = 1;
            push(e);
        }
        {
            PiTableEntry e;
            e.row = "C_n^(1)";
            e.parent = {F::C, n, 1};
            e.t = 4;
            e.expected_type = repeat({F::A, 1, 1}, n);
            e.expected_simple = chain(b, b.a(n), n - 1, -1, 2, n);
            append(e.expected_simple, chain(b, b.a(0), 1, 1, 2, n));
            e.expected_delta_factor = 1;
            push(e);
        }
        {
            PiTableEntry e;
            e.row = "D_{n+1}^(2)";
            e.parent = {F::D, n + 1, 2};
            e.t = 4;
            e.expected_type = {{F::D, n, 1}};
            e.expected_simple.push_back(b.v({{0, 2}, {1, 1}}));
            for (int i = 1; i < n; ++i) e.expected_simple.push_back(b.a(i));
            e.expected_simple.push_back(b.v({{n - 1, 1}, {n, 2}}));
            // D_2^(1) is two copies of A_1^(1); the listed roots give only three nodes
            if (n == 2) e.expected_simple.push_back(b.v({{0, 2}, {1, 1}, {2, 2}}));
            e.expected_delta_factor = 2;
            push(e);
        }
        {
            PiTableEntry e;
            e.row = "A_{2n-1}^(2)";
            e.parent = {F::A, 2 * n - 1, 2};
            e.t = 4;
            e.expected_type = repeat({F::A, 1, 1}, n);
            e.expected_simple = chain(b, b.a(n), n - 1, -1, 2, n);
            Vec a0p = b.run(b.v({{0, 2}, {n, 1}}), 2, n - 1, 2);
            append(e.expected_simple, chain(b, a0p, 1, 1, 2, n));
            e.expected_delta_factor = 2;
            push(e);
        }
        {
            PiTableEntry e;
            e.row = "A_{2n}^(2) t=4";
            e.parent = {F::A, 2 * n, 2};
            e.t = 4;
            e.expected_type = {{F::A, 2 * n - 1, 2}};
            e.expected_simple.push_back(b.v({{0, 2}, {1, 1}}));
            for (int i = 1; i <= n; ++i) e.expected_simple.push_back(b.a(i));
            e.expected_delta_factor = 1;
            push(e);

            PiTableEntry f;
            f.row = "A_{2n}^(2) t=8";
            f.parent = e.parent;
            f.t = 8;
            f.expected_type = repeat({F::A, 1, 1}, n);
            f.expected_simple = chain(b, b.a(n), n - 1, -1, 2, n);
            // 2(2a0 + a1) + 2a2 + ... + 2a_{n-1} + a_n
            Vec a0pp = b.run(b.v({{0, 4}, {1, 2}, {n, 1}}), 2, n - 1, 2);
            append(f.expected_simple, chain(b, a0pp, 1, 1, 2, n));
            f.expected_delta_factor = 2;
            push(f);
        }
    }
    {
        Builder b{5, 0};
        PiTableEntry e;
        e.row = "F_4^(1)";
        e.parent = {F::F, 4, 1};
        e.t = 4;
        e.expected_type = {{F::D, 4, 1}};
        e.expected_simple = {b.a(0), b.a(1), b.a(2), b.v({{2, 1}, {3, 2}}), b.v({{2, 1}, {3, 2}, {4, 2}})};
        e.expected_delta_factor = 1;
        push(e);

        PiTableEntry g;
        g.row = "E_6^(2)";
        g.parent = {F::E, 6, 2};
        g.t = 4;
        g.expected_type = {{F::D, 4, 1}};
        g.expected_simple = {b.v({{0, 2}, {1, 2}, {2, 2}, {3, 1}}), b.a(4), b.a(3), b.v({{3, 1}, {2, 2}}),
                             b.v({{3, 1}, {2, 2}, {1, 2}})};
        g.expected_delta_factor = 2;
        push(g);
    }
    for (int t : {3, 6}) {
        Builder b{3, 0};
        PiTableEntry e;
        e.row = "G_2^(1)";
        e.parent = {F::G, 2, 1};
        e.t = t;
        e.expected_type = {{F::A, 2, 1}};
        e.expected_simple = {b.a(0), b.a(1), b.v({{1, 1}, {2, 3}})};
        e.expected_delta_factor = 1;
        push(e);

        PiTableEntry d;
        d.row = "D_4^(3)";
        d.parent = {F::D, 4, 3};
        d.t = t;
        d.expected_type = {{F::A, 2, 1}};
        d.expected_simple = {b.v({{0, 3}, {1, 3}, {2, 1}}), b.a(2), b.v({{2, 1}, {1, 3}})};
        d.expected_delta_factor = 3;
        push(d);
    }
    for (int t : {4, 8}) {
        Builder b{2, 0};
        PiTableEntry e;
        e.row = "A_2^(2)";
        e.parent = {F::A, 2, 2};
        e.t = t;
        e.expected_type = {{F::A, 1, 1}};
        e.expected_simple = {b.v({{0, 4}, {1, 1}}), b.a(1)};
        e.expected_delta_factor = 2;
        push(e);
    }
    return rows;
}

namespace {

std::vector<PrimitiveTableEntry> primitive_rows_for(int n) {
    std::vector<PrimitiveTableEntry> rows;
    Builder b{n + 1, 0};
    auto add = [&](std::string row, TypeLabel label, int ell, int t, std::vector<Vec> deg, TypeList target) {
        if (!in_catalog(label)) return;
        rows.push_back({std::move(row), label, ell, t, std::move(deg), std::move(target)});
    };
    {
        auto deg = chain(b, b.a(n), n - 1, -1, 1, n);
        Vec a0p = b.run(b.a(0), 2, n, 1);
        append(deg, chain(b, a0p, 1, 1, 1, n));
        add("B_n^(1)", {F::B, n, 1}, 4, 4, deg, repeat({F::A, 1, 1}, n));
    }
    {
        std::vector<Vec> deg{b.v({{0, 1}, {1, 1}})};
        for (int i = 1; i < n; ++i) deg.push_back(b.a(i));
        deg.push_back(b.v({{n - 1, 1}, {n, 1}}));
        // D_2^(1) needs a fourth node
        if (n == 2) deg.push_back(b.v({{0, 1}, {1, 1}, {2, 1}}));
        add("C_n^(1)", {F::C, n, 1}, 4, 4, deg, {{F::D, n, 1}});
    }
    {
        auto deg = chain(b, b.a(n), n - 1, -1, 1, n);
        append(deg, chain(b, b.a(0), 1, 1, 1, n));
        add("D_{n+1}^(2)", {F::D, n + 1, 2}, 4, 4, deg, repeat({F::A, 1, 1}, n));
    }
    {
        std::vector<Vec> deg;
        for (int i = 0; i < n; ++i) deg.push_back(b.a(i));
        deg.push_back(b.v({{n - 1, 1}, {n, 1}}));
        add("A_{2n-1}^(2)", {F::A, 2 * n - 1, 2}, 4, 4, deg, {{F::D, n, 1}});
    }
    {
        auto deg = chain(b, b.a(0), 1, 1, 1, n);
        Vec ann = b.run(b.v({}), 0, n, 1);
        append(deg, chain(b, ann, n - 1, -1, 1, n));
        add("A_{2n}^(2) l=4", {F::A, 2 * n, 2}, 4, 8, deg, repeat({F::A, 1, 1}, n));
    }
    {
        std::vector<Vec> deg{b.v({{n, 1}, {n - 1, 1}})};
        for (int i = n - 1; i >= 0; --i) deg.push_back(b.a(i));
        add("A_{2n}^(2) l=8", {F::A, 2 * n, 2}, 8, 4, deg, {{F::B, n, 1}});
    }
    return rows;
}

std::vector<PrimitiveTableEntry> primitive_fixed_rows() {
    std::vector<PrimitiveTableEntry> rows;
    {
        Builder b{5, 0};
        rows.push_back({"F_4^(1)", {F::F, 4, 1}, 4, 4,
                        {b.v({{0, 1}, {1, 1}, {2, 1}, {3, 1}}), b.a(4), b.a(3), b.v({{3, 1}, {2, 1}}),
                         b.v({{3, 1}, {2, 1}, {1, 1}})},
                        {{F::D, 4, 1}}});
        rows.push_back({"E_6^(2)", {F::E, 6, 2}, 4, 4,
                        {b.a(0), b.a(1), b.a(2), b.v({{2, 1}, {3, 1}}), b.v({{2, 1}, {3, 1}, {4, 1}})},
                        {{F::D, 4, 1}}});
    }
    for (int ell : {3, 6}) {
        Builder b{3, 0};
        rows.push_back({"G_2^(1)", {F::G, 2, 1}, ell, ell,
                        {b.v({{0, 1}, {1, 1}, {2, 1}}), b.a(2), b.v({{2, 1}, {1, 1}})},
                        {{F::A, 2, 1}}});
        rows.push_back({"D_4^(3)", {F::D, 4, 3}, ell, ell, {b.a(0), b.a(1), b.v({{1, 1}, {2, 1}})}, {{F::A, 2, 1}}});
    }
    for (int ell : {4, 8}) {
        Builder b{2, 0};
        rows.push_back({"A_2^(2)", {F::A, 2, 2}, ell, ell, {b.v({{1, 1}, {0, 1}}), b.a(0)}, {{F::A, 1, 1}}});
    }
    return rows;
}

}  // namespace

std::vector<PrimitiveTableEntry> primitive_table(int max_n) {
    std::vector<PrimitiveTableEntry> rows;
    for (int n = 2; n <= max_n; ++n) {
        auto r = primitive_rows_for(n);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    auto f = primitive_fixed_rows();
    rows.insert(rows.end(), f.begin(), f.end());
    return rows;
}

std::optional<PrimitiveTableEntry> primitive_table_entry(const TypeLabel& label, int ell) {
    const int n = datum_size(label) - 1;
    std::vector<PrimitiveTableEntry> rows = primitive_fixed_rows();
    if (n >= 2) {
        auto r = primitive_rows_for(n);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    for (auto& e : rows)
        if (e.label == label && e.ell == ell) return e;
    return std::nullopt;
}

MainRow main_table_row(const TypeLabel& label, int ell) {
    MainRow r;
    const int n = datum_size(label) - 1;
    const auto is = [&](Family f, int rank, int twist) { return label == TypeLabel{f, rank, twist}; };
    const bool A2n2 = label.family == F::A && label.twist == 2 && label.rank % 2 == 0 && label.rank >= 4;
    const bool A2n1_2 = label.family == F::A && label.twist == 2 && label.rank % 2 == 1;
    const TypeList a1sq = repeat({F::A, 1, 0}, 2);
    const TypeList a1_2n = repeat({F::A, 1, 0}, 2 * n);
    r.u = 1;
    if (ell == 1 || ell == 2) {
        r.row = "all l=1,2";
        r.kind = CaseKind::trivial;
        r.u.reset();
        return r;
    }
    if (is(F::A, 1, 1) && ell == 4) {
        r.row = "A_1^(1) l=4";
        r.kind = CaseKind::deaffinized;
        r.m_type = a1sq;
        return r;
    }
    if (ell == 4 && ((label.family == F::B && label.twist == 1) || (label.family == F::D && label.twist == 2))) {
        r.row = "B_n^(1),D_{n+1}^(2) l=4";
        r.kind = CaseKind::deaffinized;
        r.m_type = a1_2n;
        return r;
    }
    if (ell == 4 && ((label.family == F::C && label.twist == 1) || A2n1_2)) {
        r.row = "C_n^(1),A_{2n-1}^(2) l=4";
        r.kind = CaseKind::degenerate;
        r.m_type = {{F::D, n, 1}};
        if (n == 2) {
            // D_2^(1) = A_1^(1) x A_1^(1): read as the deaffinized pattern
            r.kind = CaseKind::deaffinized;
            r.m_type = a1_2n;
            r.note = "n=2: D_2^(1) = (A_1^(1))^2, expected as A_1^(2n)";
        }
        return r;
    }
    if (ell == 4 && (is(F::F, 4, 1) || is(F::E, 6, 2))) {
        r.row = "F_4^(1),E_6^(2) l=4";
        r.kind = CaseKind::degenerate;
        r.m_type = {{F::D, 4, 1}};
        return r;
    }
    if ((ell == 3 || ell == 6) && (is(F::G, 2, 1) || is(F::D, 4, 3))) {
        r.row = "G_2^(2),D_4^(3) l=3,6";
        r.kind = CaseKind::degenerate;
        r.m_type = {{F::A, 2, 1}};
        if (is(F::G, 2, 1)) {
            r.ambiguous = true;
            r.note = "row names G_2^(2), which is not an affine type; read as G_2^(1)";
        }
        return r;
    }
    if (is(F::A, 2, 2) && ell == 4) {
        r.row = "A_2^(2) l=4";
        r.kind = CaseKind::deaffinized;
        r.m_type = a1sq;
        return r;
    }
    if (ell == 8 && (is(F::A, 2, 1) || is(F::A, 2, 2))) {
        r.row = "A_2^(1) l=8";
        r.kind = CaseKind::degenerate;
        r.ambiguous = true;
        r.note = is(F::A, 2, 1) ? "A_2^(1) has no roots of norm 8 and n is undefined in A_1^(2n)"
                                : "the A_2^(1) l=8 row is read as a slip for A_2^(2) l=8; A_1^(2n) undefined";
        return r;
    }
    if (A2n2 && ell == 4) {
        r.row = "A_{2n}^(2) l=4";
        r.kind = CaseKind::deaffinized;
        r.m_type = a1_2n;
        return r;
    }
    if (A2n2 && ell == 8) {
        r.row = "A_{2n}^(2) l=8";
        r.kind = CaseKind::degenerate;
        r.m_type = {{F::A, 2 * n - 1, 2}};
        r.ambiguous = true;
        r.note = "main table gives A_{2n-1}^(2), the primitive-degree table gives B_n^(1)";
        return r;
    }
    if (is(F::A, 2, 2) && (ell == 3 || ell == 6)) {
        r.row = ell == 3 ? "A_2^(2) l=3" : "A_2^(2) l=6";
        r.kind = CaseKind::exotic;
        r.m_type = {{F::A, 2, 1}};
        r.u = ell == 3 ? 1 : 1 + ell / 2;
        return r;
    }
    if (A2n2 && (ell == 3 || ell == 6)) {
        r.row = "A_{2n}^(2) l=3,6";
        r.kind = CaseKind::pseudo_exotic;
        r.m_type = {label};
        return r;
    }
    if (is(F::G, 2, 1) && ell == 4) {
        r.row = "G_2^(1) l=4";
        r.kind = CaseKind::exotic;
        r.m_type = {{F::A, 3, 1}};
        r.u = ell - 1;
        return r;
    }
    if (is(F::D, 4, 3) && ell == 4) {
        r.row = "D_4^(3) l=4";
        r.kind = CaseKind::exotic;
        r.m_type = {{F::D, 4, 1}};
        r.u.reset();
        r.twist = true;
        return r;
    }
    r.row = "generic";
    r.kind = CaseKind::generic;
    r.m_type = {label};
    return r;
}

bool listed_as_nongeneric(const TypeLabel& label, int ell) {
    const auto is = [&](Family f, int rank, int twist) { return label == TypeLabel{f, rank, twist}; };
    const bool A2n2 = label.family == F::A && label.twist == 2 && label.rank % 2 == 0;
    if (ell == 1 || ell == 2) return false;
    if (is(F::A, 1, 1) && ell == 4) return true;
    if (A2n2 && (ell == 3 || ell == 6)) return true;
    if ((is(F::G, 2, 1) || is(F::D, 4, 3)) && (ell == 4 || ell == 3 || ell == 6)) return true;
    if (label.family == F::A && label.twist == 1 && label.rank % 2 == 0) return true;
    if (ell == 4 && ((label.family == F::B && label.twist == 1) || (label.family == F::D && label.twist == 2) || A2n2))
        return true;
    return false;
}

std::vector<DisplayedMatrix> displayed_matrices() {
    std::vector<DisplayedMatrix> out;
    const TypeLabel g2{F::G, 2, 1}, a22{F::A, 2, 2}, d43{F::D, 4, 3}, a11{F::A, 1, 1}, a42{F::A, 4, 2};
    Builder b3{3, 0}, b2{2, 0};
    const std::vector<Vec> g2s{b3.a(0), b3.a(1), b3.a(2)};
    out.push_back({"G_2^(1) l=4 simple", g2, 4, g2s,
                   {{"q^6", "q^-3", "1"}, {"q^-3", "q^6", "q^-3"}, {"1", "q^-3", "q^2"}},
                   {{F::A, 3, 0}}});
    out.push_back({"G_2^(1) l=4 simple (qb form)", g2, 4, g2s,
                   {{"qb^2", "qb^-1", "1"}, {"qb^-1", "qb^2", "qb^-1"}, {"1", "qb^-1", "qb^2"}},
                   {{F::A, 3, 0}}});
    out.push_back({"G_2^(1) l=4 extended", g2, 4, {b3.a(0), b3.a(1), b3.a(2), b3.v({{1, 1}, {2, 2}})},
                   {{"qb^2", "qb^-1", "1", "qb^-1"},
                    {"qb^-1", "qb^2", "qb^-1", "1"},
                    {"1", "qb^-1", "qb^2", "qb^-1"},
                    {"qb^-1", "1", "qb^-1", "qb^2"}},
                   {{F::A, 3, 1}}});
    const std::vector<Vec> a22s{b2.a(0), b2.a(1)};
    const std::vector<Vec> a22e{b2.a(0), b2.a(1), b2.v({{0, 3}, {1, 1}})};
    out.push_back({"A_2^(2) l=3 simple", a22, 3, a22s, {{"q^2", "q^-4"}, {"q^-4", "q^8"}}, {{F::A, 2, 0}}});
    out.push_back({"A_2^(2) l=3 simple (reduced)", a22, 3, a22s, {{"q^2", "q^-1"}, {"q^-1", "q^2"}}, {{F::A, 2, 0}}});
    out.push_back({"A_2^(2) l=6 simple", a22, 6, a22s, {{"q^2", "q^-4"}, {"q^-4", "q^8"}}, {{F::A, 2, 0}}});
    out.push_back({"A_2^(2) l=6 simple (-q form)", a22, 6, a22s,
                   {{"(-q)^2", "(-q)^-1"}, {"(-q)^-1", "(-q)^2"}},
                   {{F::A, 2, 0}}});
    out.push_back({"A_2^(2) l=3 extended", a22, 3, a22e,
                   {{"q^2", "q^-1", "q^-1"}, {"q^-1", "q^2", "q^-1"}, {"q^-1", "q^-1", "q^2"}},
                   {{F::A, 2, 1}}});
    out.push_back({"A_2^(2) l=6 extended", a22, 6, a22e,
                   {{"(-q)^2", "(-q)^-1", "(-q)^-1"}, {"(-q)^-1", "(-q)^2", "(-q)^-1"}, {"(-q)^-1", "(-q)^-1", "(-q)^2"}},
                   {{F::A, 2, 1}}});
    const Vec x112 = b3.v({{1, 2}, {2, 1}});
    const Vec x00112 = b3.v({{0, 2}, {1, 2}, {2, 1}});
    out.push_back({"D_4^(3) l=4 simple", d43, 4, {b3.a(0), b3.a(1), b3.a(2)},
                   {{"q^2", "q^-1", "1"}, {"q^-1", "q^2", "q^-3"}, {"1", "q^-3", "q^6"}},
                   {{F::A, 3, 0}}});
    out.push_back({"D_4^(3) l=4 simple (qb form)", d43, 4, {b3.a(0), b3.a(1), b3.a(2)},
                   {{"q^2", "q^-1", "1"}, {"q^-1", "q^2", "qb^-1"}, {"1", "qb^-1", "q^2"}},
                   {{F::A, 3, 0}}});
    out.push_back({"D_4^(3) l=4 extended 4x4", d43, 4, {b3.a(0), b3.a(1), b3.a(2), x112},
                   {{"q^2", "q^-1", "1", "-1"},
                    {"q^-1", "q^2", "qb^-1", "qb^-1"},
                    {"1", "qb^-1", "q^2", "1"},
                    {"-1", "qb^-1", "1", "q^2"}},
                   {{F::D, 4, 0}},
                   1});
    out.push_back({"D_4^(3) l=4 extended 5x5", d43, 4, {b3.a(0), b3.a(1), b3.a(2), x112, x00112},
                   {{"q^2", "q^-1", "1", "-1", "-1"},
                    {"q^-1", "q^2", "qb^-1", "qb^-1", "q^-1"},
                    {"1", "qb^-1", "q^2", "1", "1"},
                    {"-1", "qb^-1", "1", "q^2", "1"},
                    {"-1", "q^-1", "1", "1", "q^2"}},
                   {{F::D, 4, 1}},
                   1,
                   // (a_112, 2a_0+2a_1+a_2) = -4 + 2, printed as -4 + 4
                   {{3, 4, "-1"}, {4, 3, "-1"}}});
    out.push_back({"A_1^(1) l=4", a11, 4, {b2.a(0), b2.a(1)}, {{"q^2", "q^-2"}, {"q^-2", "q^2"}}, repeat({F::A, 1, 0}, 2)});
    out.push_back({"A_1^(1) l=4 (values)", a11, 4, {b2.a(0), b2.a(1)}, {{"-1", "-1"}, {"-1", "-1"}}, repeat({F::A, 1, 0}, 2)});
    for (int ell : {3, 6})
        out.push_back({"A_4^(2) l=" + std::to_string(ell), a42, ell, {b3.a(0), b3.a(1), b3.a(2)},
                       {{"q^2", "q^-2", "1"}, {"q^-2", "q^4", "q^-4"}, {"1", "q^-4", "q^8"}},
                       {a42}});
    return out;
}

std::optional<ExoticSpec> exotic_spec(const TypeLabel& label, int ell) {
    Builder b3{3, 0}, b2{2, 0};
    if (label == TypeLabel{F::G, 2, 1} && ell == 4)
        return ExoticSpec{label, ell, {b3.v({{1, 1}, {2, 2}})}, {{F::A, 3, 1}}, 1, -1, 3, false};
    if (label == TypeLabel{F::A, 2, 2} && (ell == 3 || ell == 6))
        return ExoticSpec{label, ell, {b2.v({{0, 3}, {1, 1}})}, {{F::A, 2, 1}}, 2, -1, ell == 3 ? 1 : 4, false};
    if (label == TypeLabel{F::D, 4, 3} && ell == 4)
        return ExoticSpec{label,
                          ell,
                          {b3.v({{1, 2}, {2, 1}}), b3.v({{0, 2}, {1, 2}, {2, 1}})},
                          {{F::D, 4, 1}},
                          3,
                          1,
                          std::nullopt,
                          false};
    if (label.family == F::A && label.twist == 2 && label.rank % 2 == 0 && label.rank >= 4 && (ell == 3 || ell == 6))
        return ExoticSpec{label, ell, {}, {label}, 1, -1, 1, true};
    if (label == TypeLabel{F::A, 1, 1} && ell == 4)
        return ExoticSpec{label, ell, {}, repeat({F::A, 1, 0}, 2), 0, -1, std::nullopt, false};
    return std::nullopt;
}

}  // namespace qaff
