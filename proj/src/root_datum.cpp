#include "qaff/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qaff {

char family_char(Family f) { return static_cast<char>('A' + static_cast<int>(f)); }

std::string to_string(const TypeLabel& t) {
    std::string s = family_char(t.family) + std::to_string(t.rank);
    if (t.twist) s += "~" + std::to_string(t.twist);
    return s;
}

std::string to_string(const TypeList& ts) {
    if (ts.empty()) return "{0}";
    std::string s;
    for (size_t i = 0; i < ts.size(); ++i) s += (i ? " x " : "") + to_string(ts[i]);
    return s;
}

std::string pretty(const TypeLabel& t) {
    std::string s = family_char(t.family) + std::to_string(t.rank);
    if (t.twist) s += "^(" + std::to_string(t.twist) + ")";
    return s;
}

std::optional<TypeLabel> parse_label(std::string_view s) {
    if (s.size() < 2) return std::nullopt;
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c < 'A' || c > 'G') return std::nullopt;
    TypeLabel t;
    t.family = static_cast<Family>(c - 'A');
    size_t i = 1;
    int rank = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        rank = rank * 10 + (s[i] - '0');
        if (rank > 1000) return std::nullopt;
        ++i;
    }
    if (i == 1) return std::nullopt;
    t.rank = rank;
    if (i < s.size()) {
        if (s[i] != '~' || i + 2 != s.size()) return std::nullopt;
        char d = s[i + 1];
        if (d < '1' || d > '3') return std::nullopt;
        t.twist = d - '0';
    }
    if (!buildable(t)) return std::nullopt;
    return t;
}

int datum_size(const TypeLabel& t) {
    switch (t.twist) {
        case 0: return t.rank;
        case 1: return t.rank + 1;
        case 2:
            if (t.family == Family::A) return t.rank % 2 == 0 ? t.rank / 2 + 1 : (t.rank + 1) / 2 + 1;
            if (t.family == Family::D) return t.rank;
            if (t.family == Family::E) return 5;
            return 0;
        case 3: return 3;
        default: return 0;
    }
}

bool in_catalog(const TypeLabel& t) {
    const int r = t.rank;
    switch (t.twist) {
        case 0:
        case 1:
            switch (t.family) {
                case Family::A: return r >= 1;
                case Family::B: return t.twist ? r >= 3 : r >= 2;
                case Family::C: return t.twist ? r >= 2 : r >= 3;
                case Family::D: return r >= 4;
                case Family::E: return r >= 6 && r <= 8;
                case Family::F: return r == 4;
                case Family::G: return r == 2;
            }
            return false;
        case 2:
            if (t.family == Family::A) return r == 2 || (r % 2 == 0 && r >= 4) || (r % 2 == 1 && r >= 5);
            if (t.family == Family::D) return r >= 3;
            if (t.family == Family::E) return r == 6;
            return false;
        case 3: return t.family == Family::D && r == 4;
        default: return false;
    }
}

bool buildable(const TypeLabel& t) {
    return in_catalog(t) || (t.family == Family::C && t.rank == 2 && t.twist == 0);
}

namespace {

struct Diagram {
    std::vector<Int> norms;
    std::vector<std::tuple<int, int, Int>> edges;

    void shift(int by) {
        norms.insert(norms.begin(), by, 0);
        for (auto& [i, j, b] : edges) i += by, j += by;
    }
    void edge(int i, int j, Int b) { edges.emplace_back(i, j, b); }
};

// Node i of the result is alpha_{i+1}.
Diagram finite_diagram(Family f, int n) {
    Diagram d;
    switch (f) {
        case Family::A:
            d.norms.assign(n, 2);
            for (int i = 0; i + 1 < n; ++i) d.edge(i, i + 1, -1);
            break;
        case Family::B:
            d.norms.assign(n, 4);
            d.norms[n - 1] = 2;
            for (int i = 0; i + 1 < n; ++i) d.edge(i, i + 1, -2);
            break;
        case Family::C:
            d.norms.assign(n, 2);
            d.norms[n - 1] = 4;
            for (int i = 0; i + 2 < n; ++i) d.edge(i, i + 1, -1);
            d.edge(n - 2, n - 1, -2);
            break;
        case Family::D:
            d.norms.assign(n, 2);
            for (int i = 0; i + 2 < n; ++i) d.edge(i, i + 1, -1);
            d.edge(n - 3, n - 1, -1);
            break;
        case Family::E:
            d.norms.assign(n, 2);
            d.edge(0, 2, -1);
            d.edge(1, 3, -1);
            for (int i = 2; i + 1 < n; ++i) d.edge(i, i + 1, -1);
            break;
        case Family::F:
            d.norms = {4, 4, 2, 2};
            d.edge(0, 1, -2);
            d.edge(1, 2, -2);
            d.edge(2, 3, -1);
            break;
        case Family::G:
            d.norms = {6, 2};
            d.edge(0, 1, -3);
            break;
    }
    return d;
}

Diagram untwisted_diagram(Family f, int n) {
    Diagram d = finite_diagram(f, n);
    d.shift(1);
    switch (f) {
        case Family::A:
            d.norms[0] = 2;
            if (n == 1) {
                d.edge(0, 1, -2);
            } else {
                d.edge(0, 1, -1);
                d.edge(0, n, -1);
            }
            break;
        case Family::B: d.norms[0] = 4, d.edge(0, 2, -2); break;
        case Family::C: d.norms[0] = 4, d.edge(0, 1, -2); break;
        case Family::D: d.norms[0] = 2, d.edge(0, 2, -1); break;
        case Family::E:
            d.norms[0] = 2;
            d.edge(0, n == 6 ? 2 : n == 7 ? 1 : 8, -1);
            break;
        case Family::F: d.norms[0] = 4, d.edge(0, 1, -2); break;
        case Family::G: d.norms[0] = 6, d.edge(0, 1, -3); break;
    }
    return d;
}

Diagram twisted_diagram(const TypeLabel& t) {
    Diagram d;
    const int size = datum_size(t);
    const int n = size - 1;
    if (t.twist == 3) {
        d.norms = {2, 2, 6};
        d.edge(0, 1, -1);
        d.edge(1, 2, -3);
        return d;
    }
    switch (t.family) {
        case Family::D:
            // alpha_0 and alpha_n short, the chain between them long
            d.norms.assign(size, 4);
            d.norms[0] = d.norms[n] = 2;
            for (int i = 0; i < n; ++i) d.edge(i, i + 1, -2);
            break;
        case Family::E:
            d.norms = {2, 2, 2, 4, 4};
            d.edge(0, 1, -1);
            d.edge(1, 2, -1);
            d.edge(2, 3, -2);
            d.edge(3, 4, -2);
            break;
        case Family::A:
            if (t.rank == 2) {
                d.norms = {2, 8};
                d.edge(0, 1, -4);
            } else if (t.rank % 2 == 1) {
                d = finite_diagram(Family::C, n);
                d.shift(1);
                d.norms[0] = 2;
                d.edge(0, 2, -1);
            } else {
                d.norms.assign(size, 4);
                d.norms[0] = 2;
                d.norms[n] = 8;
                for (int i = 0; i + 1 < n; ++i) d.edge(i, i + 1, -2);
                d.edge(n - 1, n, -4);
            }
            break;
        default: break;
    }
    return d;
}

Mat form_of(const Diagram& d) {
    const size_t m = d.norms.size();
    Mat b(m, Vec(m, 0));
    for (size_t i = 0; i < m; ++i) b[i][i] = d.norms[i];
    for (auto [i, j, v] : d.edges) b[i][j] = b[j][i] = v;
    return b;
}

}  // namespace

CartanDatum build_datum(const TypeLabel& t) {
    if (!buildable(t)) throw std::invalid_argument("unknown or out-of-range type " + to_string(t));
    Diagram dg;
    if (t.twist == 0)
        dg = finite_diagram(t.family, t.rank);
    else if (t.twist == 1)
        dg = untwisted_diagram(t.family, t.rank);
    else
        dg = twisted_diagram(t);

    CartanDatum d;
    d.label = t;
    d.form = form_of(dg);
    d.size = static_cast<int>(d.form.size());
    d.cartan.assign(d.size, Vec(d.size));
    for (int i = 0; i < d.size; ++i) {
        const Int bii = d.form[i][i];
        for (int j = 0; j < d.size; ++j) {
            if ((2 * d.form[i][j]) % bii != 0) throw std::logic_error("non-integral Cartan entry in " + to_string(t));
            d.cartan[i][j] = 2 * d.form[i][j] / bii;
        }
        d.s = std::max<int>(d.s, static_cast<int>(bii));
    }
    if (t.twist) {
        d.k = t.twist;
        auto ker = integer_kernel(d.cartan);
        if (ker.size() != 1) throw std::logic_error("corank != 1 for " + to_string(t));
        Vec m = ker[0];
        if (m[0] < 0) m = neg(m);
        for (Int x : m)
            if (x <= 0) throw std::logic_error("kernel vector not positive for " + to_string(t));
        d.marks = m;
        d.a0 = static_cast<int>(m[0]);
    }
    return d;
}

const CartanDatum& datum(const TypeLabel& t) {
    static std::mutex mu;
    static std::map<TypeLabel, std::unique_ptr<CartanDatum>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, std::make_unique<CartanDatum>(build_datum(t))).first;
    return *it->second;
}

std::vector<CatalogEntry> catalog() {
    using F = Family;
    return {
        {F::A, 0, "A_n", "n >= 1", 1, 1},
        {F::B, 0, "B_n", "n >= 2", 2, 1},
        {F::C, 0, "C_n", "n >= 3", 3, 1},
        {F::D, 0, "D_n", "n >= 4", 4, 1},
        {F::E, 0, "E_6", "", 6, 0},
        {F::E, 0, "E_7", "", 7, 0},
        {F::E, 0, "E_8", "", 8, 0},
        {F::F, 0, "F_4", "", 4, 0},
        {F::G, 0, "G_2", "", 2, 0},
        {F::A, 1, "A_1^(1)", "", 1, 0},
        {F::A, 1, "A_n^(1)", "n >= 2", 2, 1},
        {F::B, 1, "B_n^(1)", "n >= 3", 3, 1},
        {F::C, 1, "C_n^(1)", "n >= 2", 2, 1},
        {F::D, 1, "D_n^(1)", "n >= 4", 4, 1},
        {F::E, 1, "E_6^(1)", "", 6, 0},
        {F::E, 1, "E_7^(1)", "", 7, 0},
        {F::E, 1, "E_8^(1)", "", 8, 0},
        {F::F, 1, "F_4^(1)", "", 4, 0},
        {F::G, 1, "G_2^(1)", "", 2, 0},
        {F::D, 2, "D_{n+1}^(2)", "n >= 2", 3, 1},
        {F::A, 2, "A_{2n-1}^(2)", "n >= 3", 5, 2},
        {F::E, 2, "E_6^(2)", "", 6, 0},
        {F::D, 3, "D_4^(3)", "", 4, 0},
        {F::A, 2, "A_2^(2)", "", 2, 0},
        {F::A, 2, "A_{2n}^(2)", "n >= 2", 4, 2},
    };
}

namespace {

TypeList labels_where(bool affine, int max_n) {
    TypeList out;
    for (const auto& e : catalog()) {
        if ((e.twist != 0) != affine) continue;
        for (int r = e.min_rank;; r += e.step) {
            TypeLabel t{e.family, r, e.twist};
            int n = affine ? datum_size(t) - 1 : datum_size(t);
            if (n > max_n) break;
            out.push_back(t);
            if (e.step == 0) break;
        }
    }
    return out;
}

}  // namespace

TypeList affine_labels(int max_n) { return labels_where(true, max_n); }
TypeList finite_labels(int max_n) { return labels_where(false, max_n); }

Duality dual_datum(const TypeLabel& t) {
    if (!t.affine() || !in_catalog(t)) throw std::invalid_argument("duality needs an affine catalog type, got " + to_string(t));
    const int size = datum_size(t);
    Duality r;
    r.perm.resize(size);
    std::iota(r.perm.begin(), r.perm.end(), 0);
    const int n = size - 1;
    using F = Family;
    switch (t.twist) {
        case 1:
            switch (t.family) {
                case F::B: r.dual = {F::A, 2 * n - 1, 2}; break;
                case F::C: r.dual = {F::D, n + 1, 2}; break;
                case F::F: r.dual = {F::E, 6, 2}; break;
                case F::G: r.dual = {F::D, 4, 3}; break;
                default: r.dual = t; break;
            }
            break;
        case 2:
            switch (t.family) {
                case F::D: r.dual = {F::C, n, 1}; break;
                case F::E: r.dual = {F::F, 4, 1}; break;
                case F::A:
                    if (t.rank % 2 == 1) {
                        r.dual = {F::B, n, 1};
                    } else {
                        r.dual = t;
                        for (int i = 0; i <= n; ++i) r.perm[i] = n - i;
                    }
                    break;
                default: break;
            }
            break;
        case 3: r.dual = {F::G, 2, 1}; break;
    }
    return r;
}

TypeList canonical(const TypeLabel& t) {
    using F = Family;
    const int r = t.rank;
    if (t.twist == 0) {
        if ((t.family == F::B || t.family == F::C) && r == 1) return {{F::A, 1, 0}};
        if (t.family == F::C && r == 2) return {{F::B, 2, 0}};
        if (t.family == F::D && r == 3) return {{F::A, 3, 0}};
        if (t.family == F::D && r == 2) return {{F::A, 1, 0}, {F::A, 1, 0}};
    } else if (t.twist == 1) {
        if (t.family == F::D && r == 3) return {{F::A, 3, 1}};
        if (t.family == F::D && r == 2) return {{F::A, 1, 1}, {F::A, 1, 1}};
        if (t.family == F::B && r == 2) return {{F::C, 2, 1}};
        if ((t.family == F::B || t.family == F::C) && r == 1) return {{F::A, 1, 1}};
    } else if (t.twist == 2) {
        if (t.family == F::A && r == 3) return {{F::D, 3, 2}};
    }
    return {t};
}

namespace {

// size first, then family, twist, rank
bool label_less(const TypeLabel& a, const TypeLabel& b) {
    auto key = [](const TypeLabel& t) { return std::make_tuple(datum_size(t), t.family, t.twist, t.rank); };
    return key(a) < key(b);
}

}  // namespace

TypeList canonical(const TypeList& ts) {
    TypeList out;
    for (const auto& t : ts)
        for (const auto& c : canonical(t)) out.push_back(c);
    std::stable_sort(out.begin(), out.end(), label_less);
    return out;
}

bool same_type(const TypeList& a, const TypeList& b) { return canonical(a) == canonical(b); }

bool Identification::recognized() const {
    for (const auto& c : components)
        if (!c.label) return false;
    return true;
}

TypeList Identification::labels() const {
    TypeList out;
    for (const auto& c : components)
        if (c.label) out.push_back(*c.label);
    return out;
}

std::string Identification::str() const {
    if (components.empty()) return "{0}";
    std::string s;
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) s += " x ";
        s += components[i].label ? to_string(*components[i].label) : "unrecognized" + to_string(components[i].matrix);
    }
    return s;
}

namespace {

TypeList candidates_of_size(int m) {
    TypeList out;
    for (const auto& t : finite_labels(m))
        if (datum_size(t) == m) out.push_back(t);
    for (const auto& t : affine_labels(m - 1))
        if (datum_size(t) == m) out.push_back(t);
    return out;
}

// Signature invariant under simultaneous permutation.
std::vector<Vec> row_signature(const Mat& g) {
    std::vector<Vec> rows;
    for (size_t i = 0; i < g.size(); ++i) {
        Vec r = g[i];
        Vec c;
        for (size_t j = 0; j < g.size(); ++j) c.push_back(g[j][i]);
        std::sort(r.begin(), r.end());
        std::sort(c.begin(), c.end());
        r.insert(r.end(), c.begin(), c.end());
        rows.push_back(r);
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

// Find sigma with pattern[j][k] == g[sigma j][sigma k].
bool match(const Mat& pattern, const Mat& g, std::vector<int>& sigma) {
    const int m = static_cast<int>(g.size());
    // visit pattern nodes in BFS order so each new node has an assigned neighbour
    std::vector<int> order;
    std::vector<bool> seen(m, false);
    for (int s = 0; s < m; ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        order.push_back(s);
        for (size_t h = order.size() - 1; h < order.size(); ++h)
            for (int k = 0; k < m; ++k)
                if (!seen[k] && pattern[order[h]][k] != 0) seen[k] = true, order.push_back(k);
    }
    sigma.assign(m, -1);
    std::vector<bool> used(m, false);
    auto rec = [&](auto&& self, int pos) -> bool {
        if (pos == m) return true;
        const int j = order[pos];
        for (int c = 0; c < m; ++c) {
            if (used[c] || g[c][c] != pattern[j][j]) continue;
            bool ok = true;
            for (int q = 0; q < pos && ok; ++q) {
                const int jj = order[q];
                ok = pattern[j][jj] == g[c][sigma[jj]] && pattern[jj][j] == g[sigma[jj]][c];
            }
            if (!ok) continue;
            used[c] = true;
            sigma[j] = c;
            if (self(self, pos + 1)) return true;
            used[c] = false;
            sigma[j] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

Identification identify_type(const Mat& g) {
    const int m = static_cast<int>(g.size());
    std::vector<int> comp(m, -1);
    std::vector<std::vector<int>> groups;
    for (int s = 0; s < m; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> nodes{s};
        comp[s] = static_cast<int>(groups.size());
        for (size_t h = 0; h < nodes.size(); ++h)
            for (int k = 0; k < m; ++k)
                if (comp[k] < 0 && (g[nodes[h]][k] != 0 || g[k][nodes[h]] != 0)) {
                    comp[k] = comp[s];
                    nodes.push_back(k);
                }
        std::sort(nodes.begin(), nodes.end());
        groups.push_back(nodes);
    }

    Identification id;
    for (const auto& nodes : groups) {
        Component c;
        c.matrix = submatrix(g, nodes);
        c.nodes = nodes;
        const int size = static_cast<int>(nodes.size());
        const auto sig = row_signature(c.matrix);
        for (const auto& cand : candidates_of_size(size)) {
            const auto& d = datum(cand);
            if (row_signature(d.cartan) != sig) continue;
            std::vector<int> sigma;
            if (match(d.cartan, c.matrix, sigma)) {
                c.label = cand;
                for (int j = 0; j < size; ++j) c.nodes[j] = nodes[sigma[j]];
                break;
            }
        }
        id.components.push_back(std::move(c));
    }
    std::stable_sort(id.components.begin(), id.components.end(), [](const Component& a, const Component& b) {
        if (a.label.has_value() != b.label.has_value()) return a.label.has_value();
        if (a.label && *a.label != *b.label) return label_less(*a.label, *b.label);
        return *std::min_element(a.nodes.begin(), a.nodes.end()) < *std::min_element(b.nodes.begin(), b.nodes.end());
    });
    return id;
}

}  // namespace qaff
