#include "qaff/braiding.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qaff {

Int mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

UnityExp::UnityExp(int ell_, Int e_) : ell(ell_), e(mod(e_, ell_)) {}

int UnityExp::order() const { return ell / static_cast<int>(std::gcd<Int>(ell, e)); }

int ell_alpha(int ell, Int norm) { return ell / static_cast<int>(std::gcd<Int>(ell, norm < 0 ? -norm : norm)); }

BraidingMat braiding_matrix(const CartanDatum& d, const std::vector<Vec>& degrees, int ell) {
    if (degrees.empty()) throw std::invalid_argument("braiding matrix needs at least one degree");
    BraidingMat b;
    b.ell = ell;
    b.degrees = degrees;
    const size_t m = degrees.size();
    b.exps.assign(m, Vec(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) b.exps[i][j] = mod(d.pair(degrees[i], degrees[j]), ell);
    return b;
}

GcmResult heckenberger_gcm(const BraidingMat& b) {
    GcmResult r;
    const int m = b.size();
    const Int ell = b.ell;
    r.gcm.assign(m, Vec(m, 0));
    for (int i = 0; i < m; ++i) {
        r.gcm[i][i] = 2;
        const int ord = b.at(i, i).order();
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            const Int mixed = b.exps[i][j] + b.exps[j][i];
            Int found = -1;
            for (Int k = 0; k < ell && found < 0; ++k)
                if ((ord > 1 && (k + 1) % ord == 0) || mod(k * b.exps[i][i] + mixed, ell) == 0) found = k;
            if (found < 0) {
                r.error = "no finite m_" + std::to_string(i) + std::to_string(j);
                return r;
            }
            r.gcm[i][j] = -found;
        }
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if ((r.gcm[i][j] == 0) != (r.gcm[j][i] == 0)) {
                r.error = "asymmetric zero pattern";
                return r;
            }
    r.ok = true;
    return r;
}

Mat product_form(const TypeList& ts) {
    int total = 0;
    for (const auto& t : ts) total += datum_size(t);
    Mat f(total, Vec(total, 0));
    int off = 0;
    for (const auto& t : ts) {
        const auto& d = datum(t);
        for (int i = 0; i < d.size; ++i)
            for (int j = 0; j < d.size; ++j) f[off + i][off + j] = d.form[i][j];
        off += d.size;
    }
    return f;
}

std::optional<StandardForm> standard_braiding_parameter(const BraidingMat& b, const TypeList& candidate) {
    const Mat form = product_form(candidate);
    const int m = b.size();
    if (static_cast<int>(form.size()) != m) return std::nullopt;
    std::vector<int> us;
    for (int u = 1; u < b.ell; ++u) us.push_back(u);
    us.push_back(0);
    for (int u : us) {
        std::vector<int> perm(m, -1);
        std::vector<bool> used(m, false);
        auto rec = [&](auto&& self, int j) -> bool {
            if (j == m) return true;
            for (int c = 0; c < m; ++c) {
                if (used[c]) continue;
                bool ok = true;
                for (int k = 0; k <= j && ok; ++k) {
                    const int ck = k == j ? c : perm[k];
                    ok = mod(b.exps[c][ck] - u * form[j][k], b.ell) == 0 &&
                         mod(b.exps[ck][c] - u * form[k][j], b.ell) == 0;
                }
                if (!ok) continue;
                used[c] = true;
                perm[j] = c;
                if (self(self, j + 1)) return true;
                used[c] = false;
            }
            return false;
        };
        if (rec(rec, 0)) return StandardForm{u, perm};
    }
    return std::nullopt;
}

LusztigResult lusztig_condition(const Mat& gcm, const std::vector<int>& l_alpha) {
    LusztigResult r;
    const int m = static_cast<int>(gcm.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j || l_alpha[j] < 2) continue;
            if (l_alpha[i] < -gcm[i][j] + 1) {
                r.condA = false;
                r.violations.emplace_back(i, j);
            }
        }
    return r;
}

LusztigResult lusztig_condition(const CartanDatum& d, int ell) {
    std::vector<int> la;
    for (int i = 0; i < d.size; ++i) la.push_back(ell_alpha(ell, d.form[i][i]));
    LusztigResult r = lusztig_condition(d.cartan, la);
    r.condB = !(d.label.family == Family::A && d.label.twist == 1 && d.label.rank % 2 == 0);
    return r;
}

bool commutator_primitive(int ell, const Vec& alpha, const Vec& beta, const CartanDatum& d) {
    return mod(2 * d.pair(alpha, beta), ell) == 0;
}

std::optional<Int> parse_unity(const std::string& raw, int ell) {
    std::string s;
    for (char c : raw)
        if (c != ' ') s += c;
    if (s == "1") return 0;
    if (s == "-1") {
        if (ell % 2) return std::nullopt;
        return ell / 2;
    }
    Int base;
    std::string rest;
    if (s.rfind("(-q)", 0) == 0) {
        if (ell % 2) return std::nullopt;
        base = 1 + ell / 2;
        rest = s.substr(4);
    } else if (s.rfind("qb", 0) == 0) {
        base = -1;
        rest = s.substr(2);
    } else if (s.rfind("q", 0) == 0) {
        base = 1;
        rest = s.substr(1);
    } else {
        return std::nullopt;
    }
    Int k = 1;
    if (!rest.empty()) {
        if (rest[0] != '^') return std::nullopt;
        try {
            size_t used = 0;
            k = std::stoll(rest.substr(1), &used);
            if (used + 1 != rest.size()) return std::nullopt;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return mod(base * k, ell);
}

std::string unity_string(const UnityExp& x) {
    if (x.e == 0) return "1";
    return "q^" + std::to_string(x.e);
}

}  // namespace qaff
