#include "qaff/lattice.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qaff {

Vec unit(int size, int i) {
    Vec v(size, 0);
    v.at(i) = 1;
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(Int c, const Vec& a) {
    Vec r(a);
    for (auto& x : r) x *= c;
    return r;
}

Vec neg(const Vec& a) { return scale(-1, a); }

bool is_zero(const Vec& a) {
    for (Int x : a)
        if (x != 0) return false;
    return true;
}

Int pairing(const Mat& form, const Vec& a, const Vec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        Int row = 0;
        for (size_t j = 0; j < b.size(); ++j) row += form[i][j] * b[j];
        s += a[i] * row;
    }
    return s;
}

Int gcd_of(const Vec& a) {
    Int g = 0;
    for (Int x : a) g = std::gcd(g, x);
    return g;
}

Vec primitive(const Vec& a) {
    Int g = gcd_of(a);
    if (g == 0) return a;
    Vec r(a);
    for (auto& x : r) x /= g;
    return r;
}

bool nonneg(const Vec& a) {
    for (Int x : a)
        if (x < 0) return false;
    return true;
}

Mat transpose(const Mat& m) {
    if (m.empty()) return m;
    Mat t(m[0].size(), Vec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

Mat submatrix(const Mat& m, const std::vector<int>& idx) {
    Mat r(idx.size(), Vec(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) r[i][j] = m[idx[i]][idx[j]];
    return r;
}

std::optional<Mat> cartan_of(const Mat& form, const std::vector<Vec>& roots) {
    const size_t k = roots.size();
    Mat g(k, Vec(k));
    for (size_t i = 0; i < k; ++i) {
        Int ni = pairing(form, roots[i], roots[i]);
        if (ni == 0) return std::nullopt;
        for (size_t j = 0; j < k; ++j) {
            Int num = 2 * pairing(form, roots[i], roots[j]);
            if (num % ni != 0) return std::nullopt;
            g[i][j] = num / ni;
        }
    }
    return g;
}

namespace {

using RMat = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RMat& a, size_t cols) {
    std::vector<int> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < a.size(); ++c) {
        size_t p = r;
        while (p < a.size() && a[p][c].numerator() == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        Rational inv = Rational(1) / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c].numerator() == 0) continue;
            Rational f = a[i][c];
            for (size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

}  // namespace

std::vector<Vec> integer_kernel(const Mat& m) {
    if (m.empty()) return {};
    const size_t cols = m[0].size();
    RMat a(m.size(), std::vector<Rational>(cols));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
    auto piv = rref(a, cols);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;

    std::vector<Vec> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> x(cols, 0);
        x[f] = 1;
        for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -a[r][f];
        Int den = 1;
        for (auto& q : x) den = std::lcm(den, q.denominator());
        Vec v(cols);
        for (size_t i = 0; i < cols; ++i) v[i] = x[i].numerator() * (den / x[i].denominator());
        basis.push_back(primitive(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve_rational(const Mat& rows, const Vec& rhs) {
    if (rows.empty()) return std::vector<Rational>{};
    const size_t cols = rows[0].size();
    RMat a(rows.size(), std::vector<Rational>(cols + 1));
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < cols; ++j) a[i][j] = rows[i][j];
        a[i][cols] = rhs[i];
    }
    auto piv = rref(a, cols + 1);
    if (!piv.empty() && piv.back() == static_cast<int>(cols)) return std::nullopt;
    std::vector<Rational> x(cols, 0);
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a[r][cols];
    return x;
}

std::string to_string(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string to_string(const Mat& m) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << to_string(m[i]);
    os << ']';
    return os.str();
}

std::string root_string(const Vec& v, int first_index, bool ascii) {
    std::ostringstream os;
    bool first = true;
    const char* a = ascii ? "a" : "α";
    for (size_t i = 0; i < v.size(); ++i) {
        Int c = v[i];
        if (c == 0) continue;
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        Int m = c < 0 ? -c : c;
        if (m != 1) os << m;
        os << a << (static_cast<int>(i) + first_index);
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace qaff
