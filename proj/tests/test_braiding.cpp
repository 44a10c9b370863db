#include "qaff/braiding.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace qaff;

namespace {

using C = std::complex<double>;

C root_of_unity(int ell, Int e) { return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(e) / ell); }

// Least m with (m+1)_{qii} (qii^m qij qji - 1) = 0, in floating point.
int float_m(int ell, Int eii, Int eij, Int eji) {
    const C qii = root_of_unity(ell, eii), mixed = root_of_unity(ell, eij + eji);
    for (int m = 0; m < 4 * ell; ++m) {
        C qint = 0, p = 1;
        for (int k = 0; k <= m; ++k) qint += p, p *= qii;
        C rest = std::pow(qii, m) * mixed - 1.0;
        if (std::abs(qint * rest) < 1e-9) return m;
    }
    return -1;
}

int brute_ell_alpha(int ell, Int norm) {
    for (int r = 1;; ++r)
        if ((r * norm) % ell == 0) return r;
}

}  // namespace

TEST_CASE("ell_alpha matches the least r with q^(r norm) = 1") {
    for (int ell = 1; ell <= 16; ++ell)
        for (Int norm : {2, 4, 6, 8, 12}) CHECK(ell_alpha(ell, norm) == brute_ell_alpha(ell, norm));
}

TEST_CASE("Heckenberger entries agree with a complex-number evaluation") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        const int ell = 3 + static_cast<int>(rng() % 12);
        const int m = 2 + static_cast<int>(rng() % 3);
        BraidingMat b;
        b.ell = ell;
        b.exps.assign(m, Vec(m, 0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j <= i; ++j) b.exps[i][j] = b.exps[j][i] = rng() % ell;
        b.degrees.assign(m, Vec{});
        auto r = heckenberger_gcm(b);
        bool finite = true;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (i == j) continue;
                int fm = float_m(ell, b.exps[i][i], b.exps[i][j], b.exps[j][i]);
                finite = finite && fm >= 0 && fm < ell;
                if (r.ok) CHECK(r.gcm[i][j] == -fm);
            }
        if (!finite) CHECK_FALSE(r.ok);
    }
}

TEST_CASE("generic roots of unity reproduce the Cartan matrix") {
    for (const auto& t : affine_labels(6)) {
        const auto& d = datum(t);
        std::vector<Vec> simple;
        for (int i = 0; i < d.size; ++i) simple.push_back(d.simple(i));
        for (int ell : {7, 9, 11, 13}) {
            auto r = heckenberger_gcm(braiding_matrix(d, simple, ell));
            REQUIRE(r.ok);
            CHECK(r.gcm == d.cartan);
        }
    }
}

TEST_CASE("A1^(1) at l=4 splits into A1 x A1") {
    const auto& d = datum({Family::A, 1, 1});
    auto b = braiding_matrix(d, {{1, 0}, {0, 1}}, 4);
    auto r = heckenberger_gcm(b);
    REQUIRE(r.ok);
    CHECK(r.gcm == Mat{{2, 0}, {0, 2}});
    CHECK_FALSE(lusztig_condition(d, 4).condA);
    CHECK(lusztig_condition(d, 5).condA);
}

TEST_CASE("standard braiding parameter") {
    const auto& d = datum({Family::G, 2, 1});
    auto b = braiding_matrix(d, {d.simple(0), d.simple(1), d.simple(2)}, 7);
    auto s = standard_braiding_parameter(b, {d.label});
    REQUIRE(s);
    CHECK(s->u == 1);
    auto s2 = standard_braiding_parameter(b, {TypeLabel{Family::A, 3, 0}});
    CHECK_FALSE(s2);
}

TEST_CASE("Lusztig condition b) fails exactly for A_n^(1), n even") {
    for (const auto& t : affine_labels(6))
        CHECK(lusztig_condition(datum(t), 7).condB == !(t.family == Family::A && t.twist == 1 && t.rank % 2 == 0));
}

TEST_CASE("parse_unity") {
    CHECK(parse_unity("1", 4) == 0);
    CHECK(parse_unity("-1", 4) == 2);
    CHECK_FALSE(parse_unity("-1", 3));
    CHECK(parse_unity("q^-1", 4) == 3);
    CHECK(parse_unity("qb^-1", 4) == 1);
    CHECK(parse_unity("q", 6) == 1);
    CHECK(parse_unity("(-q)^2", 6) == 2 * 4 % 6);
    CHECK_FALSE(parse_unity("x", 4));
    CHECK_FALSE(parse_unity("q^2a", 4));
}

TEST_CASE("commutator primitivity") {
    const auto& d = datum({Family::A, 1, 1});
    CHECK(commutator_primitive(4, d.simple(0), d.simple(1), d));
    CHECK_FALSE(commutator_primitive(3, d.simple(0), d.simple(1), d));
}
