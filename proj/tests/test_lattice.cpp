#include "qaff/lattice.hpp"

#include <doctest.h>

using namespace qaff;

TEST_CASE("vector arithmetic") {
    CHECK(add({1, 2}, {3, -2}) == Vec{4, 0});
    CHECK(sub({1, 2}, {3, -2}) == Vec{-2, 4});
    CHECK(scale(-3, {1, 0, 2}) == Vec{-3, 0, -6});
    CHECK(is_zero(Vec{0, 0}));
    CHECK(primitive({4, -6, 2}) == Vec{2, -3, 1});
    CHECK(gcd_of({0, 0}) == 0);
    CHECK(nonneg({0, 1, 2}));
    CHECK_FALSE(nonneg({0, -1, 2}));
}

TEST_CASE("cartan_of rejects fractional and isotropic entries") {
    Mat form{{2, -1}, {-1, 2}};
    auto c = cartan_of(form, {{1, 0}, {0, 1}});
    REQUIRE(c);
    CHECK(*c == Mat{{2, -1}, {-1, 2}});
    Mat b2{{2, -2}, {-2, 4}};
    CHECK(*cartan_of(b2, {{1, 0}, {0, 1}}) == Mat{{2, -2}, {-1, 2}});
    Mat bad{{4, -1}, {-1, 2}};
    CHECK_FALSE(cartan_of(bad, {{1, 0}, {0, 1}}));
    Mat affine{{2, -2}, {-2, 2}};
    CHECK_FALSE(cartan_of(affine, {{1, 1}}));
}

TEST_CASE("integer kernel") {
    auto k = integer_kernel({{2, -2}, {-2, 2}});
    REQUIRE(k.size() == 1);
    CHECK((k[0] == Vec{1, 1} || k[0] == Vec{-1, -1}));
    CHECK(integer_kernel({{2, -1}, {-1, 2}}).empty());
    auto k2 = integer_kernel({{1, 2, 3}});
    CHECK(k2.size() == 2);
    for (const auto& v : k2) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
}

TEST_CASE("solve_rational") {
    auto x = solve_rational({{2, 0}, {0, 3}}, {1, 1});
    REQUIRE(x);
    CHECK((*x)[0] == Rational(1, 2));
    CHECK((*x)[1] == Rational(1, 3));
    CHECK_FALSE(solve_rational({{1, 1}, {2, 2}}, {1, 1}));
}

TEST_CASE("root strings") {
    CHECK(root_string({2, 0, 1}) == "2a0+a2");
    CHECK(root_string({1, -1}, 1) == "a1-a2");
    CHECK(root_string({0, 0}) == "0");
}
