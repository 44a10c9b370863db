#include "qaff/subsystem.hpp"
#include "qaff/tables.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qaff;

namespace {

std::vector<Vec> sorted(std::vector<Vec> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("simple system of a full affine root set is the simple roots") {
    for (const auto& t : affine_labels(5)) {
        const auto& d = datum(t);
        CAPTURE(to_string(t));
        std::vector<Vec> simple;
        for (int i = 0; i < d.size; ++i) simple.push_back(d.simple(i));
        CHECK(sorted(find_simple_system(real_roots(d, 3))) == sorted(simple));
    }
}

TEST_CASE("A1^(1): a0+2a1 is excluded through the isotropic summand") {
    const auto& d = datum({Family::A, 1, 1});
    auto s = find_simple_system(real_roots(d, 4));
    CHECK(sorted(s) == sorted({{1, 0}, {0, 1}}));
}

TEST_CASE("divisible_subsystem keeps exactly the divisible norms") {
    const auto& d = datum({Family::B, 3, 1});
    auto all = real_roots(d, 3);
    auto d4 = divisible_subsystem(all, 4);
    for (const auto& v : all.roots) CHECK(d4.contains(v) == (d.norm(v) % 4 == 0));
}

TEST_CASE("B3^(1) at t=4 is D3^(1) with delta factor 1") {
    auto r = subsystem_report({Family::B, 3, 1}, 4, 4);
    REQUIRE(r.identified.recognized());
    CHECK(same_type(r.identified.labels(), {TypeLabel{Family::A, 3, 1}}));
    CHECK(r.delta_factor == 1);
}

TEST_CASE("generated_roots of B2 gives all eight roots") {
    const auto& d = datum({Family::B, 2, 0});
    auto g = generated_roots(d.form, {d.simple(0), d.simple(1)}, 0);
    CHECK(g.size() == 8);
}

TEST_CASE("finite table rows") {
    for (const auto& e : finite_pi_table(8)) {
        auto c = verify_pi_table(e, 0);
        CAPTURE(c.subject);
        for (const auto& x : c.checks) {
            CAPTURE(x.name);
            CAPTURE(x.detail);
            CHECK(x.pass);
        }
    }
}

TEST_CASE("affine table rows at level 6") {
    for (const auto& e : affine_pi_table(6)) {
        auto c = verify_pi_table(e, 6);
        CAPTURE(c.subject);
        for (const auto& x : c.checks) {
            CAPTURE(x.name);
            CAPTURE(x.detail);
            CHECK(x.pass);
        }
    }
}

TEST_CASE("a corrupted expectation is detected") {
    auto rows = affine_pi_table(3);
    REQUIRE(!rows.empty());
    auto e = rows.front();
    e.expected_delta_factor += 1;
    CHECK_FALSE(verify_pi_table(e, 6).pass());
    e = rows.front();
    e.expected_simple.pop_back();
    CHECK_FALSE(verify_pi_table(e, 6).pass());
}
