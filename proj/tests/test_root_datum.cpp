#include "qaff/root_datum.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace qaff;

namespace {

// Smallest positive integer null vector, by exhaustive search.
Vec brute_marks(const Mat& a, Int max_entry) {
    const int n = static_cast<int>(a.size());
    Vec v(n, 1), best;
    Int best_sum = 0;
    while (true) {
        bool null = true;
        for (int i = 0; i < n && null; ++i) {
            Int s = 0;
            for (int j = 0; j < n; ++j) s += a[i][j] * v[j];
            null = s == 0;
        }
        Int sum = std::accumulate(v.begin(), v.end(), Int{0});
        if (null && (best.empty() || sum < best_sum)) {
            best = v;
            best_sum = sum;
        }
        int i = 0;
        while (i < n && v[i] == max_entry) v[i++] = 1;
        if (i == n) break;
        ++v[i];
    }
    return best;
}

int kac_a0k(const TypeLabel& t) {
    if (t.twist == 1) return 1;
    if (t.twist == 3) return 3;
    if (t.family == Family::A && t.rank % 2 == 0) return 4;
    return 2;
}

}  // namespace

TEST_CASE("type strings") {
    auto t = parse_label("A5~2");
    REQUIRE(t);
    CHECK(*t == TypeLabel{Family::A, 5, 2});
    CHECK(to_string(*t) == "A5~2");
    CHECK(pretty(*t) == "A5^(2)");
    CHECK(parse_label("B3") == TypeLabel{Family::B, 3, 0});
    CHECK_FALSE(parse_label("Z9~1"));
    CHECK_FALSE(parse_label("A3~2"));
    CHECK_FALSE(parse_label("E9~1"));
    CHECK_FALSE(parse_label(""));
}

TEST_CASE("marks match an exhaustive null-vector search") {
    for (const auto& t : affine_labels(6)) {
        const auto& d = datum(t);
        CAPTURE(to_string(t));
        CHECK(d.marks == brute_marks(d.cartan, 6));
        CHECK(d.a0 == d.marks[0]);
        CHECK(d.a0k() == kac_a0k(t));
    }
}

TEST_CASE("delta is orthogonal to every simple root") {
    for (const auto& t : affine_labels(8)) {
        const auto& d = datum(t);
        for (int i = 0; i < d.size; ++i) CHECK(d.pair(d.delta(), d.simple(i)) == 0);
        CHECK(d.norm(d.delta()) == 0);
    }
}

TEST_CASE("form symmetrizes the Cartan matrix") {
    for (const auto& t : affine_labels(6)) {
        const auto& d = datum(t);
        for (int i = 0; i < d.size; ++i)
            for (int j = 0; j < d.size; ++j) {
                CHECK(d.form[i][j] == d.form[j][i]);
                CHECK(2 * d.form[i][j] == d.cartan[i][j] * d.form[i][i]);
            }
    }
}

TEST_CASE("known data") {
    CHECK(datum({Family::E, 6, 1}).marks == Vec{1, 1, 2, 2, 3, 2, 1});
    CHECK(datum({Family::E, 8, 1}).marks == Vec{1, 2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(datum({Family::G, 2, 1}).marks == Vec{1, 2, 3});
    CHECK(datum({Family::D, 4, 3}).marks == Vec{1, 2, 1});
    CHECK(datum({Family::A, 2, 2}).marks == Vec{2, 1});
    CHECK(datum({Family::E, 6, 2}).marks == Vec{1, 2, 3, 2, 1});
    CHECK(dual_datum({Family::D, 4, 3}).dual == TypeLabel{Family::G, 2, 1});
    CHECK(dual_datum({Family::B, 4, 1}).dual == TypeLabel{Family::A, 7, 2});
    CHECK(dual_datum({Family::C, 3, 1}).dual == TypeLabel{Family::D, 4, 2});
    CHECK(dual_datum({Family::A, 4, 2}).dual == TypeLabel{Family::A, 4, 2});
}

TEST_CASE("duality is an involution and transposes the Cartan matrix") {
    for (const auto& t : affine_labels(7)) {
        CAPTURE(to_string(t));
        const auto du = dual_datum(t);
        const auto back = dual_datum(du.dual);
        CHECK(back.dual == t);
        const auto& d = datum(t);
        const auto& dd = datum(du.dual);
        for (int i = 0; i < d.size; ++i) {
            CHECK(back.perm[du.perm[i]] == i);
            for (int j = 0; j < d.size; ++j) CHECK(dd.cartan[du.perm[i]][du.perm[j]] == d.cartan[j][i]);
        }
    }
}

TEST_CASE("identify_type recovers every catalog type under node shuffles") {
    std::mt19937 rng(7);
    TypeList all = affine_labels(7);
    for (const auto& t : finite_labels(8)) all.push_back(t);
    for (const auto& t : all) {
        const auto& d = datum(t);
        CAPTURE(to_string(t));
        auto id = identify_type(d.cartan);
        REQUIRE(id.recognized());
        CHECK(id.labels() == TypeList{t});
        std::vector<int> p(d.size);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        Mat m(d.size, Vec(d.size));
        for (int i = 0; i < d.size; ++i)
            for (int j = 0; j < d.size; ++j) m[i][j] = d.cartan[p[i]][p[j]];
        auto id2 = identify_type(m);
        REQUIRE(id2.recognized());
        CHECK(same_type(id2.labels(), {t}));
        const auto& c = id2.components.at(0);
        for (int i = 0; i < d.size; ++i)
            for (int j = 0; j < d.size; ++j) CHECK(m[c.nodes[i]][c.nodes[j]] == d.cartan[i][j]);
    }
}

TEST_CASE("identify_type splits components and rejects unknown matrices") {
    Mat m{{2, 0, 0}, {0, 2, -2}, {0, -2, 2}};
    auto id = identify_type(m);
    REQUIRE(id.recognized());
    CHECK(same_type(id.labels(), {TypeLabel{Family::A, 1, 0}, TypeLabel{Family::A, 1, 1}}));
    Mat hyper{{2, -3}, {-3, 2}};
    CHECK_FALSE(identify_type(hyper).recognized());
}

TEST_CASE("canonical names of small coincidences") {
    CHECK(canonical(TypeLabel{Family::A, 3, 2}) == TypeList{{Family::D, 3, 2}});
    CHECK(same_type({TypeLabel{Family::D, 3, 1}}, {TypeLabel{Family::A, 3, 1}}));
    CHECK(same_type({TypeLabel{Family::B, 2, 1}}, {TypeLabel{Family::C, 2, 1}}));
    CHECK(same_type({TypeLabel{Family::D, 2, 1}}, {TypeLabel{Family::A, 1, 1}, TypeLabel{Family::A, 1, 1}}));
}
