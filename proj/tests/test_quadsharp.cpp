#include <doctest.h>

#include <algorithm>
#include <set>

#include "smallgen/heights.hpp"
#include "smallgen/quadsharp.hpp"

using namespace smallgen;

namespace {

// reference enumeration by brute force over all (a, b, c) boxes
std::vector<QuadPoly> naive_enumerate(const Integer& d, const Integer& B) {
    std::vector<QuadPoly> out;
    for (Integer a = 1; a <= B; ++a) {
        for (Integer c = 1; c <= B; ++c) {
            Integer bb_max = 4 * a * c;  // b^2 = 4ac + d e^2 < 4ac
            for (Integer b = -isqrt(bb_max); b * b <= bb_max; ++b) {
                Integer disc = b * b - 4 * a * c;
                if (disc >= 0) continue;
                // disc = d e^2 with e > 0
                Rational ratio(disc, d);
                ratio.canonicalize();
                if (ratio.get_den() != 1) continue;
                Integer e2 = ratio.get_num();
                if (!is_perfect_square(e2)) continue;
                Integer e = isqrt(e2);
                if (e == 0) continue;
                Integer g = gcd(gcd(a, b), c);
                if (g != 1) continue;
                out.push_back({a, b, c, e, d});
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("root height of validated quadratics") {
    CHECK(quad_root_height({1, 1, 41, 1, -163}) == 41);
    CHECK(quad_root_height({1, 0, 1, 2, -1}) == 1);
    // (1 + i)/2 as root of 2x^2 - 2x + 1: height^2 = 2, and the exact
    // mahler rule agrees
    CHECK(quad_root_height({2, -2, 1, 2, -1}) == 2);
    auto m = exact_height_square(IntPoly({1, -2, 2}));
    REQUIRE(m.has_value());
    CHECK(*m == 2);

    CHECK_THROWS_AS(quad_root_height({1, 0, 1, 1, -1}), std::invalid_argument);   // disc mismatch
    CHECK_THROWS_AS(quad_root_height({2, 0, 2, 2, -1}), std::invalid_argument);   // gcd 2
    CHECK_THROWS_AS(quad_root_height({1, 0, -1, 1, -1}), std::invalid_argument);  // c < 1
    CHECK_THROWS_AS(quad_root_height({1, 0, 4, 1, -4}), std::invalid_argument);   // d not squarefree
}

TEST_CASE("generator enumeration oracles") {
    auto g163 = enumerate_quad_generators(-163, 41);
    auto has = [&](const QuadPoly& q) {
        return std::find(g163.begin(), g163.end(), q) != g163.end();
    };
    CHECK(has({1, 1, 41, 1, -163}));
    CHECK(has({1, -1, 41, 1, -163}));
    CHECK(has({41, 1, 1, 1, -163}));
    CHECK(enumerate_quad_generators(-163, 40).empty());

    auto g1 = enumerate_quad_generators(-1, 1);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0] == QuadPoly{1, 0, 1, 2, -1});

    // every reported polynomial passes validation at its stated height
    for (const auto& q : enumerate_quad_generators(-7, 5))
        CHECK(quad_root_height(q) == std::max(q.a, q.c));
}

TEST_CASE("generator enumeration matches a brute-force scan") {
    for (long d : {-1L, -3L, -7L, -11L, -163L}) {
        for (long B : {1L, 3L, 8L, 12L}) {
            auto fast = enumerate_quad_generators(d, B);
            auto slow = naive_enumerate(d, B);
            std::set<std::vector<Integer>> a, b;
            for (const auto& q : fast) a.insert({q.a, q.b, q.c, q.e});
            for (const auto& q : slow) b.insert({q.a, q.b, q.c, q.e});
            CHECK(fast.size() == slow.size());
            CHECK(a == b);
        }
    }
}

TEST_CASE("enumeration order is (a, c, e, b)") {
    auto g = enumerate_quad_generators(-7, 6);
    REQUIRE(g.size() >= 2);
    for (size_t i = 1; i < g.size(); ++i) {
        std::vector<Integer> prev = {g[i - 1].a, g[i - 1].c, g[i - 1].e};
        std::vector<Integer> cur = {g[i].a, g[i].c, g[i].e};
        CHECK(prev <= cur);
    }
}

TEST_CASE("minimal generator heights") {
    auto [h163, w163] = minimal_quad_generator_height(-163);
    CHECK(h163 == 41);
    CHECK(w163.a == 1);
    CHECK(w163.c == 41);
    CHECK(abs(w163.b) == 1);

    auto [h1, w1] = minimal_quad_generator_height(-1);
    CHECK(h1 == 1);
    CHECK(w1.poly() == IntPoly({1, 0, 1}));

    auto [h7, w7] = minimal_quad_generator_height(-7);
    CHECK(h7 == 2);
    CHECK(w7.a == 1);
    CHECK(w7.c == 2);  // x^2 +- x + 2

    auto [h3, w3] = minimal_quad_generator_height(-3);
    CHECK(h3 == 1);  // x^2 +- x + 1
}

TEST_CASE("stated heights agree with the mahler-measure route") {
    for (long d : {-1L, -3L, -7L, -163L}) {
        for (const auto& q : enumerate_quad_generators(d, 41)) {
            auto m = exact_height_square(q.poly());
            REQUIRE(m.has_value());
            CHECK(*m == quad_root_height(q));
        }
    }
}

TEST_CASE("minimal height never exceeds the integral-generator bound") {
    // for d = 1 mod 4 the root of x^2 - x + (1 + |d|)/4 is a generator
    for (long d : {-3L, -7L, -11L, -19L, -23L, -31L}) {
        auto [h, w] = minimal_quad_generator_height(d);
        CHECK(h <= (1 - d) / 4);
    }
}

TEST_CASE("sharpness comparison") {
    auto r163 = sharpness_check(-163, 100);
    CHECK(r163.prime_set.primes == std::vector<Integer>{41});
    CHECK(r163.bound_square == 41);
    CHECK(r163.minimal_square == 41);
    CHECK(r163.sharp);
    CHECK(quad_root_height(r163.witness) == 41);

    auto r1 = sharpness_check(-1, 100);
    CHECK(r1.bound_square == 2);
    CHECK(r1.minimal_square == 1);
    CHECK_FALSE(r1.sharp);
}
