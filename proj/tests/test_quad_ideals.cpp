#include <doctest.h>

#include <algorithm>
#include <random>
#include <tuple>

#include "oracles.hpp"
#include "wrlat/quad_ideals.hpp"

using namespace wrlat;

TEST_CASE("validate_triple")
{
    const QuadOrder o(-15);
    CHECK(validate_triple({2, 0, 1, o}));
    CHECK(validate_triple({1, 0, 1, o}));
    CHECK(validate_triple({1, 0, 1, QuadOrder(7)}));
    // N(1 + delta) = N((3 - sqrt(-15))/2) = (9 + 15)/4 = 6, and 2 | 6.
    CHECK(generator_norm({2, 1, 1, o}) == 6);
    CHECK(validate_triple({2, 1, 1, o}));

    CHECK(triple_defect({0, 0, 1, o}) == TripleDefect::NonPositive);
    CHECK(triple_defect({2, 2, 1, o}) == TripleDefect::BOutOfRange);
    CHECK(triple_defect({2, 0, 3, o}) == TripleDefect::GExceedsA);
    CHECK(triple_defect({3, 0, 2, o}) == TripleDefect::GNotDividingA);
    CHECK(triple_defect({4, 1, 2, o}) == TripleDefect::GNotDividingB);
    // N(delta) = 4 in D = -15 and 3 does not divide it.
    CHECK(triple_defect({3, 0, 1, o}) == TripleDefect::NormNotDivisible);
}

TEST_CASE("ideal_norm")
{
    CHECK(ideal_norm({2, 0, 1, QuadOrder(-15)}) == 2);
    CHECK(ideal_norm({1, 0, 1, QuadOrder(-15)}) == 1);
    CHECK(ideal_norm({7, 3, 1, QuadOrder(21)}) == 7);
    CHECK_THROWS_AS(ideal_norm({3, 0, 1, QuadOrder(-15)}), InvalidInput);
}

TEST_CASE("ideal_norm equals the point-count index for a*g <= 50")
{
    for (std::int64_t D : {-15, -5, -3, -1, 2, 3, 5, 21, -207}) {
        const QuadOrder o(D);
        for (const auto& t : enumerate_ideals(o, 50)) CHECK(ideal_norm(t) == oracle::index_by_point_count(t.a, t.b, t.g));
    }
}

TEST_CASE("hnf_from_generators")
{
    // 1 - sqrt3 = 1 + delta with delta = -sqrt3
    CHECK(hnf_from_generators(QuadInt(1, 1, QuadOrder(3))) == IdealTriple{2, 1, 1, QuadOrder(3)});
    CHECK(hnf_from_generators(QuadInt(1, 0, QuadOrder(-15))) == IdealTriple{1, 0, 1, QuadOrder(-15)});
    // (3 - sqrt(-55))/2 = 1 + delta
    const QuadOrder o55(-55);
    CHECK(hnf_from_generators(QuadInt(4, 0, o55), QuadInt(1, 1, o55)) == IdealTriple{4, 1, 1, o55});
    // principal ideal <2> in Z[i]
    CHECK(hnf_from_generators(QuadInt(2, 0, QuadOrder(-1))) == IdealTriple{2, 0, 2, QuadOrder(-1)});
    CHECK_THROWS_AS(hnf_from_generators(QuadInt(0, 0, o55)), InvalidInput);
}

TEST_CASE("hnf_from_generators is idempotent on canonical generators")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-40, 40);
    for (std::int64_t D : {-15, -7, -3, -1, 2, 3, 5, 13, 21, 12}) {
        const QuadOrder o(D);
        for (int i = 0; i < 200; ++i) {
            const QuadInt u(c(rng), c(rng), o), v(c(rng), c(rng), o);
            if (u.is_zero() && v.is_zero()) continue;
            const IdealTriple t = hnf_from_generators(u, v);
            CHECK(validate_triple(t));
            CHECK(hnf_from_generators(QuadInt(t.a, 0, o), QuadInt(t.b, t.g, o)) == t);
        }
        for (const auto& t : enumerate_ideals(o, 40))
            CHECK(hnf_from_generators(QuadInt(t.a, 0, o), QuadInt(t.b, t.g, o)) == t);
    }
}

TEST_CASE("principal ideal norm equals |N(u)|")
{
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> c(-25, 25);
    for (std::int64_t D : {-15, -1, 2, 5, 21}) {
        const QuadOrder o(D);
        for (int i = 0; i < 200; ++i) {
            const QuadInt u(c(rng), c(rng), o);
            if (u.is_zero()) continue;
            const IdealTriple t = hnf_from_generators(u);
            CHECK(Rational(ideal_norm(t)) == abs(quad_norm(u)));
        }
    }
}

TEST_CASE("enumerate_ideals")
{
    const auto small = enumerate_ideals(QuadOrder(-15), 2);
    CHECK(std::find(small.begin(), small.end(), IdealTriple{1, 0, 1, QuadOrder(-15)}) != small.end());
    CHECK(std::find(small.begin(), small.end(), IdealTriple{2, 0, 1, QuadOrder(-15)}) != small.end());

    for (std::int64_t D : {-15, 2, 21, -207}) {
        const auto one = enumerate_ideals(QuadOrder(D), 1);
        REQUIRE(one.size() == 1);
        CHECK(one.front() == IdealTriple{1, 0, 1, QuadOrder(D)});
    }

    // N(1 + delta) = N((3 - sqrt(-3))/2) = 3
    const auto m3 = enumerate_ideals(QuadOrder(-3), 3);
    CHECK(std::find(m3.begin(), m3.end(), IdealTriple{3, 1, 1, QuadOrder(-3)}) != m3.end());

    CHECK_THROWS_AS(enumerate_ideals(QuadOrder(2), 0), InvalidInput);
}

TEST_CASE("enumerate_ideals output is valid, strictly sorted and complete")
{
    for (std::int64_t D : {-15, -3, 5, 6, -20}) {
        const QuadOrder o(D);
        const auto ideals = enumerate_ideals(o, 60);
        for (std::size_t i = 0; i < ideals.size(); ++i) {
            CHECK(validate_triple(ideals[i]));
            if (i == 0) continue;
            const auto& p = ideals[i - 1];
            const auto& q = ideals[i];
            CHECK(std::make_tuple(p.a * p.g, p.a, p.b, p.g) < std::make_tuple(q.a * q.g, q.a, q.b, q.g));
        }
        // Brute-force count over the whole box.
        std::size_t brute = 0;
        for (std::int64_t a = 1; a <= 60; ++a)
            for (std::int64_t g = 1; g <= a && a * g <= 60; ++g)
                for (std::int64_t b = 0; b < a; ++b) brute += validate_triple({a, b, g, o});
        CHECK(brute == ideals.size());
    }
}
