#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wrlat/cyclotomic.hpp"

using namespace wrlat;

namespace {

std::vector<Integer> ints(std::initializer_list<long> l)
{
    std::vector<Integer> v;
    for (long x : l) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == ints({1, 1}));
    CHECK(cyclotomic_polynomial(3) == ints({1, 1, 1}));
    CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
    // First cyclotomic polynomial with a coefficient outside {-1, 0, 1}.
    const IntPoly p105 = cyclotomic_polynomial(105);
    CHECK(p105.size() == 49);
    CHECK(p105[7] == -2);
    for (std::int64_t k = 1; k <= 120; ++k) CHECK(static_cast<std::int64_t>(cyclotomic_polynomial(k).size()) == euler_phi(k) + 1);
}

TEST_CASE("trace tables")
{
    CHECK(cyclo_field(5).trace == ints({4, -1, -1, -1, -1}));
    CHECK(cyclo_field(4).trace == ints({2, 0, -2, 0}));
    CHECK(cyclo_field(3).trace == ints({2, -1, -1}));
    CHECK(cyclo_field(12).trace == ints({4, 0, 2, 0, -2, 0, -4, 0, -2, 0, 2, 0}));
    CHECK(ramanujan_trace(9, 3) == -3);
    CHECK(ramanujan_trace(9, 12) == ramanujan_trace(9, 3));
}

TEST_CASE("Ramanujan traces agree with Newton power sums")
{
    for (std::int64_t k = 1; k <= 60; ++k) {
        const auto p = oracle::newton_power_sums(cyclotomic_polynomial(k), static_cast<std::size_t>(k));
        for (std::int64_t j = 0; j < k; ++j) {
            CAPTURE(k);
            CAPTURE(j);
            CHECK(ramanujan_trace(k, j) == p[static_cast<std::size_t>(j)]);
        }
    }
}

TEST_CASE("field arithmetic")
{
    const CycloField F = cyclo_field(5);
    CHECK(cyclo_power(F, 5) == cyclo_from_coeffs(F, ints({1})));
    CHECK(cyclo_power(F, 4) == cyclo_from_coeffs(F, ints({-1, -1, -1, -1})));
    CHECK(cyclo_power(F, -1) == cyclo_power(F, 4));
    CHECK(cyclo_conj(F, cyclo_power(F, 1)) == cyclo_power(F, 4));
    CHECK(cyclo_mul(F, cyclo_power(F, 2), cyclo_power(F, 3)) == cyclo_power(F, 0));
    CHECK(cyclo_trace(F, cyclo_power(F, 0)) == 4);
    CHECK(cyclo_trace(F, cyclo_power(F, 3)) == -1);
    CHECK(cyclo_from_coeffs(F, ints({0, 0, 0, 0})).is_zero());

    // conj is a ring automorphism and trace is additive.
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> c(-4, 4);
    for (std::int64_t k : {7, 9, 12, 15}) {
        const CycloField G = cyclo_field(k);
        for (int i = 0; i < 50; ++i) {
            std::vector<Integer> a, b;
            for (std::int64_t j = 0; j < G.phi; ++j) {
                a.emplace_back(c(rng));
                b.emplace_back(c(rng));
            }
            const auto u = cyclo_from_coeffs(G, a), v = cyclo_from_coeffs(G, b);
            CHECK(cyclo_conj(G, cyclo_mul(G, u, v)) == cyclo_mul(G, cyclo_conj(G, u), cyclo_conj(G, v)));
            CHECK(cyclo_conj(G, cyclo_conj(G, u)) == u);
            std::vector<Integer> s;
            for (std::size_t j = 0; j < a.size(); ++j) s.push_back(a[j] + b[j]);
            CHECK(cyclo_trace(G, cyclo_from_coeffs(G, s)) == cyclo_trace(G, u) + cyclo_trace(G, v));
            // |u|^2 summed over embeddings is a positive integer for u != 0.
            if (!u.is_zero()) CHECK(cyclo_trace(G, cyclo_mul(G, u, cyclo_conj(G, u))) > 0);
        }
    }
}

TEST_CASE("principal Gram matrices")
{
    const auto one = [](const CycloField& F) { return cyclo_power(F, 0); };
    const CycloField f4 = cyclo_field(4);
    CHECK(gram_principal(f4, one(f4)).entries() == std::vector<Rational>{1, 0, 0, 1});

    const CycloField f3 = cyclo_field(3);
    const Rational h = make_rational(-1, 2);
    CHECK(gram_principal(f3, one(f3)).entries() == std::vector<Rational>{1, h, h, 1});

    const CycloField f5 = cyclo_field(5);
    const GramMatrix g5 = gram_principal(f5, one(f5));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(g5(i, j) == (i == j ? Rational(2) : h));

    CHECK_THROWS_AS(gram_principal(f5, cyclo_from_coeffs(f5, ints({0}))), InvalidInput);
    CHECK_THROWS_AS(cyclo_field(2), InvalidInput);
    CHECK_THROWS_AS(cyclo_field(0), InvalidInput);
}

TEST_CASE("ring of integers lattices")
{
    for (std::int64_t k : {3, 4, 5, 7, 8, 9, 11, 12, 15, 16, 20}) {
        CAPTURE(k);
        const auto c = verify_cyclotomic_theorem(cyclo_field(k));
        CHECK(c.minimum == make_rational(euler_phi(k), 2));
        CHECK(c.n_minimal == static_cast<std::size_t>(k % 2 == 0 ? k : 2 * k));
        CHECK(c.wr);
        CHECK(c.roots_of_unity_minimal);
        CHECK(c.pass());
    }
}

TEST_CASE("principal ideals")
{
    const CycloField f8 = cyclo_field(8);
    const auto x8 = cyclo_from_coeffs(f8, ints({1, 1}));
    const auto p8 = check_principal_ideal(f8, x8);
    CHECK(p8.wr);
    CHECK(p8.rotation_invariant);
    // Tr(|1 + zeta_8|^2)/2 = Tr(2 + zeta + zeta^-1)/2 = 4.
    CHECK(p8.minimum == 4);

    const CycloField f3 = cyclo_field(3);
    const auto two = check_principal_ideal(f3, cyclo_from_coeffs(f3, ints({2})));
    const auto unit = check_principal_ideal(f3, cyclo_from_coeffs(f3, ints({1})));
    CHECK(two.minimum == 4 * unit.minimum);
    CHECK(is_similar(BinaryForm::from_gram(gram_principal(f3, cyclo_from_coeffs(f3, ints({2})))(0, 0),
                                           gram_principal(f3, cyclo_from_coeffs(f3, ints({2})))(0, 1),
                                           gram_principal(f3, cyclo_from_coeffs(f3, ints({2})))(1, 1)),
                     BinaryForm{1, 1, 1}));

    const CycloField f5 = cyclo_field(5);
    CHECK(check_principal_ideal(f5, cyclo_power(f5, 1)).minimum == check_principal_ideal(f5, cyclo_power(f5, 0)).minimum);

    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long> c(-3, 3);
    for (std::int64_t k : {3, 4, 5, 7, 8, 12}) {
        const CycloField F = cyclo_field(k);
        for (int i = 0; i < 5; ++i) {
            CycloElement x;
            do {
                std::vector<Integer> co;
                for (std::int64_t j = 0; j < F.phi; ++j) co.emplace_back(c(rng));
                x = cyclo_from_coeffs(F, co);
            } while (x.is_zero());
            CHECK(verify_principal_ideal_wr(F, x));
            CHECK(check_principal_ideal(F, x, 7, 20).rotation_invariant);
        }
    }
}
