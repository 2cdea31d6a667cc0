#include "wrlat/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace wrlat {

namespace {

// Exact quotient of a by monic b.
IntPoly divide_monic(IntPoly a, const IntPoly& b)
{
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) throw InvariantViolation("polynomial division: degree too small");
    IntPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const Integer c = a[i];
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0) throw InvariantViolation("polynomial division left a remainder");
    return q;
}

std::vector<Integer> reduce_mod(const CycloField& F, std::vector<Integer> c)
{
    const auto phi = static_cast<std::size_t>(F.phi);
    for (std::size_t i = c.size(); i-- > phi;) {
        const Integer lead = c[i];
        if (lead == 0) continue;
        for (std::size_t j = 0; j <= phi; ++j) c[i - phi + j] -= lead * F.poly[j];
    }
    c.resize(phi, 0);
    return c;
}

std::int64_t mod_k(std::int64_t j, std::int64_t k) { return ((j % k) + k) % k; }

}  // namespace

IntPoly cyclotomic_polynomial(std::int64_t k)
{
    if (k < 1) throw InvalidInput("cyclotomic index must be positive");
    IntPoly p(static_cast<std::size_t>(k) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(k)] = 1;
    for (std::int64_t d = 1; d < k; ++d)
        if (k % d == 0) p = divide_monic(std::move(p), cyclotomic_polynomial(d));
    return p;
}

Integer ramanujan_trace(std::int64_t k, std::int64_t j)
{
    if (k < 1) throw InvalidInput("cyclotomic index must be positive");
    const std::int64_t g = std::gcd(mod_k(j, k), k);
    const std::int64_t m = k / g;
    return Integer(mobius(m)) * (euler_phi(k) / euler_phi(m));
}

CycloField cyclo_field(std::int64_t k)
{
    if (k < 3) throw InvalidInput("cyclotomic field needs k >= 3 (degree >= 2), got " + std::to_string(k));
    CycloField F{k, euler_phi(k), cyclotomic_polynomial(k), {}};
    F.trace.reserve(static_cast<std::size_t>(k));
    for (std::int64_t j = 0; j < k; ++j) F.trace.push_back(ramanujan_trace(k, j));
    return F;
}

bool CycloElement::is_zero() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c == 0; });
}

CycloElement cyclo_from_coeffs(const CycloField& F, std::vector<Integer> coeffs)
{
    return {reduce_mod(F, std::move(coeffs))};
}

CycloElement cyclo_power(const CycloField& F, std::int64_t j)
{
    std::vector<Integer> c(static_cast<std::size_t>(mod_k(j, F.k)) + 1, 0);
    c.back() = 1;
    return {reduce_mod(F, std::move(c))};
}

CycloElement cyclo_mul(const CycloField& F, const CycloElement& u, const CycloElement& v)
{
    std::vector<Integer> c(u.coeffs.size() + v.coeffs.size(), 0);
    for (std::size_t i = 0; i < u.coeffs.size(); ++i) {
        if (u.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < v.coeffs.size(); ++j) c[i + j] += u.coeffs[i] * v.coeffs[j];
    }
    return {reduce_mod(F, std::move(c))};
}

CycloElement cyclo_conj(const CycloField& F, const CycloElement& u)
{
    std::vector<Integer> c(static_cast<std::size_t>(F.k), 0);
    for (std::size_t i = 0; i < u.coeffs.size(); ++i)
        c[static_cast<std::size_t>(mod_k(-static_cast<std::int64_t>(i), F.k))] += u.coeffs[i];
    return {reduce_mod(F, std::move(c))};
}

Integer cyclo_trace(const CycloField& F, const CycloElement& u)
{
    Integer acc = 0;
    for (std::size_t i = 0; i < u.coeffs.size(); ++i) acc += u.coeffs[i] * F.trace[i];
    return acc;
}

GramMatrix gram_principal(const CycloField& F, const CycloElement& x)
{
    if (x.is_zero()) throw InvalidInput("zero element");
    const auto n = static_cast<std::size_t>(F.phi);
    std::vector<CycloElement> basis;
    std::vector<CycloElement> conj;
    for (std::size_t i = 0; i < n; ++i) {
        basis.push_back(cyclo_mul(F, x, cyclo_power(F, static_cast<std::int64_t>(i))));
        conj.push_back(cyclo_conj(F, basis.back()));
    }
    std::vector<Rational> g(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            g[i * n + j] = make_rational(cyclo_trace(F, cyclo_mul(F, basis[i], conj[j])), 2);
            g[j * n + i] = g[i * n + j];
        }
    return GramMatrix(n, std::move(g));
}

CyclotomicCheck verify_cyclotomic_theorem(const CycloField& F)
{
    const GramMatrix G = gram_principal(F, cyclo_power(F, 0));
    const ShortVectorReport rep = enumerate_shortest(G);
    CyclotomicCheck out;
    out.minimum = rep.minimum;
    out.expected = make_rational(F.phi, 2);
    out.n_minimal = rep.vectors.size();
    out.expected_count = static_cast<std::size_t>(F.k % 2 == 0 ? F.k : 2 * F.k);
    out.wr = rep.span_rank == G.dim();

    std::set<std::vector<std::int64_t>> minimal(rep.vectors.begin(), rep.vectors.end());
    out.roots_of_unity_minimal = true;
    for (std::int64_t j = 0; j < F.k && out.roots_of_unity_minimal; ++j) {
        std::vector<std::int64_t> v;
        for (const auto& c : cyclo_power(F, j).coeffs) v.push_back(to_int64(c));
        std::vector<std::int64_t> neg(v.size());
        std::transform(v.begin(), v.end(), neg.begin(), [](std::int64_t e) { return -e; });
        out.roots_of_unity_minimal = minimal.count(v) == 1 && minimal.count(neg) == 1;
    }
    return out;
}

PrincipalIdealCheck check_principal_ideal(const CycloField& F, const CycloElement& x, std::uint64_t seed,
                                          int samples)
{
    const GramMatrix G = gram_principal(F, x);
    const ShortVectorReport rep = enumerate_shortest(G);
    PrincipalIdealCheck out{rep.minimum, rep.span_rank == G.dim(), true};

    // Lattice vector with coordinates u is x*U for U = sum u_i zeta^i; zeta*(x*U) has coordinates of zeta*U.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-5, 5);
    const CycloElement zeta = cyclo_power(F, 1);
    for (int s = 0; s < samples && out.rotation_invariant; ++s) {
        std::vector<Integer> u(static_cast<std::size_t>(F.phi));
        for (auto& c : u) c = coeff(rng);
        const CycloElement U{u};
        const CycloElement rotated = cyclo_mul(F, zeta, U);
        std::vector<std::int64_t> a;
        std::vector<std::int64_t> b;
        for (const auto& c : U.coeffs) a.push_back(to_int64(c));
        for (const auto& c : rotated.coeffs) b.push_back(to_int64(c));
        out.rotation_invariant = G.quadratic(a) == G.quadratic(b);
    }
    return out;
}

bool verify_principal_ideal_wr(const CycloField& F, const CycloElement& x)
{
    const PrincipalIdealCheck c = check_principal_ideal(F, x);
    if (!c.rotation_invariant) throw InvariantViolation("rotation invariance failed for principal ideal lattice");
    return c.wr;
}

}  // namespace wrlat
