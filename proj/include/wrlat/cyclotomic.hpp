#pragma once

#include <cstdint>
#include <vector>

#include "wrlat/svp.hpp"

namespace wrlat {

/// Coefficients c_0..c_deg, constant term first.
using IntPoly = std::vector<Integer>;

/// The k-th cyclotomic polynomial, by dividing x^k - 1 by the lower cyclotomic factors.
IntPoly cyclotomic_polynomial(std::int64_t k);

/// Tr(zeta_k^j) from the Ramanujan-sum closed form mu(k/g) phi(k)/phi(k/g), g = gcd(j, k).
Integer ramanujan_trace(std::int64_t k, std::int64_t j);

/// Q(zeta_k) with its power basis {zeta^i : 0 <= i < phi(k)}.
struct CycloField {
    std::int64_t k;
    std::int64_t phi;
    IntPoly poly;               // monic, degree phi
    std::vector<Integer> trace; // trace[j] = Tr(zeta^j), 0 <= j < k
};

/// Throws InvalidInput for k < 3.
CycloField cyclo_field(std::int64_t k);

/// Sum c_i zeta^i over the power basis; always reduced (length phi).
struct CycloElement {
    std::vector<Integer> coeffs;

    bool is_zero() const;
    friend bool operator==(const CycloElement& l, const CycloElement& r) { return l.coeffs == r.coeffs; }
};

CycloElement cyclo_from_coeffs(const CycloField& F, std::vector<Integer> coeffs);
/// zeta^j reduced mod Phi_k; j may be any integer.
CycloElement cyclo_power(const CycloField& F, std::int64_t j);
CycloElement cyclo_mul(const CycloField& F, const CycloElement& u, const CycloElement& v);
/// Complex conjugation zeta -> zeta^(k-1).
CycloElement cyclo_conj(const CycloField& F, const CycloElement& u);
Integer cyclo_trace(const CycloField& F, const CycloElement& u);

/// Gram of sigma(x zeta^i): G[i][j] = Tr(x zeta^i * conj(x zeta^j)) / 2. Throws InvalidInput for x = 0.
GramMatrix gram_principal(const CycloField& F, const CycloElement& x);

struct CyclotomicCheck {
    Rational minimum;
    Rational expected;              // phi(k)/2
    std::size_t n_minimal = 0;
    std::size_t expected_count = 0; // number of roots of unity: k (even k) or 2k (odd k)
    bool wr = false;
    bool roots_of_unity_minimal = false;  // every +-zeta^j image lies in the minimal set

    bool pass() const
    {
        return minimum == expected && n_minimal == expected_count && wr && roots_of_unity_minimal;
    }
};

CyclotomicCheck verify_cyclotomic_theorem(const CycloField& F);

struct PrincipalIdealCheck {
    Rational minimum;
    bool wr = false;
    bool rotation_invariant = false;
};

/// WR test of sigma(<x>) plus the exact check q(zeta*u) = q(u) on `samples` random u.
PrincipalIdealCheck check_principal_ideal(const CycloField& F, const CycloElement& x, std::uint64_t seed = 1,
                                          int samples = 100);

/// WR flag; throws InvariantViolation if rotation invariance fails.
bool verify_principal_ideal_wr(const CycloField& F, const CycloElement& x);

}  // namespace wrlat
