#include "wrlat/exact_arith.hpp"

#include <array>
#include <cmath>

namespace wrlat {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw InvalidInput("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer floor_of(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer round_of(const Rational& q)
{
    return floor_of(q + Rational(1, 2));
}

std::int64_t to_int64(const Integer& z)
{
    if (!z.fits_slong_p()) throw InvalidInput("integer exceeds 64-bit range: " + z.get_str());
    return z.get_si();
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

bool is_squarefree(std::int64_t n)
{
    if (n <= 0) throw InvalidInput("nonpositive input");
    if (n > kSquarefreeLimit) throw InvalidInput("is_squarefree: input beyond trial-division range");
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return false;
    }
    return true;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 e, u64 m)
{
    u64 r = 1;
    base %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::int64_t value)
{
    if (value <= 0) throw InvalidInput("nonpositive input");
    const u64 n = static_cast<u64>(value);
    if (n < 2) return false;
    // First twelve primes form a deterministic witness set below 3.3e24.
    constexpr std::array<u64, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : witnesses) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : witnesses) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_perfect_square(std::int64_t n)
{
    if (n < 0) return false;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

int mobius(std::int64_t n)
{
    if (n <= 0) throw InvalidInput("nonpositive input");
    int sign = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

std::int64_t euler_phi(std::int64_t n)
{
    if (n <= 0) throw InvalidInput("nonpositive input");
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace wrlat
