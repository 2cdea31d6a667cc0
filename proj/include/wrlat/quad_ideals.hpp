#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "wrlat/quad_order.hpp"

namespace wrlat {

/// Canonical basis data of the ideal <a, b + g*delta> = {a*x + (b + g*delta)*y}.
struct IdealTriple {
    std::int64_t a;
    std::int64_t b;
    std::int64_t g;
    QuadOrder order;

    friend bool operator==(const IdealTriple& l, const IdealTriple& r)
    {
        return l.order == r.order && l.a == r.a && l.b == r.b && l.g == r.g;
    }
};

/// A fractional ideal stored as (integral ideal) / denominator.
struct FractionalIdeal {
    IdealTriple integral;
    Integer denominator;
};

enum class TripleDefect {
    None,
    NonPositive,        // a <= 0 or g <= 0
    BOutOfRange,        // not 0 <= b < a
    GExceedsA,          // g > a
    GNotDividingA,
    GNotDividingB,
    NormNotDivisible,   // g*a does not divide N(b + g*delta)
};

std::string_view describe(TripleDefect defect);

TripleDefect triple_defect(const IdealTriple& t);
inline bool validate_triple(const IdealTriple& t) { return triple_defect(t) == TripleDefect::None; }
/// Throws InvalidInput carrying the defect description.
void require_valid(const IdealTriple& t);

/// N(b + g*delta).
Integer generator_norm(const IdealTriple& t);

/// |Z[delta] / I| = a*g. Throws InvalidInput on an invalid triple.
std::int64_t ideal_norm(const IdealTriple& t);

/// Canonical triple of the ideal generated by u and v (the Z-span of u, v, delta*u, delta*v).
/// Throws InvalidInput when both generators are zero.
IdealTriple hnf_from_generators(const QuadInt& u, const QuadInt& v);
IdealTriple hnf_from_generators(const QuadInt& u);

/// Every valid triple with a*g <= norm_bound, sorted by (a*g, a, b, g).
std::vector<IdealTriple> enumerate_ideals(const QuadOrder& order, std::int64_t norm_bound);

}  // namespace wrlat
