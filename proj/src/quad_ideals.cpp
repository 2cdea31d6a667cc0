#include "wrlat/quad_ideals.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <tuple>

namespace wrlat {

std::string_view describe(TripleDefect defect)
{
    switch (defect) {
    case TripleDefect::None: return "valid";
    case TripleDefect::NonPositive: return "a and g must be positive";
    case TripleDefect::BOutOfRange: return "b must satisfy 0 <= b < a";
    case TripleDefect::GExceedsA: return "g must not exceed a";
    case TripleDefect::GNotDividingA: return "g must divide a";
    case TripleDefect::GNotDividingB: return "g must divide b";
    case TripleDefect::NormNotDivisible: return "g*a must divide N(b + g*delta)";
    }
    return "unknown";
}

Integer generator_norm(const IdealTriple& t)
{
    return quad_norm(QuadInt(t.b, t.g, t.order)).get_num();
}

TripleDefect triple_defect(const IdealTriple& t)
{
    if (t.a <= 0 || t.g <= 0) return TripleDefect::NonPositive;
    if (t.b < 0 || t.b >= t.a) return TripleDefect::BOutOfRange;
    if (t.g > t.a) return TripleDefect::GExceedsA;
    if (t.a % t.g != 0) return TripleDefect::GNotDividingA;
    if (t.b % t.g != 0) return TripleDefect::GNotDividingB;
    const Integer ga = Integer(t.g) * t.a;
    if (generator_norm(t) % ga != 0) return TripleDefect::NormNotDivisible;
    return TripleDefect::None;
}

void require_valid(const IdealTriple& t)
{
    const auto defect = triple_defect(t);
    if (defect != TripleDefect::None) {
        throw InvalidInput("invalid triple (" + std::to_string(t.a) + "," + std::to_string(t.b) + "," +
                           std::to_string(t.g) + ") for D=" + std::to_string(t.order.D()) + ": " +
                           std::string(describe(defect)));
    }
}

std::int64_t ideal_norm(const IdealTriple& t)
{
    require_valid(t);
    return t.a * t.g;
}

IdealTriple hnf_from_generators(const QuadInt& u, const QuadInt& v)
{
    if (!(u.order == v.order)) throw InvalidInput("hnf_from_generators: mismatched orders");
    if (u.is_zero() && v.is_zero()) throw InvalidInput("zero ideal");
    const QuadInt delta(0, 1, u.order);
    std::array<QuadInt, 4> gens{u, v, quad_mul(delta, u), quad_mul(delta, v)};

    // Column reduction on (x, y) pairs: gcd the delta-coordinates into gens[0].
    for (std::size_t i = 1; i < gens.size(); ++i) {
        while (gens[i].y != 0) {
            const Integer q = gens[0].y / gens[i].y;
            gens[0].x -= q * gens[i].x;
            gens[0].y -= q * gens[i].y;
            std::swap(gens[0], gens[i]);
        }
    }
    if (gens[0].y < 0) {
        gens[0].x = -gens[0].x;
        gens[0].y = -gens[0].y;
    }
    Integer a = 0;
    for (std::size_t i = 1; i < gens.size(); ++i) a = gcd(a, gens[i].x);
    if (a == 0 || gens[0].y == 0) throw InvariantViolation("generated module is not of full rank");
    Integer b = gens[0].x % a;
    if (b < 0) b += a;
    IdealTriple t{to_int64(a), to_int64(b), to_int64(gens[0].y), u.order};
    if (!validate_triple(t)) throw InvariantViolation("reduced basis violates canonical conditions");
    return t;
}

IdealTriple hnf_from_generators(const QuadInt& u)
{
    return hnf_from_generators(u, QuadInt(0, 0, u.order));
}

std::vector<IdealTriple> enumerate_ideals(const QuadOrder& order, std::int64_t norm_bound)
{
    if (norm_bound < 1) throw InvalidInput("norm bound must be positive");
    using i128 = __int128;
    const i128 sq_trace = order.delta_trace();
    const i128 sq_norm = order.delta_norm();
    std::vector<IdealTriple> out;
    for (std::int64_t g = 1; g * g <= norm_bound; ++g) {
        for (std::int64_t a = g; a * g <= norm_bound; a += g) {
            const i128 ga = static_cast<i128>(g) * a;
            for (std::int64_t b = 0; b < a; b += g) {
                const i128 bb = b;
                const i128 n = bb * bb + bb * g * sq_trace + static_cast<i128>(g) * g * sq_norm;
                if (n % ga == 0) out.push_back({a, b, g, order});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const IdealTriple& l, const IdealTriple& r) {
        return std::make_tuple(l.a * l.g, l.a, l.b, l.g) < std::make_tuple(r.a * r.g, r.a, r.b, r.g);
    });
    return out;
}

}  // namespace wrlat
