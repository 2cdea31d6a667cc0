#include "wrlat/quad_order.hpp"

#include <cstdlib>

namespace wrlat {

namespace {

std::int64_t mod4(std::int64_t D) { return ((D % 4) + 4) % 4; }

constexpr const char* kMinus = "−";
constexpr const char* kRoot = "√";

std::string signed_str(const Integer& z)
{
    return z < 0 ? std::string(kMinus) + Integer(abs(z)).get_str() : z.get_str();
}

}  // namespace

QuadOrder::QuadOrder(std::int64_t D) : D_(D)
{
    if (D == 0 || D == 1 || is_perfect_square(D))
        throw InvalidInput("radicand must be a non-square integer other than 0 and 1, got " + std::to_string(D));
    kind_ = mod4(D) == 1 ? DeltaKind::HalfOneMinusSqrtD : DeltaKind::MinusSqrtD;
    maximal_ = is_squarefree(D < 0 ? -D : D);
}

std::int64_t QuadOrder::delta_sq_const() const noexcept
{
    return kind_ == DeltaKind::MinusSqrtD ? D_ : (D_ - 1) / 4;
}

std::int64_t QuadOrder::delta_sq_lin() const noexcept
{
    return kind_ == DeltaKind::MinusSqrtD ? 0 : 1;
}

std::int64_t QuadOrder::delta_trace() const noexcept
{
    return kind_ == DeltaKind::MinusSqrtD ? 0 : 1;
}

std::int64_t QuadOrder::delta_norm() const noexcept
{
    return kind_ == DeltaKind::MinusSqrtD ? -D_ : (1 - D_) / 4;
}

QuadInt quad_mul(const QuadInt& u, const QuadInt& v)
{
    if (!(u.order == v.order)) throw InvalidInput("quad_mul: mismatched orders");
    const Integer yy = u.y * v.y;
    Integer x = u.x * v.x + yy * u.order.delta_sq_const();
    Integer y = u.x * v.y + v.x * u.y + yy * u.order.delta_sq_lin();
    return {std::move(x), std::move(y), u.order};
}

QuadInt quad_add(const QuadInt& u, const QuadInt& v)
{
    if (!(u.order == v.order)) throw InvalidInput("quad_add: mismatched orders");
    return {u.x + v.x, u.y + v.y, u.order};
}

QuadInt quad_conj(const QuadInt& u)
{
    return {u.x + u.y * u.order.delta_trace(), -u.y, u.order};
}

Rational quad_norm(const QuadInt& u)
{
    const QuadOrder& o = u.order;
    return Rational(u.x * u.x + u.x * u.y * o.delta_trace() + u.y * u.y * o.delta_norm());
}

SqrtCoords to_sqrt_coords(const QuadOrder& order, const Integer& x, const Integer& y)
{
    if (order.delta_kind() == DeltaKind::MinusSqrtD) return {Rational(x), Rational(-y)};
    return {Rational(x) + make_rational(y, 2), make_rational(-y, 2)};
}

Rational embedded_inner(const QuadOrder& order, const SqrtCoords& u, const SqrtCoords& v)
{
    const Rational D(order.D());
    if (order.imaginary()) return u.x * v.x - D * u.y * v.y;
    return 2 * (u.x * v.x + D * u.y * v.y);
}

std::string format_element(std::int64_t D, const SqrtCoords& z)
{
    Integer den;
    mpz_lcm(den.get_mpz_t(), z.x.get_den_mpz_t(), z.y.get_den_mpz_t());
    const Integer nx = Rational(z.x * den).get_num();
    const Integer ny = Rational(z.y * den).get_num();
    if (ny == 0) {
        return den == 1 ? signed_str(nx) : signed_str(nx) + "/" + den.get_str();
    }
    std::string radical = std::string(kRoot) + (D < 0 ? std::string(kMinus) + std::to_string(-D) : std::to_string(D));
    const Integer ay = abs(ny);
    std::string coeff = (ay == 1 ? std::string() : ay.get_str()) + radical;
    std::string body;
    if (nx == 0) {
        body = (ny < 0 ? std::string(kMinus) : std::string()) + coeff;
        return den == 1 ? body : body + "/" + den.get_str();
    }
    body = signed_str(nx) + (ny < 0 ? kMinus : "+") + coeff;
    return den == 1 ? body : "(" + body + ")/" + den.get_str();
}

}  // namespace wrlat
