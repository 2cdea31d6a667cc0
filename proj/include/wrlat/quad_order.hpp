#pragma once

#include <cstdint>
#include <string>

#include "wrlat/exact_arith.hpp"

namespace wrlat {

/// delta = -sqrt(D) when D != 1 (mod 4), delta = (1 - sqrt(D))/2 when D == 1 (mod 4).
enum class DeltaKind { MinusSqrtD, HalfOneMinusSqrtD };

/// The quadratic order Z[delta] for a non-square radicand D.
///
/// D may be non-squarefree; the order is then non-maximal and `maximal()`
/// reports false. Negative D gives an imaginary field (signature (0,1)),
/// positive D a real one (signature (2,0)).
class QuadOrder {
public:
    explicit QuadOrder(std::int64_t D);

    std::int64_t D() const noexcept { return D_; }
    DeltaKind delta_kind() const noexcept { return kind_; }
    bool maximal() const noexcept { return maximal_; }
    bool imaginary() const noexcept { return D_ < 0; }
    int r1() const noexcept { return imaginary() ? 0 : 2; }
    int r2() const noexcept { return imaginary() ? 1 : 0; }

    // delta^2 = sq_const + sq_lin * delta
    std::int64_t delta_sq_const() const noexcept;
    std::int64_t delta_sq_lin() const noexcept;
    // delta + conj(delta), delta * conj(delta)
    std::int64_t delta_trace() const noexcept;
    std::int64_t delta_norm() const noexcept;

    friend bool operator==(const QuadOrder& a, const QuadOrder& b) noexcept { return a.D_ == b.D_; }

private:
    std::int64_t D_;
    DeltaKind kind_;
    bool maximal_;
};

/// Element X + Y*sqrt(D) with rational X, Y.
struct SqrtCoords {
    Rational x;
    Rational y;
};

/// x + y*delta in Z[delta].
struct QuadInt {
    Integer x;
    Integer y;
    QuadOrder order;

    QuadInt(Integer x_, Integer y_, QuadOrder order_) : x(std::move(x_)), y(std::move(y_)), order(order_) {}

    bool is_zero() const { return x == 0 && y == 0; }
    friend bool operator==(const QuadInt& a, const QuadInt& b) { return a.order == b.order && a.x == b.x && a.y == b.y; }
};

/// Throws InvalidInput when u and v live in different orders.
QuadInt quad_mul(const QuadInt& u, const QuadInt& v);
QuadInt quad_add(const QuadInt& u, const QuadInt& v);
QuadInt quad_conj(const QuadInt& u);
/// Integer-valued norm u * conj(u).
Rational quad_norm(const QuadInt& u);

/// Rewrites x + y*delta as X + Y*sqrt(D).
SqrtCoords to_sqrt_coords(const QuadOrder& order, const Integer& x, const Integer& y);

/// Exact inner product of Minkowski images: Re/Im for D < 0, both real embeddings for D > 0.
Rational embedded_inner(const QuadOrder& order, const SqrtCoords& u, const SqrtCoords& v);

/// Algebraic rendering such as "(5−√−119)/2" or "1−√3".
std::string format_element(std::int64_t D, const SqrtCoords& z);

}  // namespace wrlat
