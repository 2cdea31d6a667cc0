#include "wrlat/planar_lattice.hpp"

#include <algorithm>

namespace wrlat {

Mat2 Mat2::operator*(const Mat2& o) const
{
    return {{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
             m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
}

BinaryForm transform(const BinaryForm& f, const Mat2& U)
{
    const auto& u = U.m;
    const Rational half_c2 = f.c2 / 2;
    auto bilinear = [&](const Integer& p, const Integer& q, const Integer& r, const Integer& s) -> Rational {
        return f.c1 * p * r + half_c2 * (p * s + q * r) + f.c3 * q * s;
    };
    return {f.value(u[0], u[2]), 2 * bilinear(u[0], u[2], u[1], u[3]), f.value(u[1], u[3])};
}

ReducedForm gauss_reduce(const BinaryForm& f)
{
    if (!f.positive_definite()) throw InvalidInput("form is not positive definite");
    BinaryForm r = f;
    Mat2 U;
    auto& u = U.m;
    for (;;) {
        if (r.c1 > r.c3) {
            // (e1, e2) -> (e2, -e1)
            std::swap(r.c1, r.c3);
            r.c2 = -r.c2;
            std::swap(u[0], u[1]);
            std::swap(u[2], u[3]);
            u[1] = -u[1];
            u[3] = -u[3];
        }
        if (abs(r.c2) <= r.c1) break;
        // e2 -> e2 - k e1
        const Integer k = round_of(r.c2 / (2 * r.c1));
        r.c3 = r.c3 - k * r.c2 + k * k * r.c1;
        r.c2 = r.c2 - 2 * k * r.c1;
        u[1] -= k * u[0];
        u[3] -= k * u[2];
    }
    if (r.c2 < 0) {
        r.c2 = -r.c2;
        u[1] = -u[1];
        u[3] = -u[3];
    }
    return {r, U};
}

MinimalSet minimal_vectors(const BinaryForm& f)
{
    const auto [r, U] = gauss_reduce(f);
    MinimalSet out{r.c1, {}};
    // A reduced basis attains both successive minima; every minimal vector has
    // reduced coordinates in [-1, 1]^2, so the [-2, 2]^2 window is exhaustive.
    for (int m = -2; m <= 2; ++m) {
        for (int n = -2; n <= 2; ++n) {
            if ((m == 0 && n == 0) || r.value(m, n) != r.c1) continue;
            const Integer x = U.m[0] * m + U.m[1] * n;
            const Integer y = U.m[2] * m + U.m[3] * n;
            out.vectors.push_back({to_int64(x), to_int64(y)});
        }
    }
    std::sort(out.vectors.begin(), out.vectors.end());
    return out;
}

bool is_wr(const BinaryForm& f)
{
    return minimal_vectors(f).vectors.size() >= 4;
}

bool is_hexagonal(const BinaryForm& f)
{
    return minimal_vectors(f).vectors.size() == 6;
}

bool is_similar(const BinaryForm& f, const BinaryForm& h)
{
    const BinaryForm a = gauss_reduce(f).form;
    const BinaryForm b = gauss_reduce(h).form;
    return a.c1 * b.c2 == b.c1 * a.c2 && a.c1 * b.c3 == b.c1 * a.c3;
}

SqrtCoords ideal_element(const IdealTriple& t, std::int64_t m, std::int64_t n)
{
    return to_sqrt_coords(t.order, Integer(m) * t.a + Integer(n) * t.b, Integer(n) * t.g);
}

BinaryForm form_from_ideal(const IdealTriple& t)
{
    require_valid(t);
    const SqrtCoords e1 = ideal_element(t, 1, 0);
    const SqrtCoords e2 = ideal_element(t, 0, 1);
    return BinaryForm::from_gram(embedded_inner(t.order, e1, e1), embedded_inner(t.order, e1, e2),
                                 embedded_inner(t.order, e2, e2));
}

BinaryForm form_from_ideal(const FractionalIdeal& I)
{
    if (I.denominator == 0) throw InvalidInput("zero denominator");
    const BinaryForm f = form_from_ideal(I.integral);
    const Rational s = Rational(1) / (Rational(I.denominator) * I.denominator);
    return {f.c1 * s, f.c2 * s, f.c3 * s};
}

bool min_bound_holds(const QuadOrder& order, const Rational& minimum, std::int64_t norm)
{
    if (order.imaginary()) return minimum >= norm;
    return minimum * minimum >= 4 * Rational(norm);
}

bool check_min_bound(const IdealTriple& t)
{
    return min_bound_holds(t.order, minimal_vectors(form_from_ideal(t)).minimum, ideal_norm(t));
}

}  // namespace wrlat
