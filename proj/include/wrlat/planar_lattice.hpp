#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "wrlat/quad_ideals.hpp"

namespace wrlat {

/// Q(m, n) = c1*m^2 + c2*m*n + c3*n^2, the norm form of a planar lattice basis.
struct BinaryForm {
    Rational c1;
    Rational c2;
    Rational c3;

    Rational discriminant() const { return c2 * c2 - 4 * c1 * c3; }
    bool positive_definite() const { return c1 > 0 && discriminant() < 0; }
    Rational value(const Integer& m, const Integer& n) const { return c1 * m * m + c2 * m * n + c3 * n * n; }
    /// Form with Gram matrix [[g11, g12], [g12, g22]].
    static BinaryForm from_gram(const Rational& g11, const Rational& g12, const Rational& g22)
    {
        return {g11, 2 * g12, g22};
    }

    friend bool operator==(const BinaryForm& l, const BinaryForm& r)
    {
        return l.c1 == r.c1 && l.c2 == r.c2 && l.c3 == r.c3;
    }
};

/// Integer 2x2 matrix, row-major: [[m[0], m[1]], [m[2], m[3]]]. Columns are basis vectors.
struct Mat2 {
    std::array<Integer, 4> m{1, 0, 0, 1};

    static Mat2 identity() { return {}; }
    Integer det() const { return m[0] * m[3] - m[1] * m[2]; }
    Mat2 operator*(const Mat2& o) const;
    friend bool operator==(const Mat2& l, const Mat2& r) { return l.m == r.m; }
};

/// The form of the basis given by the columns of U: Q'(v) = Q(U v).
BinaryForm transform(const BinaryForm& f, const Mat2& U);

struct ReducedForm {
    BinaryForm form;
    Mat2 basis;  // unimodular, original coordinates of the reduced basis
};

/// Lagrange-Gauss reduction to 0 <= c2 <= c1 <= c3. Throws InvalidInput unless positive definite.
ReducedForm gauss_reduce(const BinaryForm& f);

using PlanarVector = std::array<std::int64_t, 2>;

struct MinimalSet {
    Rational minimum;
    std::vector<PlanarVector> vectors;  // input-basis coordinates, sorted, closed under negation
};

MinimalSet minimal_vectors(const BinaryForm& f);

bool is_wr(const BinaryForm& f);
bool is_hexagonal(const BinaryForm& f);
/// Rotation plus dilation (reflections allowed) equivalence of the underlying lattices.
bool is_similar(const BinaryForm& f, const BinaryForm& h);

/// Norm form of the Minkowski image of the canonical basis {a, b + g*delta}.
BinaryForm form_from_ideal(const IdealTriple& t);
/// Scaled by 1/denominator^2.
BinaryForm form_from_ideal(const FractionalIdeal& I);

/// Minimum bound: |Lambda| >= N(I) (imaginary) or |Lambda|^2 >= 4 N(I) (real).
bool check_min_bound(const IdealTriple& t);
bool min_bound_holds(const QuadOrder& order, const Rational& minimum, std::int64_t norm);

/// Element m*a + n*(b + g*delta) as X + Y*sqrt(D).
SqrtCoords ideal_element(const IdealTriple& t, std::int64_t m, std::int64_t n);

}  // namespace wrlat
