#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wrlat/exact_arith.hpp"

namespace wrlat {

/// Largest dimension enumerate_shortest accepts.
inline constexpr std::size_t kMaxEnumerationDim = 24;

/// Symmetric positive definite rational Gram matrix, checked exactly on construction.
class GramMatrix {
public:
    GramMatrix() = default;
    /// Row-major n*n entries. Throws InvalidInput unless symmetric positive definite.
    GramMatrix(std::size_t n, std::vector<Rational> entries);

    std::size_t dim() const noexcept { return n_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    const std::vector<Rational>& entries() const noexcept { return e_; }

    /// x^T G x.
    Rational quadratic(const std::vector<std::int64_t>& x) const;

    friend bool operator==(const GramMatrix& l, const GramMatrix& r) { return l.n_ == r.n_ && l.e_ == r.e_; }

private:
    std::size_t n_ = 0;
    std::vector<Rational> e_;
};

/// Square integer matrix, row-major; columns are basis vectors.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n);
    static IntMatrix identity(std::size_t n);

    std::size_t dim() const noexcept { return n_; }
    Integer& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    Integer det() const;
    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& x) const;

private:
    std::size_t n_ = 0;
    std::vector<Integer> e_;
};

/// U^T G U.
GramMatrix congruent(const GramMatrix& G, const IntMatrix& U);

struct LllResult {
    GramMatrix gram;
    IntMatrix basis;  // unimodular; gram == congruent(input, basis)
};

/// Exact rational LLL with Lovasz parameter 3/4.
LllResult lll_reduce(const GramMatrix& G);

struct ShortVectorReport {
    Rational minimum;
    std::vector<std::vector<std::int64_t>> vectors;  // original coordinates, sorted
    std::size_t span_rank = 0;
};

/// All nonzero x with x^T G x <= bound, in G's own coordinates, sorted.
std::vector<std::vector<std::int64_t>> vectors_within(const GramMatrix& G, const Rational& bound);

/// Minimum and complete minimal set via LLL and Fincke-Pohst. Throws InvalidInput above the dimension guard.
ShortVectorReport enumerate_shortest(const GramMatrix& G);

bool is_wr_nd(const GramMatrix& G);

/// Rank over Q.
std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& vectors);

}  // namespace wrlat
