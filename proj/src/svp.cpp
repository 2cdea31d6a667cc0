#include "wrlat/svp.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace wrlat {

namespace {

// Gram-Schmidt data from a Gram matrix: mu (row i, col j < i) and squared lengths.
struct Gso {
    std::size_t n;
    std::vector<Rational> mu;
    std::vector<Rational> bstar;

    Rational& m(std::size_t i, std::size_t j) { return mu[i * n + j]; }
    const Rational& m(std::size_t i, std::size_t j) const { return mu[i * n + j]; }
};

Gso compute_gso(std::size_t n, const std::vector<Rational>& g)
{
    Gso s{n, std::vector<Rational>(n * n), std::vector<Rational>(n)};
    std::vector<Rational> r(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Rational acc = g[i * n + j];
            for (std::size_t k = 0; k < j; ++k) acc -= s.m(j, k) * r[i * n + k];
            r[i * n + j] = acc;
            if (j < i) {
                s.m(i, j) = acc / s.bstar[j];
            } else {
                s.bstar[i] = acc;
            }
        }
        if (s.bstar[i] <= 0) throw InvalidInput("Gram matrix is not positive definite");
    }
    return s;
}

struct Candidate {
    Rational value;
    std::vector<std::int64_t> x;
};

class Enumerator {
public:
    Enumerator(const GramMatrix& G, Rational bound)
        : n_(G.dim()), gso_(compute_gso(G.dim(), G.entries())), bound_(std::move(bound)), x_(n_, 0)
    {
    }

    std::vector<Candidate> run()
    {
        if (n_ > 0) descend(n_ - 1, Rational(0));
        return std::move(found_);
    }

private:
    bool fits(std::int64_t v, const Rational& c, const Rational& t) const
    {
        const Rational d = Rational(v) - c;
        return d * d <= t;
    }

    void descend(std::size_t level, const Rational& acc)
    {
        Rational c = 0;
        for (std::size_t j = level + 1; j < n_; ++j) c -= gso_.m(j, level) * x_[j];
        const Rational t = (bound_ - acc) / gso_.bstar[level];
        const std::int64_t mid = to_int64(round_of(c));
        if (!fits(mid, c, t)) return;

        const double cd = c.get_d();
        const double rd = std::sqrt(std::max(0.0, t.get_d()));
        auto lo = std::min(mid, static_cast<std::int64_t>(std::ceil(cd - rd)));
        auto hi = std::max(mid, static_cast<std::int64_t>(std::floor(cd + rd)));
        while (!fits(lo, c, t)) ++lo;
        while (fits(lo - 1, c, t)) --lo;
        while (!fits(hi, c, t)) --hi;
        while (fits(hi + 1, c, t)) ++hi;

        for (std::int64_t v = lo; v <= hi; ++v) {
            x_[level] = v;
            const Rational d = Rational(v) - c;
            const Rational next = acc + gso_.bstar[level] * d * d;
            if (level > 0) {
                descend(level - 1, next);
            } else if (std::any_of(x_.begin(), x_.end(), [](std::int64_t e) { return e != 0; })) {
                found_.push_back({next, x_});
            }
        }
        x_[level] = 0;
    }

    std::size_t n_;
    Gso gso_;
    Rational bound_;
    std::vector<std::int64_t> x_;
    std::vector<Candidate> found_;
};

}  // namespace

GramMatrix::GramMatrix(std::size_t n, std::vector<Rational> entries) : n_(n), e_(std::move(entries))
{
    if (n_ == 0) throw InvalidInput("Gram matrix must have positive dimension");
    if (e_.size() != n_ * n_) throw InvalidInput("Gram matrix entry count does not match dimension");
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (e_[i * n_ + j] != e_[j * n_ + i]) throw InvalidInput("Gram matrix is not symmetric");
    compute_gso(n_, e_);
}

Rational GramMatrix::quadratic(const std::vector<std::int64_t>& x) const
{
    if (x.size() != n_) throw InvalidInput("vector dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < n_; ++j)
            if (x[j] != 0) row += e_[i * n_ + j] * x[j];
        acc += row * x[i];
    }
    return acc;
}

IntMatrix::IntMatrix(std::size_t n) : n_(n), e_(n * n, 0) {}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix U(n);
    for (std::size_t i = 0; i < n; ++i) U(i, i) = 1;
    return U;
}

Integer IntMatrix::det() const
{
    // Bareiss fraction-free elimination.
    std::vector<Integer> a = e_;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k < n_; ++k) {
        std::size_t p = k;
        while (p < n_ && a[p * n_ + k] == 0) ++p;
        if (p == n_) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(a[p * n_ + j], a[k * n_ + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n_; ++i) {
            for (std::size_t j = k + 1; j < n_; ++j) {
                a[i * n_ + j] = (a[i * n_ + j] * a[k * n_ + k] - a[i * n_ + k] * a[k * n_ + j]) / prev;
            }
        }
        prev = a[k * n_ + k];
    }
    return n_ == 0 ? Integer(1) : Integer(sign * a[(n_ - 1) * n_ + (n_ - 1)]);
}

std::vector<std::int64_t> IntMatrix::apply(const std::vector<std::int64_t>& x) const
{
    if (x.size() != n_) throw InvalidInput("vector dimension mismatch");
    std::vector<std::int64_t> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        Integer acc = 0;
        for (std::size_t j = 0; j < n_; ++j) acc += e_[i * n_ + j] * x[j];
        out[i] = to_int64(acc);
    }
    return out;
}

GramMatrix congruent(const GramMatrix& G, const IntMatrix& U)
{
    const std::size_t n = G.dim();
    if (U.dim() != n) throw InvalidInput("dimension mismatch");
    std::vector<Rational> gu(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += G(i, k) * U(k, j);
            gu[i * n + j] = acc;
        }
    std::vector<Rational> out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += U(k, i) * gu[k * n + j];
            out[i * n + j] = acc;
        }
    return GramMatrix(n, std::move(out));
}

LllResult lll_reduce(const GramMatrix& G)
{
    const std::size_t n = G.dim();
    std::vector<Rational> g = G.entries();
    IntMatrix U = IntMatrix::identity(n);
    auto at = [&](std::size_t i, std::size_t j) -> Rational& { return g[i * n + j]; };

    // b_k <- b_k - q b_j
    auto subtract = [&](std::size_t k, std::size_t j, const Integer& q) {
        const Rational qq(q);
        at(k, k) = at(k, k) - 2 * qq * at(k, j) + qq * qq * at(j, j);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            at(k, i) -= qq * at(j, i);
            at(i, k) = at(k, i);
        }
        for (std::size_t i = 0; i < n; ++i) U(i, k) -= q * U(i, j);
    };
    auto swap_adjacent = [&](std::size_t k) {
        for (std::size_t i = 0; i < n; ++i) std::swap(at(k, i), at(k - 1, i));
        for (std::size_t i = 0; i < n; ++i) std::swap(at(i, k), at(i, k - 1));
        for (std::size_t i = 0; i < n; ++i) std::swap(U(i, k), U(i, k - 1));
    };

    const Rational lovasz(3, 4);
    Gso s = compute_gso(n, g);
    std::size_t k = 1;
    while (k < n) {
        for (std::size_t jj = k; jj-- > 0;) {
            const Integer q = round_of(s.m(k, jj));
            if (q == 0) continue;
            subtract(k, jj, q);
            for (std::size_t l = 0; l < jj; ++l) s.m(k, l) -= q * s.m(jj, l);
            s.m(k, jj) -= q;
        }
        const Rational mu = s.m(k, k - 1);
        if (s.bstar[k] >= (lovasz - mu * mu) * s.bstar[k - 1]) {
            ++k;
        } else {
            swap_adjacent(k);
            s = compute_gso(n, g);
            k = std::max<std::size_t>(1, k - 1);
        }
    }
    return {GramMatrix(n, std::move(g)), std::move(U)};
}

std::vector<std::vector<std::int64_t>> vectors_within(const GramMatrix& G, const Rational& bound)
{
    std::vector<std::vector<std::int64_t>> out;
    for (auto& c : Enumerator(G, bound).run()) out.push_back(std::move(c.x));
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& vectors)
{
    if (vectors.empty()) return 0;
    const std::size_t cols = vectors.front().size();
    std::vector<std::vector<Rational>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) rows.emplace_back(v.begin(), v.end());
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const Rational f = rows[i][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

ShortVectorReport enumerate_shortest(const GramMatrix& G)
{
    if (G.dim() > kMaxEnumerationDim)
        throw InvalidInput("dimension " + std::to_string(G.dim()) + " exceeds enumeration guard " +
                           std::to_string(kMaxEnumerationDim));
    const LllResult red = lll_reduce(G);
    Rational bound = red.gram(0, 0);
    for (std::size_t i = 1; i < G.dim(); ++i) bound = std::min(bound, red.gram(i, i));

    auto found = Enumerator(red.gram, bound).run();
    ShortVectorReport report;
    report.minimum = bound;
    for (const auto& c : found) report.minimum = std::min(report.minimum, c.value);
    for (const auto& c : found)
        if (c.value == report.minimum) report.vectors.push_back(red.basis.apply(c.x));
    std::sort(report.vectors.begin(), report.vectors.end());
    report.span_rank = rational_rank(report.vectors);
    return report;
}

bool is_wr_nd(const GramMatrix& G)
{
    return enumerate_shortest(G).span_rank == G.dim();
}

}  // namespace wrlat
