#pragma once

#include <vector>

#include "etaq/series.hpp"

namespace etaq {

/* Largest matrix the determinant will accept. Cofactor expansion grows
 * factorially, and nothing in the tool needs more rows than this. */
inline constexpr int kMaxDeterminantRows = 10;

/* Dense matrix of truncated series sharing one truncation order. */
class SeriesMatrix {
public:
    SeriesMatrix(int rows, int cols, int order);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int order() const { return order_; }

    const TruncatedSeries& at(int r, int c) const;
    /* Stores a copy truncated to the matrix order; the entry must know at
     * least that many coefficients. */
    void set(int r, int c, const TruncatedSeries& s);

private:
    size_t index(int r, int c) const;

    int rows_, cols_, order_;
    std::vector<TruncatedSeries> e_;
};

/* Determinant over the series ring by Laplace cofactor expansion with
 * column-subset minors shared across branches. Division-free, so rows
 * need no unit pivots. NotSquare for non-square input, OutOfRange past
 * kMaxDeterminantRows. */
TruncatedSeries determinant(const SeriesMatrix& m);

} // namespace etaq
