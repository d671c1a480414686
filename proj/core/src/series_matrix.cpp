#include "etaq/series_matrix.hpp"

#include <bit>
#include <optional>

namespace etaq {

SeriesMatrix::SeriesMatrix(int rows, int cols, int order)
    : rows_(rows), cols_(cols), order_(order) {
    if (rows < 1 || cols < 1) throw OutOfRange("SeriesMatrix: dimensions must be positive");
    if (order < 0) throw OutOfRange("SeriesMatrix: negative order");
    e_.assign(static_cast<size_t>(rows) * cols, TruncatedSeries(order));
}

size_t SeriesMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw OutOfRange("SeriesMatrix: index out of bounds");
    return static_cast<size_t>(r) * cols_ + c;
}

const TruncatedSeries& SeriesMatrix::at(int r, int c) const {
    return e_[index(r, c)];
}

void SeriesMatrix::set(int r, int c, const TruncatedSeries& s) {
    if (s.order() < order_)
        throw OutOfRange("SeriesMatrix::set: entry order below the matrix order");
    e_[index(r, c)] = s.order() == order_ ? s : s.truncated(order_);
}

TruncatedSeries determinant(const SeriesMatrix& m) {
    if (m.rows() != m.cols())
        throw NotSquare("determinant: matrix is " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()));
    const int k = m.rows();
    if (k > kMaxDeterminantRows)
        throw OutOfRange("determinant: size exceeds the cofactor bound");
    const int N = m.order();

    /* minor[S] is the determinant of the bottom |S| rows restricted to the
     * column set S. Expanding along the topmost of those rows reuses each
     * sub-minor across every superset, so the full expansion costs
     * k * 2^(k-1) series products instead of ~k! of them. */
    std::vector<std::optional<TruncatedSeries>> minor(1u << k);
    minor[0] = TruncatedSeries::one(N);

    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        const int size = std::popcount(mask);
        const int row = k - size;
        TruncatedSeries acc(N);
        int position = 0;
        for (int col = 0; col < k; ++col) {
            if (!(mask & (1u << col))) continue;
            const TruncatedSeries term = m.at(row, col) * *minor[mask & ~(1u << col)];
            acc = (position % 2 == 0) ? acc + term : acc - term;
            ++position;
        }
        minor[mask] = std::move(acc);
    }
    return *minor[(1u << k) - 1];
}

} // namespace etaq
