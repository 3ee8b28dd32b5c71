#include "mdrg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace mdrg {

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("matrix-vector size mismatch");
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != 0 && v[c] != 0)
                out[r] += (*this)(r, c) * v[c];
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const
{
    if (cols_ != other.rows_)
        throw std::invalid_argument("matrix product size mismatch");
    RationalMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const auto& lhs = (*this)(r, k);
            if (lhs == 0)
                continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                if (other(k, c) != 0)
                    out(r, c) += lhs * other(k, c);
        }
    return out;
}

namespace {

// Reduces m in place to row echelon form; returns pivot columns.
std::vector<std::size_t> eliminate(RationalMatrix& m, std::size_t column_limit)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < column_limit && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(pivot, c), m(row, c));
        const Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            const Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (m(row, c) != 0)
                    m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(RationalMatrix m)
{
    return eliminate(m, m.cols()).size();
}

RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t length)
{
    RationalMatrix m(length, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != length)
            throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < length; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

bool in_span(const std::vector<RationalVector>& columns, const RationalVector& target)
{
    auto with = columns;
    with.push_back(target);
    return rank(from_columns(columns, target.size())) == rank(from_columns(with, target.size()));
}

SolveResult solve(const RationalMatrix& a, const RationalVector& b)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("right-hand side size mismatch");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const auto pivots = eliminate(aug, a.cols());
    for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
        if (aug(r, a.cols()) != 0)
            return {SolveStatus::Inconsistent, {}};
    if (pivots.size() < a.cols())
        return {SolveStatus::Underdetermined, {}};
    RationalVector x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug(r, a.cols());
    return {SolveStatus::Unique, std::move(x)};
}

} // namespace mdrg
