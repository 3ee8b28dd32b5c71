#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mdrg/rational.hpp"

namespace mdrg {

using RationalVector = std::vector<Rational>;

/// Dense row-major rational matrix.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector operator*(const RationalVector& v) const;
    RationalMatrix operator*(const RationalMatrix& other) const;
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Rank by exact Gaussian elimination.
std::size_t rank(RationalMatrix m);

/// Matrix whose columns are the given vectors (all of equal length).
RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t length);

/// Whether `target` lies in the span of `columns`.
bool in_span(const std::vector<RationalVector>& columns, const RationalVector& target);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SolveResult {
    SolveStatus status = SolveStatus::Inconsistent;
    RationalVector x; // filled when status == Unique
};

/// Solves A x = b exactly.
SolveResult solve(const RationalMatrix& a, const RationalVector& b);

} // namespace mdrg
