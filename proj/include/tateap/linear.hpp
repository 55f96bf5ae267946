#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tateap/rational.hpp"

namespace tateap {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    const std::vector<Rational>& entries() const { return entries_; }

    std::vector<Rational> apply(std::span<const Rational> x) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

enum class LinearKind { Unique, Family, Inconsistent };

const char* to_string(LinearKind k);

struct LinearOutcome {
    LinearKind kind = LinearKind::Inconsistent;
    // Unique: the solution. Family: one particular solution with every free
    // variable set to zero. Inconsistent: empty.
    std::vector<Rational> solution;
    std::size_t free_variables = 0;
    std::size_t rank = 0;
};

/// Exact Gauss-Jordan elimination of [m | rhs]. Pivot is the first nonzero
/// entry at or below the current row in column order.
LinearOutcome solve_linear(const RationalMatrix& m, std::span<const Rational> rhs);

std::size_t rank(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);

}  // namespace tateap
