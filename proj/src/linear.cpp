#include "tateap/linear.hpp"

#include <utility>

#include "tateap/error.hpp"

namespace tateap {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw UsageError("matrix entry count mismatch");
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw UsageError("ragged matrix literal");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> x) const {
    if (x.size() != cols_) throw UsageError("matrix-vector dimension mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * x[c];
        }
    }
    return out;
}

const char* to_string(LinearKind k) {
    switch (k) {
        case LinearKind::Unique: return "Unique";
        case LinearKind::Family: return "Family";
        case LinearKind::Inconsistent: return "Inconsistent";
    }
    return "?";
}

namespace {

struct Echelon {
    RationalMatrix m;
    std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form over the first `limit` columns; remaining
// columns (the augmented part) are carried along.
Echelon reduce(RationalMatrix m, std::size_t limit) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < limit && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        }
        const Rational inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

LinearOutcome solve_linear(const RationalMatrix& m, std::span<const Rational> rhs) {
    if (rhs.size() != m.rows()) throw UsageError("rhs length does not match matrix rows");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[r];
    }
    const Echelon e = reduce(std::move(aug), m.cols());
    const std::size_t rk = e.pivot_cols.size();

    LinearOutcome out;
    out.rank = rk;
    for (std::size_t r = rk; r < m.rows(); ++r) {
        if (!e.m(r, m.cols()).is_zero()) {
            out.kind = LinearKind::Inconsistent;
            return out;
        }
    }
    out.solution.assign(m.cols(), Rational{});
    for (std::size_t i = 0; i < rk; ++i) out.solution[e.pivot_cols[i]] = e.m(i, m.cols());
    out.free_variables = m.cols() - rk;
    out.kind = out.free_variables == 0 ? LinearKind::Unique : LinearKind::Family;
    return out;
}

std::size_t rank(const RationalMatrix& m) { return reduce(m, m.cols()).pivot_cols.size(); }

Rational determinant(const RationalMatrix& m) {
    if (!m.square()) throw UsageError("determinant of a non-square matrix");
    RationalMatrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a(p, col).is_zero()) ++p;
        if (p == n) return 0;
        if (p != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        const Rational inv = a(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            const Rational f = a(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

}  // namespace tateap
