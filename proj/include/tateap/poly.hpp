#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "tateap/linear.hpp"
#include "tateap/rational.hpp"

namespace tateap {

/// Dense univariate polynomial over the rationals, ascending coefficients.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class RationalPoly {
public:
    RationalPoly() = default;
    RationalPoly(Rational constant);  // NOLINT(google-explicit-constructor)
    RationalPoly(int constant) : RationalPoly(Rational(constant)) {}  // NOLINT
    RationalPoly(std::initializer_list<Rational> ascending);
    explicit RationalPoly(std::vector<Rational> ascending);

    /// c1 * t + c0
    static RationalPoly affine(const Rational& c1, const Rational& c0);
    static RationalPoly variable() { return affine(1, 0); }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational{}; }
    Rational leading() const { return is_zero() ? Rational{} : coeffs_.back(); }

    Rational operator()(const Rational& t) const;

    RationalPoly operator-() const;
    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly& operator*=(const RationalPoly& o);
    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
    friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

    /// Quotient and remainder of division by (t - r).
    std::pair<RationalPoly, Rational> divide_linear(const Rational& r) const;

    /// Monic rescaling; zero stays zero.
    RationalPoly monic() const;

    /// Human-readable form in the indeterminate `var`, highest degree first.
    std::string str(const std::string& var = "a") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// True when p = c * q for some nonzero rational c.
bool proportional(const RationalPoly& p, const RationalPoly& q);

/// Square matrix whose entries are polynomials in one indeterminate.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    RationalPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const RationalPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    RationalMatrix evaluate(const Rational& t) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<RationalPoly> entries_;
};

/// Determinant as an exact polynomial, by evaluating at distinct integer
/// abscissae and interpolating (degree bound: sum of per-row max degrees).
RationalPoly det_poly(const PolyMatrix& m);

struct RationalRoot {
    Rational value;
    std::size_t multiplicity = 0;
    friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// Every rational root with multiplicity, ascending. Candidates come from the
/// rational-root theorem applied to the primitive integer form of `p`.
std::vector<RationalRoot> rational_roots(const RationalPoly& p);

/// Positive divisors of |n| (n != 0), ascending, by trial division.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace tateap
