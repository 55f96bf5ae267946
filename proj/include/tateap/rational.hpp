#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tateap {

using Integer = mpz_class;

/// Exact rational number in canonical form: gcd(num, den) = 1, den > 0,
/// zero is 0/1. Immutable from the outside; every operation returns a new
/// canonical value.
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long long v);       // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Accepts "p", "p/q", optionally with a leading '-'. q must be nonzero.
    static Rational parse(std::string_view text);

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    const Integer& num() const { return v_.get_num(); }
    const Integer& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const;
    Rational inverse() const;
    Rational pow(unsigned e) const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    std::size_t hash() const;

    const mpq_class& backend() const { return v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Hash of an arbitrary-precision integer (limb mix).
std::size_t hash_integer(const Integer& z);

}  // namespace tateap

template <>
struct std::hash<tateap::Rational> {
    std::size_t operator()(const tateap::Rational& r) const noexcept { return r.hash(); }
};
