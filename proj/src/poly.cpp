#include "tateap/poly.hpp"

#include <algorithm>
#include <sstream>

#include "tateap/error.hpp"

namespace tateap {

RationalPoly::RationalPoly(Rational constant) : coeffs_{std::move(constant)} { trim(); }

RationalPoly::RationalPoly(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

RationalPoly::RationalPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

RationalPoly RationalPoly::affine(const Rational& c1, const Rational& c0) { return {c0, c1}; }

void RationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RationalPoly::operator()(const Rational& t) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) { return *this += -o; }

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

std::pair<RationalPoly, Rational> RationalPoly::divide_linear(const Rational& r) const {
    if (is_zero()) return {RationalPoly{}, Rational{}};
    // Synthetic division, highest degree first.
    std::vector<Rational> q(coeffs_.size() - 1);
    Rational carry;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        carry = carry * r + coeffs_[i];
        if (i > 0) q[i - 1] = carry;
    }
    return {RationalPoly(std::move(q)), carry};
}

RationalPoly RationalPoly::monic() const {
    if (is_zero()) return *this;
    const Rational inv = leading().inverse();
    RationalPoly out = *this;
    for (auto& c : out.coeffs_) c *= inv;
    return out;
}

std::string RationalPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (i == 0 || !unit) os << mag;
        if (i >= 1) {
            if (!unit) os << "*";
            os << var;
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

bool proportional(const RationalPoly& p, const RationalPoly& q) {
    if (p.is_zero() || q.is_zero()) return false;
    return p.monic() == q.monic();
}

RationalMatrix PolyMatrix::evaluate(const Rational& t) const {
    RationalMatrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c)(t);
    }
    return out;
}

RationalPoly det_poly(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw UsageError("det_poly of a non-square matrix");
    std::size_t bound = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        int row_max = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) row_max = std::max(row_max, m(r, c).degree());
        bound += static_cast<std::size_t>(row_max);
    }
    // Lagrange interpolation through bound + 1 integer nodes 0, 1, ..., bound.
    RationalPoly result;
    for (std::size_t i = 0; i <= bound; ++i) {
        const Rational xi = static_cast<long>(i);
        const Rational yi = determinant(m.evaluate(xi));
        if (yi.is_zero()) continue;
        RationalPoly basis = 1;
        Rational denom = 1;
        for (std::size_t j = 0; j <= bound; ++j) {
            if (j == i) continue;
            const Rational xj = static_cast<long>(j);
            basis *= RationalPoly::affine(1, -xj);
            denom *= xi - xj;
        }
        result += basis * RationalPoly(yi / denom);
    }
    return result;
}

std::vector<Integer> positive_divisors(const Integer& n) {
    if (n == 0) throw UsageError("divisors of zero");
    Integer rest = ::abs(n);
    // Prime factorisation by trial division.
    std::vector<std::pair<Integer, unsigned>> factors;
    for (Integer p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) factors.emplace_back(p, e);
    }
    if (rest > 1) factors.emplace_back(rest, 1);

    std::vector<Integer> divs{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<RationalRoot> rational_roots(const RationalPoly& p) {
    if (p.is_zero()) throw UsageError("rational_roots of the zero polynomial");

    std::vector<RationalRoot> roots;
    RationalPoly work = p;

    // Zero roots first, so the constant term is nonzero for the candidate scan.
    std::size_t zero_mult = 0;
    while (work.coefficient(0).is_zero()) {
        work = work.divide_linear(0).first;
        ++zero_mult;
    }
    if (zero_mult > 0) roots.push_back({Rational{}, zero_mult});
    if (work.degree() <= 0) return roots;

    // Primitive integer form: clear denominators, divide by the content.
    Integer lcm = 1;
    for (const auto& c : work.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Integer> ints;
    Integer content = 0;
    for (const auto& c : work.coefficients()) {
        ints.push_back(c.num() * (lcm / c.den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
    }
    for (auto& z : ints) z /= content;

    const auto numerators = positive_divisors(ints.front());
    const auto denominators = positive_divisors(ints.back());

    std::vector<Rational> candidates;
    for (const auto& q : denominators) {
        for (const auto& n : numerators) {
            candidates.emplace_back(n, q);
            candidates.emplace_back(Integer(-n), q);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& r : candidates) {
        std::size_t mult = 0;
        for (;;) {
            auto [q, rem] = work.divide_linear(r);
            if (!rem.is_zero()) break;
            work = std::move(q);
            ++mult;
        }
        if (mult > 0) roots.push_back({r, mult});
        if (work.degree() <= 0) break;
    }
    std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return x.value < y.value; });
    return roots;
}

}  // namespace tateap
