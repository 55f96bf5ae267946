#include "tateap/progression.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "tateap/error.hpp"

namespace tateap {

std::optional<APCertificate> certify_ap(std::span<const Rational> values) {
    if (values.empty()) return std::nullopt;
    APCertificate cert;
    cert.first = values.front();
    cert.length = values.size();
    cert.members.assign(values.begin(), values.end());
    if (values.size() == 1) return cert;
    cert.difference = values[1] - values[0];
    if (cert.difference.is_zero()) return std::nullopt;
    for (std::size_t i = 2; i < values.size(); ++i) {
        if (values[i] - values[i - 1] != cert.difference) return std::nullopt;
    }
    return cert;
}

namespace {

std::vector<Rational> sorted_unique(std::span<const Rational> values) {
    std::vector<Rational> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

APCertificate make_ap(const Rational& first, const Rational& diff, std::size_t length) {
    APCertificate c{first, diff, length, {}};
    c.members.reserve(length);
    Rational v = first;
    for (std::size_t i = 0; i < length; ++i) {
        c.members.push_back(v);
        v += diff;
    }
    return c;
}

// Additive fingerprint p * q^-1 mod 2^61 - 1: equal rationals agree, and
// the fingerprint of x + y is the sum of fingerprints, so AP candidates can
// be located without building their (possibly huge) exact values.
constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(p & kMersenne61) + static_cast<std::uint64_t>(p >> 61);
    if (r >= kMersenne61) r -= kMersenne61;
    return r;
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = a + b;
    if (r >= kMersenne61) r -= kMersenne61;
    return r;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kMersenne61 - b; }

std::optional<std::uint64_t> fingerprint(const Rational& r) {
    const std::uint64_t q = mpz_fdiv_ui(r.den().get_mpz_t(), kMersenne61);
    if (q == 0) return std::nullopt;
    std::uint64_t p = mpz_fdiv_ui(r.num().get_mpz_t(), kMersenne61);
    // q^(P-2)
    std::uint64_t inv = 1, base = q;
    for (std::uint64_t e = kMersenne61 - 2; e > 0; e >>= 1U) {
        if ((e & 1U) != 0) inv = mod_mul(inv, base);
        base = mod_mul(base, base);
    }
    return mod_mul(p, inv);
}

// Invokes f(first_index, second_index, length) for every maximal AP of
// length >= 2 in the ascending distinct list v.
template <typename F>
void for_each_maximal_ap(const std::vector<Rational>& v, F&& f) {
    std::vector<std::uint64_t> fp;
    fp.reserve(v.size());
    for (const auto& x : v) {
        auto h = fingerprint(x);
        if (!h) break;
        fp.push_back(*h);
    }

    if (fp.size() != v.size()) {
        // A denominator divisible by the modulus: exact hashing instead.
        std::unordered_set<Rational> present(v.begin(), v.end());
        for (std::size_t i = 0; i < v.size(); ++i) {
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                const Rational d = v[j] - v[i];
                if (present.contains(v[i] - d)) continue;
                std::size_t len = 2;
                Rational next = v[j] + d;
                while (present.contains(next)) {
                    ++len;
                    next += d;
                }
                f(i, j, len);
            }
        }
        return;
    }

    std::unordered_multimap<std::uint64_t, std::size_t> where;
    where.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) where.emplace(fp[i], i);

    // Index k with fp[k] == key and v[to] - v[k] == step (k < to), or with
    // v[k] - v[from] == step (k > from). Fingerprint hits are confirmed exactly.
    const auto find_before = [&](std::uint64_t key, std::size_t to, const Rational& step) -> std::optional<std::size_t> {
        auto [lo, hi] = where.equal_range(key);
        for (auto it = lo; it != hi; ++it) {
            if (it->second < to && v[to] - v[it->second] == step) return it->second;
        }
        return std::nullopt;
    };
    const auto find_after = [&](std::uint64_t key, std::size_t from, const Rational& step) -> std::optional<std::size_t> {
        auto [lo, hi] = where.equal_range(key);
        for (auto it = lo; it != hi; ++it) {
            if (it->second > from && v[it->second] - v[from] == step) return it->second;
        }
        return std::nullopt;
    };

    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            const std::uint64_t dfp = mod_sub(fp[j], fp[i]);
            const std::uint64_t prev_key = mod_sub(fp[i], dfp);
            std::optional<Rational> step;
            const auto exact = [&]() -> const Rational& {
                if (!step) step = v[j] - v[i];
                return *step;
            };
            if (where.count(prev_key) != 0 && find_before(prev_key, i, exact())) continue;
            std::size_t len = 2;
            std::size_t cur = j;
            std::uint64_t key = mod_add(fp[j], dfp);
            while (where.count(key) != 0) {
                const auto next = find_after(key, cur, exact());
                if (!next) break;
                cur = *next;
                ++len;
                key = mod_add(key, dfp);
            }
            f(i, j, len);
        }
    }
}

}  // namespace

APCertificate longest_ap_subset(std::span<const Rational> values) {
    if (values.empty()) throw DomainError("longest_ap_subset of an empty set");
    const auto v = sorted_unique(values);
    if (v.size() == 1) return make_ap(v[0], 0, 1);

    std::size_t best_len = 0;
    Rational best_first, best_diff;
    for_each_maximal_ap(v, [&](std::size_t i, std::size_t j, std::size_t len) {
        if (len < best_len) return;
        // Among 2-term APs only neighbours can have the smallest difference.
        if (len == 2 && j != i + 1) return;
        const Rational d = v[j] - v[i];
        const bool better = len > best_len ||
                            (len == best_len && (d < best_diff || (d == best_diff && v[i] < best_first)));
        if (better) {
            best_len = len;
            best_first = v[i];
            best_diff = d;
        }
    });
    return make_ap(best_first, best_diff, best_len);
}

namespace {

void require_affine(std::span<const CurvePoint> points) {
    for (const auto& p : points) {
        if (p.is_infinity()) throw DomainError("point at infinity in a progression query");
    }
}

std::optional<SimultaneousCertificate> certify_sorted(std::vector<CurvePoint> pts) {
    std::vector<Rational> xs, ys;
    for (const auto& p : pts) {
        xs.push_back(p.x());
        ys.push_back(p.y());
    }
    auto x_cert = certify_ap(xs);
    if (!x_cert) return std::nullopt;

    std::vector<std::size_t> by_y(pts.size());
    std::iota(by_y.begin(), by_y.end(), 0);
    std::sort(by_y.begin(), by_y.end(), [&](std::size_t a, std::size_t b) { return ys[a] < ys[b]; });
    std::vector<Rational> ys_sorted;
    for (auto i : by_y) ys_sorted.push_back(ys[i]);
    auto y_cert = certify_ap(ys_sorted);
    if (!y_cert) return std::nullopt;

    SimultaneousCertificate cert;
    cert.y_order.assign(pts.size(), 0);
    for (std::size_t pos = 0; pos < by_y.size(); ++pos) cert.y_order[by_y[pos]] = pos;
    cert.points = std::move(pts);
    cert.x_cert = std::move(*x_cert);
    cert.y_cert = std::move(*y_cert);
    return cert;
}

}  // namespace

std::optional<SimultaneousCertificate> certify_simultaneous(std::span<const CurvePoint> points) {
    require_affine(points);
    if (points.empty()) return std::nullopt;
    std::vector<CurvePoint> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    return certify_sorted(std::move(pts));
}

BoundsReport bounds_report(std::span<const CurvePoint> points) {
    if (points.empty()) throw DomainError("bounds_report of an empty point set");
    require_affine(points);
    std::vector<Rational> xs, ys;
    for (const auto& p : points) {
        xs.push_back(p.x());
        ys.push_back(p.y());
    }
    BoundsReport r;
    r.x_witness = longest_ap_subset(xs);
    r.y_witness = longest_ap_subset(ys);
    r.s_x_lower = r.x_witness.length;
    r.s_y_lower = r.y_witness.length;
    return r;
}

namespace {

// Walks every x-AP window of every length L in [min_len, max_len] with
// want(L) true, and every choice of points over it; stops early when visit
// returns true.
template <typename Want, typename Visit>
void scan_x_windows(std::span<const CurvePoint> points, std::size_t min_len, std::size_t max_len, Want&& want,
                    Visit&& visit) {
    std::map<Rational, std::vector<CurvePoint>> by_x;
    for (const auto& p : points) {
        auto& bucket = by_x[p.x()];
        if (std::find(bucket.begin(), bucket.end(), p) == bucket.end()) bucket.push_back(p);
    }
    std::vector<Rational> xs;
    for (const auto& [x, _] : by_x) xs.push_back(x);

    bool done = false;
    std::vector<CurvePoint> chosen;
    for_each_maximal_ap(xs, [&](std::size_t i, std::size_t j, std::size_t len) {
        if (done || len < min_len) return;
        const Rational d = xs[j] - xs[i];
        for (std::size_t L = min_len; L <= std::min(len, max_len) && !done; ++L) {
            if (!want(L)) continue;
            for (std::size_t start = 0; start + L <= len && !done; ++start) {
                std::vector<const std::vector<CurvePoint>*> cols;
                Rational x = xs[i] + d * Rational(static_cast<long>(start));
                for (std::size_t k = 0; k < L; ++k, x += d) cols.push_back(&by_x.at(x));
                // Odometer over the point choices per x.
                std::vector<std::size_t> idx(L, 0);
                for (;;) {
                    chosen.clear();
                    for (std::size_t k = 0; k < L; ++k) chosen.push_back((*cols[k])[idx[k]]);
                    if (visit(L, chosen)) {
                        done = true;
                        break;
                    }
                    std::size_t k = 0;
                    while (k < L && ++idx[k] == cols[k]->size()) idx[k++] = 0;
                    if (k == L) break;
                }
            }
        }
    });
}

}  // namespace

std::optional<SimultaneousCertificate> find_simultaneous(std::span<const CurvePoint> points, std::size_t length) {
    require_affine(points);
    if (length == 0) return std::nullopt;
    if (length == 1) {
        if (points.empty()) return std::nullopt;
        return certify_sorted({points.front()});
    }
    std::optional<SimultaneousCertificate> found;
    const auto any = [](std::size_t) { return true; };
    scan_x_windows(points, length, length, any, [&](std::size_t, const std::vector<CurvePoint>& pts) {
        found = certify_sorted(pts);
        return found.has_value();
    });
    return found;
}

std::vector<bool> simultaneous_lengths(std::span<const CurvePoint> points, std::size_t max_length) {
    require_affine(points);
    std::vector<bool> out(max_length + 1, false);
    if (max_length >= 1 && !points.empty()) out[1] = true;
    if (max_length < 2) return out;
    // Length 2 only needs two points differing in both coordinates.
    for (std::size_t i = 0; i < points.size() && !out[2]; ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].x() != points[j].x() && points[i].y() != points[j].y()) {
                out[2] = true;
                break;
            }
        }
    }
    if (max_length < 3) return out;
    const auto open = [&](std::size_t L) { return !out[L]; };
    scan_x_windows(points, 3, max_length, open, [&](std::size_t L, const std::vector<CurvePoint>& pts) {
        if (certify_sorted(pts)) out[L] = true;
        return false;
    });
    return out;
}

}  // namespace tateap
