#include "tateap/explore.hpp"

#include <algorithm>
#include <unordered_set>

#include "tateap/error.hpp"

namespace tateap {

namespace {

struct PointHash {
    std::size_t operator()(const CurvePoint& p) const noexcept {
        if (p.is_infinity()) return 0;
        return p.x().hash() * 31 + p.y().hash();
    }
};

}  // namespace

std::vector<CurvePoint> generate_points(const WeierstrassCurve& curve, const ExploreConfig& config) {
    if (config.coeff_bound < 1) throw UsageError("coeff_bound must be at least 1");
    if (config.combo_size < 1) throw UsageError("combo_size must be at least 1");
    for (const auto& s : config.seeds) {
        if (!contains(curve, s)) throw DomainError("seed " + s.str() + " is not on the curve");
    }
    const int bound = config.coeff_bound;
    const std::size_t width = 2 * static_cast<std::size_t>(bound);

    // multiples[j] holds m * S_j for m = -bound..-1, 1..bound.
    std::vector<std::vector<CurvePoint>> multiples;
    for (const auto& s : config.seeds) {
        std::vector<CurvePoint> row;
        row.reserve(width);
        std::vector<CurvePoint> pos;
        CurvePoint acc;
        for (int m = 1; m <= bound; ++m) {
            acc = add(curve, acc, s);
            pos.push_back(acc);
        }
        for (int m = bound; m >= 1; --m) row.push_back(negate(curve, pos[static_cast<std::size_t>(m - 1)]));
        row.insert(row.end(), pos.begin(), pos.end());
        multiples.push_back(std::move(row));
    }

    std::vector<CurvePoint> out;
    std::unordered_set<CurvePoint, PointHash> seen;
    const auto emit = [&](const CurvePoint& p) {
        if (!p.is_infinity() && seen.insert(p).second) out.push_back(p);
    };

    const std::size_t n = config.seeds.size();
    const std::size_t max_k = std::min(n, static_cast<std::size_t>(config.combo_size));
    std::vector<std::size_t> subset;
    // Recursive walk: subsets in lexicographic order, all nonzero coefficients.
    const auto walk = [&](auto&& self, std::size_t start, const CurvePoint& partial) -> void {
        if (!subset.empty()) emit(partial);
        if (subset.size() == max_k) return;
        for (std::size_t j = start; j < n; ++j) {
            subset.push_back(j);
            for (const auto& mp : multiples[j]) self(self, j + 1, add(curve, partial, mp));
            subset.pop_back();
        }
    };
    walk(walk, 0, CurvePoint::infinity());
    return out;
}

ExploreReport explore(const WeierstrassCurve& curve, const ExploreConfig& config) {
    ExploreReport report;
    report.curve = curve;
    report.points_found = generate_points(curve, config);
    if (report.points_found.empty()) throw DomainError("no affine points generated");
    report.bounds = bounds_report(report.points_found);
    const std::size_t cap = std::min(report.bounds.s_x_lower, report.bounds.s_y_lower);
    const auto lengths = simultaneous_lengths(report.points_found, cap);
    for (std::size_t L = 1; L <= cap; ++L) report.has_simultaneous_of[L] = lengths[L];
    return report;
}

Family3 family3_curve(const Rational& b) {
    if (b.is_zero()) throw DomainError("family3 needs b != 0");
    Family3 f;
    f.tate = TateCurve{2 * b - 1, b};
    f.curve = f.tate.weierstrass();
    if (discriminant(f.curve).is_zero()) throw DomainError("family3 curve is singular for b = " + b.str());
    f.points = {CurvePoint{0, -b}, CurvePoint{b, 0}, CurvePoint{2 * b, b}};
    for (const auto& p : f.points) {
        if (!contains(f.curve, p)) throw std::logic_error("family3 point off curve");
    }
    auto cert = certify_simultaneous(f.points);
    if (!cert) throw std::logic_error("family3 points are not a simultaneous progression");
    f.certificate = std::move(*cert);
    return f;
}

std::vector<TableRow> reproduce_table(int coeff_bound, int combo_size) {
    std::vector<TableRow> rows;
    const SearchReport report = run_search(4);
    for (const CaseResult* r : report.accepted()) {
        const WeierstrassCurve w = r->curve->weierstrass();
        ExploreConfig cfg{r->points, coeff_bound, combo_size};
        const auto points = generate_points(w, cfg);
        rows.push_back({r->assignment.beta_at(2), r->assignment.beta_at(3), *r->curve, bounds_report(points)});
    }
    return rows;
}

}  // namespace tateap
