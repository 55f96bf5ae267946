#include "tateap/search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "tateap/error.hpp"

namespace tateap {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Accepted: return "Accepted";
        case Verdict::Family: return "Family";
        case Verdict::InconsistentSystem: return "InconsistentSystem";
        case Verdict::DegenerateB: return "DegenerateB";
        case Verdict::ZeroAlphaBeta: return "ZeroAlphaBeta";
        case Verdict::SingularCurve: return "SingularCurve";
        case Verdict::ProgressionFailed: return "ProgressionFailed";
        case Verdict::Duplicate: return "Duplicate";
    }
    return "?";
}

std::vector<Rational> ProgressionShape::unit_terms() const {
    std::vector<Rational> t;
    t.reserve(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) t.emplace_back(static_cast<long>(zero_index - p), static_cast<long>(gap));
    return t;
}

std::vector<ProgressionShape> enumerate_shapes(int n) {
    if (n < 3) throw UsageError("progression length must be at least 3");
    std::vector<ProgressionShape> out;
    for (int g = 1; g < n; ++g) {
        for (int i = 0; i + g < n; ++i) out.push_back({n, g, i});
    }
    return out;
}

namespace {

std::vector<int> free_positions(const ProgressionShape& s) {
    std::vector<int> rest;
    for (int p = 0; p < s.n; ++p) {
        if (p != s.zero_index && p != s.zero_index + s.gap) rest.push_back(p);
    }
    return rest;
}

Rational quadric_coefficient(int k) { return Rational(4L * k * k * (k - 1)); }

}  // namespace

std::vector<CaseAssignment> enumerate_cases(int n) {
    std::vector<CaseAssignment> out;
    for (const auto& shape : enumerate_shapes(n)) {
        const auto terms = shape.unit_terms();
        auto perm = free_positions(shape);
        do {
            CaseAssignment c{shape, perm, {}};
            for (int p : perm) c.beta.push_back(-2 * terms[static_cast<std::size_t>(p)]);
            out.push_back(std::move(c));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

LinearSystem build_system(std::span<const Rational> beta) {
    const std::size_t m = beta.size();  // number of alphas, k = 2..m+1
    if (m == 0) throw UsageError("empty beta assignment");
    for (const auto& b : beta) {
        if (b.is_zero()) throw UsageError("zero beta in system construction");
    }
    LinearSystem sys{RationalMatrix(2 * m - 1, m + 1), std::vector<Rational>(2 * m - 1)};
    for (std::size_t j = 0; j < m; ++j) {
        const int k = static_cast<int>(j) + 2;
        sys.matrix(j, j) = beta[j];
        sys.matrix(j, m) = quadric_coefficient(k);
    }
    for (std::size_t j = 1; j < m; ++j) {
        const int k = static_cast<int>(j) + 2;
        const std::size_t row = m + j - 1;
        sys.matrix(row, 0) = k;
        sys.matrix(row, j) = -2;
        sys.rhs[row] = Rational(2 * (k - 2)) - k * beta[0] + 2 * beta[j];
    }
    return sys;
}

LinearSystem build_system(const CaseAssignment& assignment) { return build_system(assignment.beta); }

namespace {

struct Anchors {
    CurvePoint p0;
    CurvePoint p1;
};

// Shared tail of both pipelines once (a, b, alpha) are known: curve,
// nonsingularity, point materialisation, membership, simultaneous AP.
Verdict materialise(const Rational& a, const Rational& b, std::span<const Rational> beta, const Anchors& anchors,
                    std::optional<TateCurve>& curve, std::vector<CurvePoint>& points, std::string& reason) {
    const TateCurve tc{a, b};
    const WeierstrassCurve w = tc.weierstrass();
    if (discriminant(w).is_zero()) {
        reason = "curve E(" + a.str() + ", " + b.str() + ") is singular";
        return Verdict::SingularCurve;
    }
    std::vector<CurvePoint> pts{anchors.p0, anchors.p1};
    for (std::size_t j = 0; j < beta.size(); ++j) {
        const Rational k = static_cast<long>(j + 2);
        pts.emplace_back(k * b, -b * beta[j] / 2);
    }
    for (const auto& p : pts) {
        if (!contains(w, p)) {
            reason = "point " + p.str() + " is not on the curve";
            return Verdict::ProgressionFailed;
        }
    }
    if (!certify_simultaneous(pts)) {
        reason = "points do not form a simultaneous progression";
        return Verdict::ProgressionFailed;
    }
    curve = tc;
    points = std::move(pts);
    return Verdict::Accepted;
}

}  // namespace

CaseResult solve_case(const CaseAssignment& assignment) {
    CaseResult res;
    res.assignment = assignment;
    const auto& beta = assignment.beta;
    if (std::any_of(beta.begin(), beta.end(), [](const Rational& x) { return x.is_zero(); })) {
        res.verdict = Verdict::ZeroAlphaBeta;
        res.reason = "a beta value is zero";
        return res;
    }
    const LinearSystem sys = build_system(assignment);
    const LinearOutcome lin = solve_linear(sys.matrix, sys.rhs);
    if (lin.kind == LinearKind::Inconsistent) {
        res.verdict = Verdict::InconsistentSystem;
        res.reason = "linear system has no solution";
        return res;
    }
    if (lin.kind == LinearKind::Family) {
        res.verdict = Verdict::Family;
        res.free_variables = lin.free_variables;
        res.reason = std::to_string(lin.free_variables) + " free variable(s)";
        return res;
    }
    const std::size_t m = beta.size();
    res.alphas.assign(lin.solution.begin(), lin.solution.begin() + static_cast<std::ptrdiff_t>(m));
    const Rational b = lin.solution[m];
    if (b.is_zero()) {
        res.verdict = Verdict::DegenerateB;
        res.reason = "solution has b = 0";
        return res;
    }
    if (std::any_of(res.alphas.begin(), res.alphas.end(), [](const Rational& x) { return x.is_zero(); })) {
        res.verdict = Verdict::ZeroAlphaBeta;
        res.reason = "an alpha value is zero";
        return res;
    }
    const Rational a = (res.alphas[0] + beta[0] - 2) / 4;
    for (std::size_t j = 0; j < m; ++j) {
        const Rational k = static_cast<long>(j + 2);
        if (res.alphas[j] + beta[j] != 2 * a * k + 2) {
            throw std::logic_error("sum relation violated by a solved system");
        }
    }
    res.a_value = a;
    res.verdict = materialise(a, b, beta, {CurvePoint{0, -b}, CurvePoint{b, 0}}, res.curve, res.points, res.reason);
    return res;
}

std::map<Verdict, std::size_t> SearchReport::counts() const {
    std::map<Verdict, std::size_t> c;
    for (auto v : kAllVerdicts) c[v] = 0;
    for (const auto& r : cases) ++c[r.verdict];
    return c;
}

std::vector<const CaseResult*> SearchReport::accepted() const {
    std::vector<const CaseResult*> out;
    for (const auto& r : cases) {
        if (r.verdict == Verdict::Accepted) out.push_back(&r);
    }
    return out;
}

void mark_duplicates(std::vector<CaseResult>& results) {
    std::set<TateCurve> seen;
    for (auto& r : results) {
        if (r.verdict != Verdict::Accepted) continue;
        if (!seen.insert(*r.curve).second) {
            r.verdict = Verdict::Duplicate;
            r.reason = "curve E(" + r.curve->a.str() + ", " + r.curve->b.str() + ") already found";
        }
    }
}

SearchReport run_search(int n, unsigned jobs) {
    if (n < 4 || n > 8) throw UsageError("search length must be in 4..8");
    const auto cases = enumerate_cases(n);
    SearchReport report;
    report.n = n;
    report.cases.resize(cases.size());

    const auto work = [&](std::size_t i) {
        report.cases[i] = solve_case(cases[i]);
        report.cases[i].case_index = i;
    };
    if (jobs <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < cases.size(); i = next++) work(i);
            });
        }
    }
    mark_duplicates(report.cases);
    return report;
}

// ---------------------------------------------------------------------------

std::vector<ParametricAssignment> enumerate_parametric_cases() {
    std::vector<ParametricAssignment> out;
    const RationalPoly a_plus_1 = RationalPoly::affine(1, 1);
    for (const auto& shape : enumerate_shapes(5)) {
        const auto terms = shape.unit_terms();
        auto perm = free_positions(shape);
        do {
            ParametricAssignment c{shape, perm, {}};
            for (int p : perm) c.beta.push_back(RationalPoly(-2 * terms[static_cast<std::size_t>(p)]) * a_plus_1);
            out.push_back(std::move(c));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

PolyMatrix build_parametric_matrix(const ParametricAssignment& assignment) {
    const auto& beta = assignment.beta;
    PolyMatrix m(5, 5);
    for (std::size_t j = 0; j < 3; ++j) {
        m(j, j) = beta[j];
        m(j, 3) = RationalPoly(quadric_coefficient(static_cast<int>(j) + 2));
    }
    for (std::size_t j = 1; j < 3; ++j) {
        const int k = static_cast<int>(j) + 2;
        const std::size_t row = 2 + j;
        m(row, 0) = k;
        m(row, j) = -2;
        m(row, 4) = RationalPoly(Rational(2 * (k - 2))) - RationalPoly(k) * beta[0] + RationalPoly(2) * beta[j];
    }
    return m;
}

namespace {

// Pipeline order, used to summarise a case by the furthest stage any of its
// roots reached.
int stage(Verdict v) {
    switch (v) {
        case Verdict::InconsistentSystem: return 0;
        case Verdict::Family: return 1;
        case Verdict::ZeroAlphaBeta: return 2;
        case Verdict::DegenerateB: return 3;
        case Verdict::SingularCurve: return 4;
        case Verdict::ProgressionFailed: return 5;
        case Verdict::Accepted: return 6;
        case Verdict::Duplicate: return 7;
    }
    return -1;
}

RootOutcome evaluate_root(const ParametricAssignment& assignment, const RationalRoot& root,
                          std::optional<TateCurve>& curve, std::vector<CurvePoint>& points) {
    RootOutcome out;
    out.a = root.value;
    out.multiplicity = root.multiplicity;
    const Rational& a = root.value;

    std::vector<Rational> beta;
    for (const auto& p : assignment.beta) beta.push_back(p(a));
    if (a == Rational(-1) || std::any_of(beta.begin(), beta.end(), [](const Rational& x) { return x.is_zero(); })) {
        out.verdict = Verdict::ZeroAlphaBeta;
        out.reason = a == Rational(-1) ? "a = -1 is degenerate: every beta vanishes" : "a beta value vanishes";
        return out;
    }
    const LinearSystem sys = build_system(beta);
    const LinearOutcome lin = solve_linear(sys.matrix, sys.rhs);
    if (lin.kind == LinearKind::Inconsistent) {
        out.verdict = Verdict::InconsistentSystem;
        out.reason = "system inconsistent at this root";
        return out;
    }
    if (lin.kind == LinearKind::Family) {
        out.verdict = Verdict::Family;
        out.reason = std::to_string(lin.free_variables) + " free variable(s) at this root";
        return out;
    }
    out.alphas.assign(lin.solution.begin(), lin.solution.begin() + 3);
    const Rational b = lin.solution[3];
    out.b = b;
    for (std::size_t j = 0; j < 3; ++j) {
        const Rational k = static_cast<long>(j + 2);
        out.implied_a.push_back((out.alphas[j] + beta[j] - 2) / (2 * k));
    }
    if (b.is_zero()) {
        out.verdict = Verdict::DegenerateB;
        out.reason = "solution has b = 0";
        return out;
    }
    if (std::any_of(out.alphas.begin(), out.alphas.end(), [](const Rational& x) { return x.is_zero(); })) {
        out.verdict = Verdict::ZeroAlphaBeta;
        out.reason = "an alpha value is zero";
        return out;
    }
    for (const auto& implied : out.implied_a) {
        if (implied != a) {
            out.verdict = Verdict::ProgressionFailed;
            out.reason = "consistency fails: (alpha_k + beta_k - 2)/(2k) = " + implied.str() + " but a = " + a.str();
            return out;
        }
    }
    const Anchors anchors{CurvePoint{0, 0}, CurvePoint{b, -b * (a + 1)}};
    out.verdict = materialise(a, b, beta, anchors, curve, points, out.reason);
    return out;
}

}  // namespace

ParametricCaseResult solve_parametric_case(const ParametricAssignment& assignment) {
    ParametricCaseResult res;
    res.assignment = assignment;
    res.determinant = det_poly(build_parametric_matrix(assignment));
    if (res.determinant.is_zero()) {
        res.verdict = Verdict::Family;
        res.reason = "augmented determinant vanishes identically; a is not pinned down";
        return res;
    }
    const auto roots = rational_roots(res.determinant);
    if (roots.empty()) {
        res.verdict = Verdict::InconsistentSystem;
        res.reason = "augmented determinant has no rational root";
        return res;
    }
    int best = -1;
    for (const auto& root : roots) {
        std::optional<TateCurve> curve;
        std::vector<CurvePoint> points;
        RootOutcome o = evaluate_root(assignment, root, curve, points);
        if (stage(o.verdict) > best) {
            best = stage(o.verdict);
            res.verdict = o.verdict;
            res.reason = "a = " + o.a.str() + ": " + o.reason;
            if (o.verdict == Verdict::Accepted) {
                res.curve = curve;
                res.points = points;
            }
        }
        res.roots.push_back(std::move(o));
    }
    return res;
}

std::vector<ParametricCaseResult> run_parametric_search() {
    std::vector<ParametricCaseResult> out;
    std::set<TateCurve> seen;
    std::size_t index = 0;
    for (const auto& c : enumerate_parametric_cases()) {
        auto r = solve_parametric_case(c);
        r.case_index = index++;
        if (r.verdict == Verdict::Accepted && !seen.insert(*r.curve).second) r.verdict = Verdict::Duplicate;
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<ZWitness> z_witnesses(const CaseResult& result) {
    if (result.verdict != Verdict::Accepted) throw UsageError("z_witnesses needs an Accepted case");
    std::vector<ZWitness> out;
    for (std::size_t j = 0; j < result.alphas.size(); ++j) {
        const int k = static_cast<int>(j) + 2;
        out.push_back({k, (result.alphas[j] - result.assignment.beta[j]) / 2});
    }
    return out;
}

}  // namespace tateap
