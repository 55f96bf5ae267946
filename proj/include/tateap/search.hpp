#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tateap/curve.hpp"
#include "tateap/linear.hpp"
#include "tateap/poly.hpp"
#include "tateap/progression.hpp"
#include "tateap/rational.hpp"

namespace tateap {

/// A length-n y-progression through the anchors 0 and -b (or -b(a+1) in the
/// parametric search): term p is (zero_index - p) * b / gap, so term
/// zero_index is 0 and term zero_index + gap is the second anchor.
struct ProgressionShape {
    int n = 0;
    int gap = 0;
    int zero_index = 0;

    /// Terms divided by the second anchor's scale (b, or b(a+1)).
    std::vector<Rational> unit_terms() const;

    friend bool operator==(const ProgressionShape&, const ProgressionShape&) = default;
};

/// One search case: point P_k (k = 2..n-1) takes the shape's term at
/// positions[k-2], which fixes beta_k = -2 * term / b.
struct CaseAssignment {
    ProgressionShape shape;
    std::vector<int> positions;
    std::vector<Rational> beta;

    const Rational& beta_at(int k) const { return beta.at(static_cast<std::size_t>(k - 2)); }
    int n() const { return shape.n; }
};

enum class Verdict {
    Accepted,
    Family,
    InconsistentSystem,
    DegenerateB,
    ZeroAlphaBeta,
    SingularCurve,
    ProgressionFailed,
    Duplicate,
};

inline constexpr Verdict kAllVerdicts[] = {
    Verdict::Accepted,    Verdict::Family,        Verdict::InconsistentSystem, Verdict::DegenerateB,
    Verdict::ZeroAlphaBeta, Verdict::SingularCurve, Verdict::ProgressionFailed,  Verdict::Duplicate,
};

const char* to_string(Verdict v);

struct CaseResult {
    std::size_t case_index = 0;
    CaseAssignment assignment;
    Verdict verdict = Verdict::InconsistentSystem;
    std::optional<TateCurve> curve;
    std::vector<CurvePoint> points;      // P_0, ..., P_{n-1} when Accepted
    std::vector<Rational> alphas;        // alpha_k at index k-2, when solved
    std::optional<Rational> a_value;
    std::size_t free_variables = 0;      // Family only
    std::string reason;
};

struct LinearSystem {
    RationalMatrix matrix;
    std::vector<Rational> rhs;
};

/// Shapes ordered by gap, then zero_index. Count n(n-1)/2.
std::vector<ProgressionShape> enumerate_shapes(int n);

/// Every shape with every bijection of k = 2..n-1 onto its free positions
/// (lexicographic). Count n!/2.
std::vector<CaseAssignment> enumerate_cases(int n);

/// Unknowns (alpha_2, ..., alpha_{n-1}, b). Rows: beta_k alpha_k + 4k^2(k-1) b = 0
/// for each k, then k alpha_2 - 2 alpha_k = 2(k-2) - k beta_2 + 2 beta_k for k >= 3.
LinearSystem build_system(const CaseAssignment& assignment);
LinearSystem build_system(std::span<const Rational> beta);

CaseResult solve_case(const CaseAssignment& assignment);

struct SearchReport {
    int n = 0;
    std::vector<CaseResult> cases;

    std::map<Verdict, std::size_t> counts() const;
    std::vector<const CaseResult*> accepted() const;
};

/// Marks later Accepted results sharing an (a, b) as Duplicate, in order.
void mark_duplicates(std::vector<CaseResult>& results);

/// Solves every case for length n (4..8). `jobs` > 1 fans cases out to
/// worker threads; results stay in case-index order.
SearchReport run_search(int n, unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Parametric family: anchors 0 at P_0 = (0,0) and -b(a+1) at P_1 = (b, -b(a+1)),
// length 5, so every beta_k is an affine polynomial in a.

struct ParametricAssignment {
    ProgressionShape shape;
    std::vector<int> positions;
    std::vector<RationalPoly> beta;  // beta_k(a) at index k-2
};

struct RootOutcome {
    Rational a;
    std::size_t multiplicity = 0;
    Verdict verdict = Verdict::InconsistentSystem;
    std::optional<Rational> b;
    std::vector<Rational> alphas;
    std::vector<Rational> implied_a;  // (alpha_k + beta_k - 2) / (2k), k = 2..4
    std::string reason;
};

struct ParametricCaseResult {
    std::size_t case_index = 0;
    ParametricAssignment assignment;
    RationalPoly determinant;
    std::vector<RootOutcome> roots;
    Verdict verdict = Verdict::InconsistentSystem;
    std::optional<TateCurve> curve;
    std::vector<CurvePoint> points;
    std::string reason;
};

std::vector<ParametricAssignment> enumerate_parametric_cases();

/// 5x5 augmented matrix, rows (quadrics k=2,3,4; hyperplanes k=3,4), columns
/// (alpha_2, alpha_3, alpha_4, b, rhs), entries affine in a.
PolyMatrix build_parametric_matrix(const ParametricAssignment& assignment);

ParametricCaseResult solve_parametric_case(const ParametricAssignment& assignment);

std::vector<ParametricCaseResult> run_parametric_search();

// ---------------------------------------------------------------------------

struct ZWitness {
    int k = 0;
    Rational z;  // (alpha_k - beta_k) / 2
};

/// z_k for every k of an Accepted case. Throws UsageError otherwise.
std::vector<ZWitness> z_witnesses(const CaseResult& result);

}  // namespace tateap
