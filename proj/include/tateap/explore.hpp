#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "tateap/curve.hpp"
#include "tateap/progression.hpp"
#include "tateap/search.hpp"

namespace tateap {

struct ExploreConfig {
    std::vector<CurvePoint> seeds;
    int coeff_bound = 8;   // max |m| per seed
    int combo_size = 2;    // max number of seeds combined
};

struct ExploreReport {
    WeierstrassCurve curve;
    std::vector<CurvePoint> points_found;
    BoundsReport bounds;
    std::map<std::size_t, bool> has_simultaneous_of;
};

/// Distinct affine points sum(m_j S_j), |m_j| <= coeff_bound, over every
/// subset of at most combo_size seeds, in combination order.
std::vector<CurvePoint> generate_points(const WeierstrassCurve& curve, const ExploreConfig& config);

/// Bounds over the generated points plus, for every length up to
/// min(s_x, s_y), whether a simultaneous AP of that length exists among them.
ExploreReport explore(const WeierstrassCurve& curve, const ExploreConfig& config);

struct Family3 {
    TateCurve tate;
    WeierstrassCurve curve;
    std::array<CurvePoint, 3> points;
    SimultaneousCertificate certificate;
};

/// E(2b-1, b) with the collinear progression (0,-b), (b,0), (2b,b).
Family3 family3_curve(const Rational& b);

struct TableRow {
    Rational beta2;
    Rational beta3;
    TateCurve curve;
    BoundsReport bounds;
};

/// Length-4 search followed by point generation on each accepted curve,
/// seeded with its four progression points. Triples of seeds are needed:
/// the sixth x-term of E(25/21, -2/7) is -3 P_0 - P_2 - P_3.
std::vector<TableRow> reproduce_table(int coeff_bound = 8, int combo_size = 3);

}  // namespace tateap
