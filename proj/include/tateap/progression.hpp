#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tateap/curve.hpp"
#include "tateap/rational.hpp"

namespace tateap {

/// members[i] = first + i * difference. A certificate of length >= 2 has a
/// nonzero difference; length 1 carries difference 0.
struct APCertificate {
    Rational first;
    Rational difference;
    std::size_t length = 0;
    std::vector<Rational> members;

    friend bool operator==(const APCertificate&, const APCertificate&) = default;
};

struct BoundsReport {
    std::size_t s_x_lower = 0;
    std::size_t s_y_lower = 0;
    APCertificate x_witness;
    APCertificate y_witness;
};

/// Points sorted by ascending x. x_cert and y_cert are ascending APs;
/// y_order[i] is the position in y_cert of points[i].y().
struct SimultaneousCertificate {
    std::vector<CurvePoint> points;
    APCertificate x_cert;
    APCertificate y_cert;
    std::vector<std::size_t> y_order;
};

/// Certificate iff the list, in the given order, has constant nonzero step.
std::optional<APCertificate> certify_ap(std::span<const Rational> values);

/// A longest subset forming an AP, returned ascending. Input is deduplicated.
/// Ties: smallest difference, then smallest first term.
APCertificate longest_ap_subset(std::span<const Rational> values);

std::optional<SimultaneousCertificate> certify_simultaneous(std::span<const CurvePoint> points);

BoundsReport bounds_report(std::span<const CurvePoint> points);

/// Some subset of exactly `length` points that is a simultaneous AP, if any.
/// Exhaustive: every x-AP of that length among the points is tried, with
/// every choice among points sharing an x-coordinate.
std::optional<SimultaneousCertificate> find_simultaneous(std::span<const CurvePoint> points,
                                                         std::size_t length);

/// Lengths L in [1, max_length] for which find_simultaneous succeeds,
/// computed in one pass over the maximal x-APs.
std::vector<bool> simultaneous_lengths(std::span<const CurvePoint> points, std::size_t max_length);

}  // namespace tateap
