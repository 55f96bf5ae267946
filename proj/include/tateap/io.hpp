#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tateap/curve.hpp"
#include "tateap/explore.hpp"
#include "tateap/progression.hpp"
#include "tateap/search.hpp"

namespace tateap::io {

using nlohmann::json;

Rational rational_from_json(const json& j);

struct CurveSpec {
    WeierstrassCurve curve;
    std::optional<TateCurve> tate;
};

/// `tate:A,B` or `long:A1,A2,A3,A4,A6`.
CurveSpec parse_curve_spec(std::string_view spec);

json curve_to_json(const CurveSpec& c);
json curve_to_json(const WeierstrassCurve& c);
json curve_to_json(const TateCurve& c);
/// {"a1":..,"a2":..,"a3":..,"a4":..,"a6":..} or {"tate":{"a":..,"b":..}}
CurveSpec curve_from_json(const json& j);

/// {"x":..,"y":..} or "infinity"
json point_to_json(const CurvePoint& p);
CurvePoint point_from_json(const json& j);
json points_to_json(const std::vector<CurvePoint>& pts);
std::vector<CurvePoint> points_from_json(const json& j);

json to_json(const APCertificate& c);
json to_json(const SimultaneousCertificate& c);
json to_json(const BoundsReport& r);
json to_json(const CaseResult& r);
json to_json(const ParametricCaseResult& r);
json to_json(const ExploreReport& r);
json to_json(const Family3& f);
json to_json(const TableRow& row);

json summary_json(int n, const std::map<Verdict, std::size_t>& counts, std::size_t total);

/// Accepted rows as CSV: beta_2..beta_{n-1}, a, b.
std::string accepted_csv(const SearchReport& report);
/// beta_2, beta_3, a, b, s_x_lower, s_y_lower
std::string table_csv(const std::vector<TableRow>& rows);

std::string read_file(const std::string& path);

}  // namespace tateap::io
