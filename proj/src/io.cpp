#include "tateap/io.hpp"

#include <fstream>
#include <sstream>

#include "tateap/error.hpp"

namespace tateap::io {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

json str(const Rational& r) { return r.str(); }

}  // namespace

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw UsageError("expected a rational string, got " + j.dump());
}

CurveSpec parse_curve_spec(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw UsageError("curve spec must be tate:A,B or long:A1,A2,A3,A4,A6");
    const auto kind = spec.substr(0, colon);
    const auto parts = split(spec.substr(colon + 1), ',');
    std::vector<Rational> v;
    for (auto p : parts) v.push_back(Rational::parse(p));
    if (kind == "tate") {
        if (v.size() != 2) throw UsageError("tate curve spec needs two coefficients");
        TateCurve t{v[0], v[1]};
        return {t.weierstrass(), t};
    }
    if (kind == "long") {
        if (v.size() != 5) throw UsageError("long curve spec needs five coefficients");
        return {{v[0], v[1], v[2], v[3], v[4]}, std::nullopt};
    }
    throw UsageError("unknown curve kind '" + std::string(kind) + "'");
}

json curve_to_json(const WeierstrassCurve& c) {
    return {{"a1", str(c.a1)}, {"a2", str(c.a2)}, {"a3", str(c.a3)}, {"a4", str(c.a4)}, {"a6", str(c.a6)}};
}

json curve_to_json(const TateCurve& c) { return {{"tate", {{"a", str(c.a)}, {"b", str(c.b)}}}}; }

json curve_to_json(const CurveSpec& c) { return c.tate ? curve_to_json(*c.tate) : curve_to_json(c.curve); }

CurveSpec curve_from_json(const json& j) {
    if (!j.is_object()) throw UsageError("curve must be a JSON object");
    if (j.contains("tate")) {
        const auto& t = j.at("tate");
        TateCurve tc{rational_from_json(t.at("a")), rational_from_json(t.at("b"))};
        return {tc.weierstrass(), tc};
    }
    WeierstrassCurve w{rational_from_json(j.at("a1")), rational_from_json(j.at("a2")), rational_from_json(j.at("a3")),
                       rational_from_json(j.at("a4")), rational_from_json(j.at("a6"))};
    return {w, std::nullopt};
}

json point_to_json(const CurvePoint& p) {
    if (p.is_infinity()) return "infinity";
    return {{"x", str(p.x())}, {"y", str(p.y())}};
}

CurvePoint point_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "infinity") return CurvePoint::infinity();
    if (!j.is_object() || !j.contains("x") || !j.contains("y")) throw UsageError("malformed point " + j.dump());
    return {rational_from_json(j.at("x")), rational_from_json(j.at("y"))};
}

json points_to_json(const std::vector<CurvePoint>& pts) {
    json a = json::array();
    for (const auto& p : pts) a.push_back(point_to_json(p));
    return a;
}

std::vector<CurvePoint> points_from_json(const json& j) {
    if (!j.is_array()) throw UsageError("points must be a JSON array");
    std::vector<CurvePoint> out;
    for (const auto& e : j) out.push_back(point_from_json(e));
    return out;
}

json to_json(const APCertificate& c) {
    json members = json::array();
    for (const auto& m : c.members) members.push_back(str(m));
    return {{"first", str(c.first)}, {"difference", str(c.difference)}, {"length", c.length}, {"members", members}};
}

json to_json(const SimultaneousCertificate& c) {
    return {{"points", points_to_json(c.points)},
            {"x_cert", to_json(c.x_cert)},
            {"y_cert", to_json(c.y_cert)},
            {"y_order", c.y_order}};
}

json to_json(const BoundsReport& r) {
    return {{"s_x_lower", r.s_x_lower},
            {"s_y_lower", r.s_y_lower},
            {"x_witness", to_json(r.x_witness)},
            {"y_witness", to_json(r.y_witness)}};
}

namespace {

json shape_json(const ProgressionShape& s) { return {{"g", s.gap}, {"i", s.zero_index}}; }

}  // namespace

json to_json(const CaseResult& r) {
    json beta = json::object();
    for (std::size_t j = 0; j < r.assignment.beta.size(); ++j) beta[std::to_string(j + 2)] = str(r.assignment.beta[j]);
    json out = {{"case_index", r.case_index},
                {"n", r.assignment.n()},
                {"shape", shape_json(r.assignment.shape)},
                {"beta", beta},
                {"verdict", to_string(r.verdict)}};
    if (r.curve) out["curve"] = curve_to_json(*r.curve);
    if (!r.points.empty()) out["points"] = points_to_json(r.points);
    if (!r.reason.empty()) out["reason"] = r.reason;
    return out;
}

json to_json(const ParametricCaseResult& r) {
    json beta = json::object();
    for (std::size_t j = 0; j < r.assignment.beta.size(); ++j) beta[std::to_string(j + 2)] = r.assignment.beta[j].str();
    json roots = json::array();
    for (const auto& o : r.roots) {
        json e = {{"a", str(o.a)}, {"multiplicity", o.multiplicity}, {"verdict", to_string(o.verdict)}};
        if (o.b) e["b"] = str(*o.b);
        if (!o.implied_a.empty()) {
            json ia = json::array();
            for (const auto& v : o.implied_a) ia.push_back(str(v));
            e["implied_a"] = ia;
        }
        if (!o.reason.empty()) e["reason"] = o.reason;
        roots.push_back(e);
    }
    json out = {{"case_index", r.case_index},
                {"n", 5},
                {"shape", shape_json(r.assignment.shape)},
                {"beta", beta},
                {"determinant", r.determinant.str()},
                {"roots", roots},
                {"verdict", to_string(r.verdict)}};
    if (r.curve) out["curve"] = curve_to_json(*r.curve);
    if (!r.points.empty()) out["points"] = points_to_json(r.points);
    if (!r.reason.empty()) out["reason"] = r.reason;
    return out;
}

json to_json(const ExploreReport& r) {
    json sim = json::object();
    for (const auto& [len, ok] : r.has_simultaneous_of) sim[std::to_string(len)] = ok;
    return {{"curve", curve_to_json(r.curve)},
            {"points_found", r.points_found.size()},
            {"bounds", to_json(r.bounds)},
            {"has_simultaneous_of", sim}};
}

json to_json(const Family3& f) {
    return {{"curve", curve_to_json(f.tate)},
            {"long", curve_to_json(f.curve)},
            {"points", points_to_json({f.points.begin(), f.points.end()})},
            {"certificate", to_json(f.certificate)}};
}

json to_json(const TableRow& row) {
    return {{"beta_2", str(row.beta2)},
            {"beta_3", str(row.beta3)},
            {"a", str(row.curve.a)},
            {"b", str(row.curve.b)},
            {"s_x_lower", row.bounds.s_x_lower},
            {"s_y_lower", row.bounds.s_y_lower}};
}

json summary_json(int n, const std::map<Verdict, std::size_t>& counts, std::size_t total) {
    json c = json::object();
    for (auto v : kAllVerdicts) {
        const auto it = counts.find(v);
        c[to_string(v)] = it == counts.end() ? 0 : it->second;
    }
    return {{"summary", {{"n", n}, {"cases", total}, {"verdicts", c}}}};
}

std::string accepted_csv(const SearchReport& report) {
    std::ostringstream os;
    for (int k = 2; k < report.n; ++k) os << "beta_" << k << ",";
    os << "a,b\n";
    for (const CaseResult* r : report.accepted()) {
        for (const auto& b : r->assignment.beta) os << b << ",";
        os << r->curve->a << "," << r->curve->b << "\n";
    }
    return os.str();
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "beta_2,beta_3,a,b,s_x_lower,s_y_lower\n";
    for (const auto& r : rows) {
        os << r.beta2 << "," << r.beta3 << "," << r.curve.a << "," << r.curve.b << "," << r.bounds.s_x_lower << ","
           << r.bounds.s_y_lower << "\n";
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace tateap::io
