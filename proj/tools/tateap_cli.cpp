// Command-line front end: searches, verification, exploration, tables.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tateap/error.hpp"
#include "tateap/explore.hpp"
#include "tateap/io.hpp"
#include "tateap/search.hpp"

namespace {

using tateap::io::json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Options {
    int n = 0;
    std::string format = "jsonl";
    std::string table_format = "csv";
    std::string out;
    unsigned jobs = 1;
    std::string curve;
    std::string points_path;
    int bound = 8;
    int combo = 2;
    std::string b;
    int table_combo = 3;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw tateap::UsageError("cannot write '" + opt.out + "'");
    f << text;
}

std::string verdict_table(const std::map<tateap::Verdict, std::size_t>& counts) {
    std::ostringstream os;
    for (const auto& [v, c] : counts) os << "  " << tateap::to_string(v) << ": " << c << "\n";
    return os.str();
}

int run_search(const Options& opt) {
    const auto report = tateap::run_search(opt.n, opt.jobs);
    std::ostringstream os;
    if (opt.format == "csv") {
        os << tateap::io::accepted_csv(report);
    } else if (opt.format == "pretty") {
        os << "length " << report.n << ": " << report.cases.size() << " cases\n";
        for (const auto* r : report.accepted()) {
            os << "  beta=(";
            for (std::size_t j = 0; j < r->assignment.beta.size(); ++j) {
                os << (j ? ", " : "") << r->assignment.beta[j];
            }
            os << ")  E(" << r->curve->a << ", " << r->curve->b << ")\n";
        }
        os << verdict_table(report.counts());
    } else {
        for (const auto& r : report.cases) os << tateap::io::to_json(r).dump() << "\n";
        os << tateap::io::summary_json(report.n, report.counts(), report.cases.size()).dump() << "\n";
    }
    emit(opt, os.str());
    return kOk;
}

int run_parametric(const Options& opt) {
    const auto results = tateap::run_parametric_search();
    std::map<tateap::Verdict, std::size_t> counts;
    for (auto v : tateap::kAllVerdicts) counts[v] = 0;
    for (const auto& r : results) ++counts[r.verdict];
    std::ostringstream os;
    if (opt.format == "pretty") {
        for (const auto& r : results) {
            os << "case " << r.case_index << ": det = " << r.determinant.str() << "  -> " << tateap::to_string(r.verdict)
               << " (" << r.reason << ")\n";
        }
        os << verdict_table(counts);
    } else {
        for (const auto& r : results) os << tateap::io::to_json(r).dump() << "\n";
        os << tateap::io::summary_json(5, counts, results.size()).dump() << "\n";
    }
    emit(opt, os.str());
    return kOk;
}

int run_verify(const Options& opt) {
    const auto spec = tateap::io::parse_curve_spec(opt.curve);
    const auto points = tateap::io::points_from_json(json::parse(tateap::io::read_file(opt.points_path)));
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!tateap::contains(spec.curve, points[i])) {
            throw tateap::DomainError("point " + std::to_string(i) + " " + points[i].str() + " is not on the curve");
        }
    }
    for (const auto& p : points) {
        if (p.is_infinity()) throw tateap::DomainError("point at infinity cannot be part of a progression");
    }
    const auto cert = tateap::certify_simultaneous(points);
    if (!cert) {
        std::vector<tateap::Rational> xs, ys;
        for (const auto& p : points) {
            xs.push_back(p.x());
            ys.push_back(p.y());
        }
        std::sort(xs.begin(), xs.end());
        std::sort(ys.begin(), ys.end());
        const char* which = tateap::certify_ap(xs) ? "y-coordinates do not form a progression"
                                                   : "x-coordinates do not form a progression";
        std::cerr << "verification failed: " << which << "\n";
        emit(opt, json{{"verified", false}, {"reason", which}}.dump() + "\n");
        return kVerifyFailed;
    }
    json out = {{"verified", true}, {"curve", tateap::io::curve_to_json(spec)}, {"certificate", tateap::io::to_json(*cert)}};
    emit(opt, out.dump(2) + "\n");
    return kOk;
}

int run_explore(const Options& opt) {
    const auto spec = tateap::io::parse_curve_spec(opt.curve);
    tateap::ExploreConfig cfg;
    cfg.seeds = tateap::io::points_from_json(json::parse(tateap::io::read_file(opt.points_path)));
    cfg.coeff_bound = opt.bound;
    cfg.combo_size = opt.combo;
    const auto report = tateap::explore(spec.curve, cfg);
    emit(opt, tateap::io::to_json(report).dump(2) + "\n");
    return kOk;
}

int run_family3(const Options& opt) {
    const auto f = tateap::family3_curve(tateap::Rational::parse(opt.b));
    emit(opt, tateap::io::to_json(f).dump(2) + "\n");
    return kOk;
}

int run_table(const Options& opt) {
    const auto rows = tateap::reproduce_table(opt.bound, opt.table_combo);
    std::ostringstream os;
    if (opt.table_format == "jsonl") {
        for (const auto& r : rows) os << tateap::io::to_json(r).dump() << "\n";
    } else if (opt.table_format == "pretty") {
        os << "(beta_2, beta_3)        (a, b)                 S_x  S_y\n";
        for (const auto& r : rows) {
            std::ostringstream pair, curve;
            pair << "(" << r.beta2 << ", " << r.beta3 << ")";
            curve << "(" << r.curve.a << ", " << r.curve.b << ")";
            os << pair.str() << std::string(24 - std::min<std::size_t>(23, pair.str().size()), ' ') << curve.str()
               << std::string(23 - std::min<std::size_t>(22, curve.str().size()), ' ') << ">=" << r.bounds.s_x_lower
               << "  >=" << r.bounds.s_y_lower << "\n";
        }
    } else {
        os << tateap::io::table_csv(rows);
    }
    emit(opt, os.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simultaneous arithmetic progressions on Tate normal form curves"};
    app.require_subcommand(1);
    Options opt;

    auto* search = app.add_subcommand("search", "Enumerate and solve every length-n case");
    search->add_option("--n", opt.n, "Progression length (4..8)")->required();
    search->add_option("--format", opt.format, "jsonl, csv or pretty")->check(CLI::IsMember({"jsonl", "csv", "pretty"}));
    search->add_option("--out", opt.out, "Write output to a file");
    search->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* parametric = app.add_subcommand("parametric", "Length-5 family anchored at 0 and -b(a+1)");
    parametric->add_option("--format", opt.format, "jsonl or pretty")->check(CLI::IsMember({"jsonl", "pretty"}));
    parametric->add_option("--out", opt.out, "Write output to a file");

    auto* verify = app.add_subcommand("verify", "Check points lie on a curve and form a simultaneous progression");
    verify->add_option("--curve", opt.curve, "tate:A,B or long:A1,A2,A3,A4,A6")->required();
    verify->add_option("--points", opt.points_path, "JSON array of points")->required();
    verify->add_option("--out", opt.out, "Write output to a file");

    auto* explore = app.add_subcommand("explore", "Generate points from seeds and report progression bounds");
    explore->add_option("--curve", opt.curve, "tate:A,B or long:A1,A2,A3,A4,A6")->required();
    explore->add_option("--seeds", opt.points_path, "JSON array of seed points")->required();
    explore->add_option("--bound", opt.bound, "Max |coefficient| per seed")->check(CLI::PositiveNumber);
    explore->add_option("--combo", opt.combo, "Max seeds per combination")->check(CLI::PositiveNumber);
    explore->add_option("--out", opt.out, "Write output to a file");

    auto* family3 = app.add_subcommand("family3", "Length-3 collinear family E(2b-1, b)");
    family3->add_option("--b", opt.b, "Rational b != 0")->required();
    family3->add_option("--out", opt.out, "Write output to a file");

    auto* table = app.add_subcommand("table", "Length-4 table with explored S_x / S_y bounds");
    table->add_option("--format", opt.table_format, "csv, jsonl or pretty")->check(CLI::IsMember({"csv", "jsonl", "pretty"}));
    table->add_option("--bound", opt.bound, "Max |coefficient| per seed")->check(CLI::PositiveNumber);
    table->add_option("--combo", opt.table_combo, "Max seeds per combination")->check(CLI::PositiveNumber);
    table->add_option("--out", opt.out, "Write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*search) return run_search(opt);
        if (*parametric) return run_parametric(opt);
        if (*verify) return run_verify(opt);
        if (*explore) return run_explore(opt);
        if (*family3) return run_family3(opt);
        if (*table) return run_table(opt);
    } catch (const tateap::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const tateap::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
