// Command line front end. Exit codes: 0 success (and PASS verdicts),
// 1 failed verdicts or runaway coefficient growth, 2 malformed input or
// violated hypotheses.
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "momentpde/estimator.hpp"
#include "momentpde/norms.hpp"
#include "momentpde/polygon.hpp"
#include "momentpde/problem_io.hpp"
#include "momentpde/sequence_checks.hpp"
#include "momentpde/sequences.hpp"
#include "momentpde/solver.hpp"

namespace {

using namespace momentpde;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + out_path);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct SequenceFlags {
    std::string family = "factorial";
    double s = 0.0;
    double p = 0.0;
    double q = 0.0;
    std::vector<double> values;
    int n_cap = 0;  // 0 = default

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family,
                        "factorial | gevrey | gevrey_log | q_factorial | parity_factorial | "
                        "table")
            ->capture_default_str();
        cmd->add_option("--s", s, "order parameter (gevrey, gevrey_log)");
        cmd->add_option("--p", p, "log exponent (gevrey_log)");
        cmd->add_option("--q", q, "base in (0,1) (q_factorial)");
        cmd->add_option("--values", values, "explicit values (table)");
        cmd->add_option("--ncap", n_cap, "sequence cap override");
    }

    // requirement is the largest index the command will evaluate.
    MomentSequence build(int requirement) const {
        SequenceSpec spec;
        if (family == "factorial") {
            spec.family = SequenceFamily::factorial;
        } else if (family == "gevrey") {
            spec.family = SequenceFamily::gevrey;
            spec.s = s;
        } else if (family == "gevrey_log") {
            spec.family = SequenceFamily::gevrey_log;
            spec.s = s;
            spec.p = p;
        } else if (family == "q_factorial") {
            spec.family = SequenceFamily::q_factorial;
            spec.q = q;
        } else if (family == "parity_factorial") {
            spec.family = SequenceFamily::parity_factorial;
        } else if (family == "table") {
            spec.family = SequenceFamily::table;
            spec.values = values;
        } else {
            throw std::invalid_argument("unknown family \"" + family + "\"");
        }
        if (n_cap > 0) {
            spec.n_cap = n_cap;
        } else if (spec.family == SequenceFamily::table) {
            spec.n_cap = static_cast<int>(spec.values.size()) - 1;
        } else {
            spec.n_cap = std::max(default_sequence_cap(), requirement);
        }
        if (spec.n_cap < requirement) {
            throw std::invalid_argument("sequence cap " + std::to_string(spec.n_cap) +
                                        " below the required " + std::to_string(requirement));
        }
        return MomentSequence::make(spec);
    }
};

std::pair<int, int> parse_window(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
        throw std::invalid_argument("window must be a:b");
    }
    try {
        const int a = std::stoi(text.substr(0, colon));
        const int b = std::stoi(text.substr(colon + 1));
        return {a, b};
    } catch (const std::exception&) {
        throw std::invalid_argument("window must be a:b with integer endpoints");
    }
}

int cmd_solve(const std::string& problem_path, const std::string& method,
              const std::string& out_path) {
    const LoadedProblem lp = load_problem_file(problem_path);
    TimeSeries u = method == "constant" ? solve_constant(lp.problem) : solve_variable(lp.problem);
    const ResidualReport report = residual(lp.problem, u);
    emit(solve_csv(lp.problem, u, report), out_path);
    return 0;
}

int cmd_polygon(const std::string& problem_path, const std::string& out_path,
                const std::string& svg_path) {
    const LoadedProblem lp = load_problem_file(problem_path);
    const bool condition_a = check_condition_a(lp.problem.terms, lp.problem.K);
    const NewtonPolygon polygon =
        build_polygon(lp.problem.terms, lp.problem.K, lp.problem.s0, lp.problem.s);
    emit(polygon_csv(polygon, condition_a), out_path);
    if (!svg_path.empty()) emit(polygon_svg(polygon), svg_path);
    if (!condition_a) {
        std::fprintf(stderr, "error: operator violates the t-order condition\n");
        return 2;
    }
    return 0;
}

int cmd_estimate(const std::string& csv_path, const std::string& k1inv_text, double radius,
                 const std::string& window_text, double tol, bool sharp,
                 const SequenceFlags& seq, const std::string& out_path) {
    const TimeSeries u = read_solution_csv(read_file(csv_path));
    const Rational k1_inv = Rational::parse(k1inv_text);
    if (k1_inv < Rational(0)) throw std::invalid_argument("k1inv must be >= 0");
    if (!(radius >= 0.0)) throw std::invalid_argument("radius must be >= 0");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");

    int n_lo = u.order() / 4;
    int n_hi = u.order();
    if (!window_text.empty()) {
        const auto [a, b] = parse_window(window_text);
        n_lo = a;
        n_hi = b;
    }
    if (n_hi > u.order()) n_hi = u.order();
    if (n_lo < 0) n_lo = 0;

    const MomentSequence M = seq.build(n_hi);
    const NormSequenceResult norms = norm_sequence(u, radius);
    const GrowthFit fit = fit_order_log(norms.log_values, M, n_lo, n_hi);

    const double target = k1_inv.to_double();
    const bool pass = !fit.degenerate && fit.sigma_hat <= target + tol &&
                      (!sharp || fit.sigma_hat >= target - tol);
    emit(estimate_csv({fit, k1_inv, radius, tol, sharp, pass}), out_path);
    return pass ? 0 : 1;
}

int cmd_check_seq(const SequenceFlags& seq, int n_max, const std::string& out_path) {
    if (n_max < 1) throw std::invalid_argument("nmax must be >= 1");
    const MomentSequence M = seq.build(n_max + 1);
    const PropertyWitness lc = check_lc(M, n_max);
    const PropertyWitness mg = mg_witness(M, n_max);
    const PropertyWitness star = star_witness(M, n_max);
    emit(sequence_report_csv(M.spec(), lc, mg, star), out_path);
    return 0;
}

int cmd_verify(const std::string& suite, const SequenceFlags& seq, int n_max, int norm_caps,
               const std::string& out_path) {
    std::vector<LemmaCheck> checks;
    if (suite == "lemmas") {
        if (n_max < 2) throw std::invalid_argument("nmax must be >= 2");
        const MomentSequence M = seq.build(n_max);
        checks = verify_lemma_suite(M, n_max);
    } else if (suite == "norms") {
        if (norm_caps < 8) throw std::invalid_argument("caps must be >= 8");
        checks = verify_norm_suite(norm_caps);
    } else {
        throw std::invalid_argument("suite must be lemmas or norms");
    }
    emit(lemma_report_csv(checks), out_path);
    for (const LemmaCheck& c : checks) {
        if (c.applicable && !c.passed) return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"truncated series solver and growth-order toolkit for moment PDEs"};
    app.require_subcommand(1);

    std::string problem_path;
    std::string csv_path;
    std::string out_path;
    std::string svg_path;
    std::string method = "variable";
    std::string window_text;
    std::string k1inv_text;
    std::string suite = "lemmas";
    double radius = 0.0;
    double tol = 0.05;
    bool sharp = false;
    int n_max = 40;
    int norm_caps = 30;
    SequenceFlags seq;

    CLI::App* solve = app.add_subcommand("solve", "solve a problem file, print coefficients");
    solve->add_option("problem", problem_path, "problem JSON file")->required();
    solve->add_option("--method", method, "variable | constant")
        ->check(CLI::IsMember({"variable", "constant"}))
        ->capture_default_str();
    solve->add_option("--out", out_path, "output CSV path (default stdout)");

    CLI::App* polygon = app.add_subcommand("polygon", "report the operator cloud and slopes");
    polygon->add_option("problem", problem_path, "problem JSON file")->required();
    polygon->add_option("--out", out_path, "output CSV path (default stdout)");
    polygon->add_option("--svg", svg_path, "also write an SVG sketch here");

    CLI::App* estimate =
        app.add_subcommand("estimate", "fit growth order on solved coefficients");
    estimate->add_option("coefficients", csv_path, "CSV from the solve subcommand")->required();
    estimate->add_option("--k1inv", k1inv_text, "reference inverse slope, rational")->required();
    estimate->add_option("--radius", radius, "norm radius")->capture_default_str();
    estimate->add_option("--window", window_text, "fit window a:b (default last 3/4)");
    estimate->add_option("--tol", tol, "verdict tolerance")->capture_default_str();
    estimate->add_flag("--sharp", sharp, "also require sigma_hat >= k1inv - tol");
    seq.attach(estimate);

    CLI::App* check_seq = app.add_subcommand("check-seq", "sequence property witnesses");
    SequenceFlags check_flags;
    check_flags.attach(check_seq);
    check_seq->add_option("--nmax", n_max, "grid bound")->capture_default_str();
    check_seq->add_option("--out", out_path, "output CSV path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run an inequality suite");
    verify->add_option("--suite", suite, "lemmas | norms")
        ->check(CLI::IsMember({"lemmas", "norms"}))
        ->capture_default_str();
    SequenceFlags verify_flags;
    verify_flags.attach(verify);
    verify->add_option("--nmax", n_max, "grid bound (lemmas)")->capture_default_str();
    verify->add_option("--caps", norm_caps, "polynomial caps (norms)")->capture_default_str();
    verify->add_option("--out", out_path, "output CSV path (default stdout)");

    estimate->add_option("--out", out_path, "output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(problem_path, method, out_path);
        if (polygon->parsed()) return cmd_polygon(problem_path, out_path, svg_path);
        if (estimate->parsed()) {
            return cmd_estimate(csv_path, k1inv_text, radius, window_text, tol, sharp, seq,
                                out_path);
        }
        if (check_seq->parsed()) return cmd_check_seq(check_flags, n_max, out_path);
        if (verify->parsed()) return cmd_verify(suite, verify_flags, n_max, norm_caps, out_path);
    } catch (const std::overflow_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
