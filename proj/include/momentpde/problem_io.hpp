#pragma once

#include <string>
#include <vector>

#include "momentpde/estimator.hpp"
#include "momentpde/polygon.hpp"
#include "momentpde/sequence_checks.hpp"
#include "momentpde/solver.hpp"

namespace momentpde {

struct EstimatorConfig {
    double radius = 0.0;
    int n_lo = 0;  // 0 means N_t/4
    int n_hi = 0;  // 0 means N_t
    double tol = 0.05;
    bool sharp = false;
};

struct LoadedProblem {
    CauchyProblem problem;
    EstimatorConfig estimator;
};

// JSON problem files; schema is strict (unknown keys rejected), rationals
// are "p" or "p/q" strings parsed exactly, per-axis caps at most 128 with a
// bounded total size. Sequence caps default to MOMENTPDE_NCAP (else 64) and
// are raised to each problem's minimum requirement unless the file pins
// n_cap explicitly. Throws std::invalid_argument with a path-annotated
// message on any malformed input.
LoadedProblem parse_problem_text(const std::string& text);
LoadedProblem load_problem_file(const std::string& path);

// Sequence spec from a JSON object string, shared by the problem loader and
// the CLI flag form.
SequenceSpec parse_sequence_text(const std::string& text);

int default_sequence_cap();  // MOMENTPDE_NCAP override, else 64

// Fixed-format CSV: %.17g doubles, '.' decimal point, '\n' endings, fully
// deterministic for identical inputs.
std::string format_double(double v);

std::string solve_csv(const CauchyProblem& problem, const TimeSeries& u,
                      const ResidualReport& report);
std::string polygon_csv(const NewtonPolygon& polygon, bool condition_a);
std::string sequence_report_csv(const SequenceSpec& spec, const PropertyWitness& lc,
                                const PropertyWitness& mg, const PropertyWitness& star);
std::string lemma_report_csv(const std::vector<LemmaCheck>& checks);

struct EstimateOutput {
    GrowthFit fit;
    Rational k1_inv;
    double radius = 0.0;
    double tol = 0.0;
    bool sharp = false;
    bool pass = false;
};

std::string estimate_csv(const EstimateOutput& est);

// Re-ingests solve_csv output (any row order; the trailing residual line is
// ignored). The spatial arity comes from the header.
TimeSeries read_solution_csv(const std::string& text);

}  // namespace momentpde
