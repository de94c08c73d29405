#pragma once

#include <span>
#include <vector>

#include "momentpde/rational.hpp"
#include "momentpde/sequences.hpp"
#include "momentpde/series.hpp"
#include "momentpde/solver.hpp"

namespace momentpde {

// v_n = coefficient_norm(u_n, r) for every stored t-order, carried in log
// space (zero coefficients give -infinity); linear values are exposed too
// and overflowed reports when any of them left the finite range.
struct NormSequenceResult {
    std::vector<double> log_values;
    std::vector<double> values;
    bool overflowed = false;
};

NormSequenceResult norm_sequence(const TimeSeries& u, double r);

// Least-squares fit log v_n ~ log C + n log H + sigma log M_n over the
// window [n_lo, n_hi], skipping zero entries. Needs >= 5 usable points.
// degenerate reports a rank-deficient design (log M_n constant or collinear
// with n), in which case sigma_hat is meaningless and left at 0.
struct GrowthFit {
    int n_lo = 0;
    int n_hi = 0;
    int points_used = 0;
    double log_C = 0.0;
    double log_H = 0.0;
    double sigma_hat = 0.0;
    double rms = 0.0;
    bool degenerate = false;
};

GrowthFit fit_order(std::span<const double> values, const MomentSequence& M, int n_lo, int n_hi);
GrowthFit fit_order_log(std::span<const double> log_values, const MomentSequence& M, int n_lo,
                        int n_hi);

// Certified growth verdict: residual-checks the solution, reads 1/k_1 off
// the operator, fits sigma on the window, and compares with upper-bound
// semantics (pass iff sigma_hat <= 1/k_1 + tol; sharp additionally wants
// sigma_hat >= 1/k_1 - tol). Window endpoints outside the stored orders are
// clamped; nonpositive defaults mean [N_t/4, N_t].
struct OrderVerdict {
    Rational k1_inv;
    GrowthFit fit;
    double radius = 0.0;
    double tol = 0.0;
    double residual = 0.0;
    bool sharp_requested = false;
    bool pass = false;
};

OrderVerdict verify_theorem_order(const CauchyProblem& problem, const TimeSeries& u, double radius,
                                  double tol, bool sharp, int n_lo = 0, int n_hi = 0);

}  // namespace momentpde
