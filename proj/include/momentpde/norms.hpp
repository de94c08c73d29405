#pragma once

#include <span>
#include <string>
#include <vector>

#include "momentpde/calculus.hpp"
#include "momentpde/sequence_checks.hpp"
#include "momentpde/sequences.hpp"
#include "momentpde/series.hpp"

namespace momentpde {

// Theta^{(beta)}(rho) = sum_a (M^s_{a+beta}/M^s_a) rho^a, stored as the
// coefficient array over a <= caps. s is the per-axis order vector; M must
// cover caps + beta.
struct ThetaSeries {
    MultiIndex caps;
    MultiIndex beta;
    std::vector<double> s;
    MultiPoly coefficients;
};

ThetaSeries theta_series(const MomentSequence& M, std::span<const double> s,
                         const MultiIndex& beta, const MultiIndex& caps);

// ||f||_rho at base point z0: coefficient a is |(d^a f)(z0)| / M_a^s where
// d^a is the mixed moment derivative for the per-axis sequences m. The
// derivative table is built incrementally in storage order. f must carry
// caps at least `caps` (the spare degrees beyond that absorb the shifts of
// later checks).
MultiPoly formal_norm(const MultiPoly& f, std::span<const double> z0,
                      const std::vector<MomentSequence>& m, const MomentSequence& M,
                      std::span<const double> s, const MultiIndex& caps);

// Coefficientwise Theta^{(beta)} << (M_beta^s / M_{gamma+beta}^s) *
// Theta^{(gamma+beta)} on the grid a <= caps. Requires M log-convex on the
// touched range; throws std::domain_error otherwise.
bool check_theta_shift(const MomentSequence& M, std::span<const double> s, const MultiIndex& beta,
                       const MultiIndex& gamma, const MultiIndex& caps);

enum class NormCheckResult { pass, fail, hypothesis_failed };

// Hypothesis: ||f||_rho << C * Theta^{(gamma)}(h rho) at every grid point.
// Conclusion: ||d^beta f||_rho << C h^{|beta|} * Theta^{(gamma+beta)}(h rho).
// The hypothesis is re-verified first so a hypothesis violation is reported
// as such rather than as a conclusion failure.
NormCheckResult check_norm_derivative_bound(const MultiPoly& f,
                                            const std::vector<std::vector<double>>& grid,
                                            const std::vector<MomentSequence>& m,
                                            const MomentSequence& M, std::span<const double> s,
                                            const MultiIndex& beta, const MultiIndex& gamma,
                                            double C, double h, const MultiIndex& caps);

// Constants produced by the majorant-to-norm envelope construction: from
// f << C0 * sum (D z)^a one gets, with H = D*A*B^{s*}, B' = H/a_lo and
// r = 1/(2B'), the bound sup_{|z0|<r} ||f||_rho << 2^N C0 Theta^{(0)}(H rho).
struct NormEnvelope {
    double C = 0.0;  // 2^N * C0
    double h = 0.0;  // H
    double r = 0.0;  // polydisc radius for the base points
};

NormEnvelope norm_envelope_from_majorant(int axes, double C0, double D, double a_lo, double a_hi,
                                         double B, double s_max);

// Symmetric grid of base points strictly inside the polydisc of radius r:
// per axis the points +-r(2k+1)/16, k = 0..3 (8 per axis).
std::vector<std::vector<double>> polydisc_grid(int axes, double r);

// Theta-shift, envelope pipeline, and series-coefficient checks packaged for
// the CLI verify subcommand; all run for the factorial scale at the given
// caps and orders s in {1/2, 1, 2}.
std::vector<LemmaCheck> verify_norm_suite(int caps);

}  // namespace momentpde
