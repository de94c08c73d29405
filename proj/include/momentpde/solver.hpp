#pragma once

#include <vector>

#include "momentpde/polygon.hpp"
#include "momentpde/rational.hpp"
#include "momentpde/sequences.hpp"
#include "momentpde/series.hpp"

namespace momentpde {

// Which series the forcing coefficient list spells out:
//   direct:    the stored polys are the t-coefficients of f itself.
//   numerator: the stored polys are the f_n of f = sum f_n/m0(n) t^n.
// Solvers convert internally, so either convention feeds both paths.
enum class ForcingConvention { direct, numerator };

// d^K_{m0,t} u + sum a_{j,alpha}(t) d^j_{m0,t} d^alpha_{m,z} u = f,
// with K initial coefficient polynomials. Spatial data are exact
// polynomials over `caps`; truncation happens only in t.
struct CauchyProblem {
    int dim = 1;
    int K = 1;
    MultiIndex caps;
    std::vector<OperatorTerm> terms;

    MomentSequence m0;
    std::vector<MomentSequence> m;
    MomentSequence M;
    Rational s0;
    std::vector<Rational> s;

    std::vector<MultiPoly> initial;  // phi_0..phi_{K-1}
    TimeSeries forcing;              // possibly shorter than N_t; missing = 0
    ForcingConvention convention = ForcingConvention::direct;
    int time_order = 0;  // N_t

    // Validates arities, caps, sequence ranges, and the t-order condition;
    // throws std::invalid_argument / std::domain_error on violations.
    void validate() const;

    // t-coefficient F_n of the forcing series itself.
    MultiPoly rhs_coefficient(int n) const;
    // Numerator data f_n with f = sum f_n/m0(n) t^n.
    MultiPoly rhs_numerator(int n) const;
};

// Coefficient recursion for the full problem: u_j = phi_j m0(0)/m0(j) for
// j < K, and for n >= K
//   u_n = m0(n-K)/m0(n) * ( F_{n-K} - sum_terms sum_{p >= q} c_{j,alpha,p}
//          * m0(n-p)/m0(n-p-j) * d^alpha u_{n-p} )
// where t^{K-j} a_{j,alpha}(t) = sum_p c_{j,alpha,p} t^p. The sum order is
// fixed: terms in declaration order, p ascending. Throws std::overflow_error
// naming the first n whose coefficients leave the finite range.
TimeSeries solve_variable(const CauchyProblem& problem);

// g_0 = .. = g_{K-2} = 0, g_{K-1} = 1, g_n = sum_{j=1..K} P_j g_{n-j}.
// P_j(zeta) = -sum of constant coefficients with j_term = K - j. Polynomial
// degrees are capped at the spatial caps; monomials beyond annihilate every
// admissible data polynomial, so the truncated recursion is exact.
struct GnFamily {
    int K = 1;
    std::vector<MultiPoly> P;  // P_1..P_K at index j-1
    std::vector<MultiPoly> g;  // g_0..g_{n_max}
};

GnFamily gn_polynomials(const std::vector<MultiPoly>& P, int K, int n_max);

// Constant-coefficient zero-data path: u_n = sum_{i=0}^{n-1} g_i(d_z)
// applied to the numerator datum f_{n-1-i}; the t-coefficient is u_n/m0(n).
// Preconditions: all coefficients constant in t, all initial data zero.
TimeSeries solve_constant(const CauchyProblem& problem);

struct ResidualReport {
    double equation = 0.0;   // max relative defect of P u = f over checkable orders
    double initial = 0.0;    // max relative defect of d^j u(0) = phi_j
    int orders_checked = 0;  // number of t-orders of the equation checked
    double max() const { return equation > initial ? equation : initial; }
};

// Applies the operator through the series/calculus primitives (the route
// independent of both recursions) and measures defects relative to the
// largest additive piece entering each coefficient.
ResidualReport residual(const CauchyProblem& problem, const TimeSeries& u);

// Coefficientwise gauge of two solutions: max over t-orders of
// max_a |a_n - b_n| / max(per-order magnitude, 1e-300).
double solution_distance(const TimeSeries& a, const TimeSeries& b);

}  // namespace momentpde
