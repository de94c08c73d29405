#pragma once

#include <span>

#include "momentpde/sequences.hpp"
#include "momentpde/series.hpp"

namespace momentpde {

// Moment differentiation along one spatial axis, truncated-series reading:
// the result's cap on that axis shrinks by `times` (coefficients that would
// need unknown source terms are dropped, never zero-filled). Coefficient map:
// out_a = in_{a+times} * m(a+times)/m(a), ratios formed in log space.
// Throws std::invalid_argument when the shrunken cap would be negative and
// std::out_of_range when the sequence cap cannot cover the shifts.
MultiPoly moment_derivative_axis(const MultiPoly& f, const MomentSequence& m, int axis, int times);

// Mixed moment derivative; per-axis sequences, caps shrink by alpha.
MultiPoly moment_derivative_multi(const MultiPoly& f, const std::vector<MomentSequence>& m,
                                  const MultiIndex& alpha);

// Same coefficient map with the exact-polynomial reading: caps are kept and
// exponents beyond the stored degree contribute exact zeros. Only valid when
// the input is a complete polynomial, which is the solver's data contract.
MultiPoly moment_derivative_axis_exact(const MultiPoly& f, const MomentSequence& m, int axis,
                                       int times);
MultiPoly moment_derivative_multi_exact(const MultiPoly& f, const std::vector<MomentSequence>& m,
                                        const MultiIndex& alpha);

// Moment differentiation in t: coefficient n of the result is
// u_{n+times} * m0(n+times)/m0(n); the stored order shrinks by `times`.
TimeSeries moment_derivative_time(const TimeSeries& f, const MomentSequence& m0, int times);

// Moment antiderivative in t: order grows by one; coefficient 0 vanishes and
// coefficient n+1 is f_n * m0(n)/m0(n+1). Throws std::out_of_range when the
// sequence cap cannot cover the new order.
TimeSeries moment_antiderivative_time(const TimeSeries& f, const MomentSequence& m0);

// Coefficientwise domination |f_a| <= g_a on the common shape. g must have
// nonnegative coefficients.
bool majorizes(const MultiPoly& g, const MultiPoly& f);

double eval(const MultiPoly& f, std::span<const double> z);

// sum_a |f_a| r^{|a|}, the sup-norm surrogate on the polydisc of radius r;
// accepts r = 0 (constant term only). Accumulated in storage order.
double coefficient_norm(const MultiPoly& f, double r);

// C * sum_{a <= caps} (D z)^a, the truncated geometric majorant.
MultiPoly geometric_majorant(const MultiIndex& caps, double C, double D);

}  // namespace momentpde
