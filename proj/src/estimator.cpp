#include "momentpde/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "momentpde/calculus.hpp"

namespace momentpde {

NormSequenceResult norm_sequence(const TimeSeries& u, double r) {
    NormSequenceResult out;
    out.log_values.reserve(static_cast<std::size_t>(u.order()) + 1);
    out.values.reserve(static_cast<std::size_t>(u.order()) + 1);
    for (int n = 0; n <= u.order(); ++n) {
        // Scaled accumulation: factor out the largest term so the sum stays
        // finite even when the linear norm does not.
        const MultiPoly& p = u.coefficient(n);
        double peak = 0.0;
        std::vector<double> weights(p.size());
        p.for_each([&](const MultiIndex& alpha, std::size_t flat) {
            const double w = std::abs(p.coefficients()[flat]) *
                             std::pow(r, static_cast<double>(index_sum(alpha)));
            weights[flat] = w;
            peak = std::max(peak, w);
        });
        if (peak == 0.0) {
            out.log_values.push_back(-std::numeric_limits<double>::infinity());
            out.values.push_back(0.0);
            continue;
        }
        double acc = 0.0;
        for (double w : weights) acc += w / peak;
        const double log_norm = std::log(peak) + std::log(acc);
        out.log_values.push_back(log_norm);
        const double linear = std::exp(log_norm);
        if (!std::isfinite(linear)) out.overflowed = true;
        out.values.push_back(linear);
    }
    return out;
}

GrowthFit fit_order_log(std::span<const double> log_values, const MomentSequence& M, int n_lo,
                        int n_hi) {
    if (n_lo < 0 || n_hi >= static_cast<int>(log_values.size()) || n_lo > n_hi) {
        throw std::invalid_argument("fit window outside stored orders");
    }
    if (n_hi > M.cap()) throw std::out_of_range("scale sequence cap below fit window");

    std::vector<double> ns, Ls, ys;
    for (int n = n_lo; n <= n_hi; ++n) {
        const double y = log_values[static_cast<std::size_t>(n)];
        if (!std::isfinite(y)) continue;  // zero norms carry no growth information
        ns.push_back(static_cast<double>(n));
        Ls.push_back(M.log_value(n));
        ys.push_back(y);
    }
    GrowthFit fit;
    fit.n_lo = n_lo;
    fit.n_hi = n_hi;
    fit.points_used = static_cast<int>(ys.size());
    if (fit.points_used < 5) {
        throw std::invalid_argument("fit needs at least 5 nonzero points in the window");
    }

    // Centered normal equations for [1, n, log M_n].
    const double cnt = static_cast<double>(ys.size());
    double mean_n = 0.0, mean_L = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        mean_n += ns[i];
        mean_L += Ls[i];
        mean_y += ys[i];
    }
    mean_n /= cnt;
    mean_L /= cnt;
    mean_y /= cnt;
    double snn = 0.0, snL = 0.0, sLL = 0.0, sny = 0.0, sLy = 0.0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        const double dn = ns[i] - mean_n;
        const double dL = Ls[i] - mean_L;
        const double dy = ys[i] - mean_y;
        snn += dn * dn;
        snL += dn * dL;
        sLL += dL * dL;
        sny += dn * dy;
        sLy += dL * dy;
    }
    const double det = snn * sLL - snL * snL;
    // Degenerate when the centered regressors are (near) linearly dependent;
    // scale-relative threshold keeps the test unit-free.
    if (sLL <= 1e-12 * std::max(1.0, snn) || det <= 1e-10 * std::max(1.0, snn * sLL)) {
        fit.degenerate = true;
        fit.log_C = mean_y;
        return fit;
    }
    fit.log_H = (sny * sLL - sLy * snL) / det;
    fit.sigma_hat = (sLy * snn - sny * snL) / det;
    fit.log_C = mean_y - fit.log_H * mean_n - fit.sigma_hat * mean_L;
    double ss = 0.0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        const double r = ys[i] - (fit.log_C + fit.log_H * ns[i] + fit.sigma_hat * Ls[i]);
        ss += r * r;
    }
    fit.rms = std::sqrt(ss / cnt);
    return fit;
}

GrowthFit fit_order(std::span<const double> values, const MomentSequence& M, int n_lo, int n_hi) {
    std::vector<double> logs(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0.0) throw std::invalid_argument("norm values must be >= 0");
        logs[i] = values[i] == 0.0 ? -std::numeric_limits<double>::infinity()
                                   : std::log(values[i]);
    }
    return fit_order_log(logs, M, n_lo, n_hi);
}

OrderVerdict verify_theorem_order(const CauchyProblem& problem, const TimeSeries& u, double radius,
                                  double tol, bool sharp, int n_lo, int n_hi) {
    OrderVerdict v;
    v.radius = radius;
    v.tol = tol;
    v.sharp_requested = sharp;
    v.residual = residual(problem, u).max();
    if (v.residual > 1e-9) {
        throw std::domain_error("solution fails residual certification");
    }
    v.k1_inv = k1_inverse(problem.terms, problem.K, problem.s0, problem.s);

    if (n_hi <= 0) n_hi = u.order();
    if (n_lo <= 0) n_lo = u.order() / 4;
    n_hi = std::min(n_hi, u.order());
    n_lo = std::max(0, std::min(n_lo, n_hi));

    const NormSequenceResult norms = norm_sequence(u, radius);
    v.fit = fit_order_log(norms.log_values, problem.M, n_lo, n_hi);
    if (v.fit.degenerate) {
        v.pass = false;
        return v;
    }
    const double bound = v.k1_inv.to_double();
    v.pass = v.fit.sigma_hat <= bound + tol;
    if (sharp && v.pass) v.pass = v.fit.sigma_hat >= bound - tol;
    return v;
}

}  // namespace momentpde
