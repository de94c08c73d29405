#include "momentpde/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace momentpde {

namespace {

double log_power(const MomentSequence& M, std::span<const double> s, const MultiIndex& alpha) {
    double acc = 0.0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        acc += s[i] * M.log_value(alpha[i]);
    }
    return acc;
}

MultiIndex added(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

void check_arity(std::size_t axes, std::span<const double> s, const MultiIndex& beta,
                 const MultiIndex& caps) {
    if (s.size() != axes || beta.size() != axes || caps.size() != axes) {
        throw std::invalid_argument("per-axis arity mismatch");
    }
}

}  // namespace

ThetaSeries theta_series(const MomentSequence& M, std::span<const double> s,
                         const MultiIndex& beta, const MultiIndex& caps) {
    check_arity(beta.size(), s, beta, caps);
    for (std::size_t i = 0; i < caps.size(); ++i) {
        if (caps[i] + beta[i] > M.cap()) {
            throw std::out_of_range("scale sequence cap below caps + beta");
        }
    }
    ThetaSeries th{caps, beta, {s.begin(), s.end()}, MultiPoly(caps)};
    th.coefficients.for_each([&](const MultiIndex& alpha, std::size_t flat) {
        th.coefficients.coefficients()[flat] =
            std::exp(log_power(M, s, added(alpha, beta)) - log_power(M, s, alpha));
    });
    return th;
}

MultiPoly formal_norm(const MultiPoly& f, std::span<const double> z0,
                      const std::vector<MomentSequence>& m, const MomentSequence& M,
                      std::span<const double> s, const MultiIndex& caps) {
    check_arity(static_cast<std::size_t>(f.axes()), s, caps, caps);
    if (m.size() != static_cast<std::size_t>(f.axes())) {
        throw std::invalid_argument("per-axis arity mismatch");
    }
    for (std::size_t i = 0; i < caps.size(); ++i) {
        if (caps[i] > f.caps()[i]) {
            throw std::invalid_argument("norm caps exceed polynomial caps");
        }
        if (caps[i] > M.cap()) throw std::out_of_range("scale sequence cap below norm caps");
    }
    // Derivative table over a <= caps, filled in storage order from the
    // lowest-nonzero-axis predecessor.
    std::vector<MultiPoly> table(MultiPoly(caps).size());
    MultiPoly out(caps);
    out.for_each([&](const MultiIndex& alpha, std::size_t flat) {
        if (flat == 0) {
            table[0] = f;
        } else {
            std::size_t axis = 0;
            while (alpha[axis] == 0) ++axis;
            MultiIndex prev = alpha;
            --prev[axis];
            table[flat] = moment_derivative_axis(table[out.flat_index(prev)], m[axis],
                                                 static_cast<int>(axis), 1);
        }
        out.coefficients()[flat] =
            std::abs(eval(table[flat], z0)) / std::exp(log_power(M, s, alpha));
    });
    return out;
}

bool check_theta_shift(const MomentSequence& M, std::span<const double> s, const MultiIndex& beta,
                       const MultiIndex& gamma, const MultiIndex& caps) {
    check_arity(beta.size(), s, beta, caps);
    if (gamma.size() != beta.size()) throw std::invalid_argument("per-axis arity mismatch");
    int range = 0;
    for (std::size_t i = 0; i < caps.size(); ++i) {
        range = std::max(range, caps[i] + beta[i] + gamma[i]);
    }
    if (range + 1 > M.cap()) throw std::out_of_range("scale sequence cap below shift range");
    if (!check_lc(M, range).holds) {
        throw std::domain_error("theta shift requires a log-convex scale sequence");
    }
    const MultiIndex gb = added(gamma, beta);
    const double log_ratio = log_power(M, s, beta) - log_power(M, s, gb);
    bool ok = true;
    for_each_index(caps, [&](const MultiIndex& alpha, std::size_t) {
        const double lhs = log_power(M, s, added(alpha, beta)) - log_power(M, s, alpha);
        const double rhs = log_ratio + log_power(M, s, added(alpha, gb)) - log_power(M, s, alpha);
        if (lhs > rhs + kLogEps) ok = false;
    });
    return ok;
}

namespace {

// Checks ||d^beta f||_rho << C h^{|beta|} Theta^{(gamma+beta)}(h rho) at one
// base point; comparisons run on logs with the shared slack.
bool bounded_by_theta(const MultiPoly& norm_coeffs, double logC, double logh,
                      const MomentSequence& M, std::span<const double> s, const MultiIndex& shift) {
    bool ok = true;
    norm_coeffs.for_each([&](const MultiIndex& alpha, std::size_t flat) {
        const double v = norm_coeffs.coefficients()[flat];
        if (v == 0.0) return;
        const double bound = logC + index_sum(alpha) * logh +
                             log_power(M, s, added(alpha, shift)) - log_power(M, s, alpha);
        if (std::log(v) > bound + kLogEps) ok = false;
    });
    return ok;
}

}  // namespace

NormCheckResult check_norm_derivative_bound(const MultiPoly& f,
                                            const std::vector<std::vector<double>>& grid,
                                            const std::vector<MomentSequence>& m,
                                            const MomentSequence& M, std::span<const double> s,
                                            const MultiIndex& beta, const MultiIndex& gamma,
                                            double C, double h, const MultiIndex& caps) {
    if (!(C > 0.0) || !(h > 0.0)) throw std::invalid_argument("constants must be positive");
    const double logC = std::log(C);
    const double logh = std::log(h);
    const MultiPoly df = moment_derivative_multi(f, m, beta);
    for (const auto& z0 : grid) {
        const MultiPoly base = formal_norm(f, z0, m, M, s, caps);
        if (!bounded_by_theta(base, logC, logh, M, s, gamma)) {
            return NormCheckResult::hypothesis_failed;
        }
    }
    const double logC_beta = logC + index_sum(beta) * logh;
    const MultiIndex gb = added(gamma, beta);
    for (const auto& z0 : grid) {
        const MultiPoly dnorm = formal_norm(df, z0, m, M, s, caps);
        if (!bounded_by_theta(dnorm, logC_beta, logh, M, s, gb)) {
            return NormCheckResult::fail;
        }
    }
    return NormCheckResult::pass;
}

NormEnvelope norm_envelope_from_majorant(int axes, double C0, double D, double a_lo, double a_hi,
                                         double B, double s_max) {
    if (!(a_lo > 0.0) || !(a_hi > 0.0) || !(B > 0.0) || !(D > 0.0)) {
        throw std::invalid_argument("envelope constants must be positive");
    }
    NormEnvelope e;
    e.h = D * a_hi * std::pow(B, s_max);
    e.r = a_lo / (2.0 * e.h);
    e.C = std::ldexp(C0, axes);  // 2^N * C0
    return e;
}

std::vector<std::vector<double>> polydisc_grid(int axes, double r) {
    std::vector<double> pts;
    for (int k = 0; k < 4; ++k) {
        pts.push_back(-r * (2 * k + 1) / 16.0);
        pts.push_back(r * (2 * k + 1) / 16.0);
    }
    std::vector<std::vector<double>> grid;
    std::vector<std::size_t> idx(static_cast<std::size_t>(axes), 0);
    for (;;) {
        std::vector<double> z(static_cast<std::size_t>(axes));
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = pts[idx[i]];
        grid.push_back(std::move(z));
        std::size_t axis = 0;
        while (axis < idx.size()) {
            if (++idx[axis] < pts.size()) break;
            idx[axis] = 0;
            ++axis;
        }
        if (axis == idx.size()) return grid;
    }
}

std::vector<LemmaCheck> verify_norm_suite(int caps) {
    if (caps < 8) throw std::invalid_argument("norm suite needs caps >= 8");
    std::vector<LemmaCheck> out;
    const int f_caps = caps + 4;
    const MomentSequence fact = MomentSequence::factorial(f_caps + 8);

    for (double sv : {0.5, 1.0, 2.0}) {
        const double s[] = {sv};
        bool ok = true;
        for (int b = 0; b <= 3 && ok; ++b) {
            for (int g = 0; g <= 3 && ok; ++g) {
                ok = check_theta_shift(fact, s, {b}, {g}, {caps});
            }
        }
        out.push_back({"theta_shift(s=" + std::to_string(sv) + ")", true, ok,
                       "beta,gamma <= 3, caps " + std::to_string(caps)});
    }

    {
        // Majorant envelope feeding the derivative bound, factorial scale,
        // s = 1, geometric data with C0 = 1, D = 1.
        const double s[] = {1.0};
        const std::vector<MomentSequence> m = {fact};
        const OrderWitness ow = order_witness(fact, fact, 1.0, f_caps);
        const PropertyWitness mg = mg_witness(fact, f_caps);
        const NormEnvelope env =
            norm_envelope_from_majorant(1, 1.0, 1.0, ow.a_lo, ow.a_hi, mg.constant, 1.0);
        const auto grid = polydisc_grid(1, env.r);
        const MultiPoly f = geometric_majorant({f_caps}, 1.0, 1.0);
        bool ok = true;
        for (int b = 1; b <= 3 && ok; ++b) {
            ok = check_norm_derivative_bound(f, grid, m, fact, s, {b}, {0}, env.C, env.h,
                                             {caps}) == NormCheckResult::pass;
        }
        out.push_back({"norm_envelope_pipeline", true, ok,
                       "C=" + std::to_string(env.C) + ",h=" + std::to_string(env.h) +
                           ",r=" + std::to_string(env.r)});
    }

    {
        // Series-coefficient growth: f_n = M_n * geometric majorant keeps
        // ||f_n|| << 2 M_n Theta^{(0)}(h rho) on the grid for n <= 12.
        const double s[] = {1.0};
        const std::vector<MomentSequence> m = {fact};
        const OrderWitness ow = order_witness(fact, fact, 1.0, f_caps);
        const PropertyWitness mg = mg_witness(fact, f_caps);
        const NormEnvelope env =
            norm_envelope_from_majorant(1, 1.0, 1.0, ow.a_lo, ow.a_hi, mg.constant, 1.0);
        const auto grid = polydisc_grid(1, env.r);
        bool ok = true;
        for (int n = 0; n <= 12 && ok; ++n) {
            MultiPoly fn = geometric_majorant({f_caps}, 1.0, 1.0);
            fn *= fact.value(n);
            const double Cn = env.C * fact.value(n);
            ok = check_norm_derivative_bound(fn, grid, m, fact, s, {0}, {0}, Cn, env.h,
                                             {caps}) == NormCheckResult::pass;
        }
        out.push_back({"series_coefficient_growth", true, ok, "A=2,B=1,n<=12"});
    }

    return out;
}

}  // namespace momentpde
