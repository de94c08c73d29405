#include "momentpde/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "momentpde/calculus.hpp"

namespace momentpde {

void CauchyProblem::validate() const {
    if (dim < 1 || dim > MultiPoly::kMaxAxes) throw std::invalid_argument("dim must be 1..3");
    if (K < 1) throw std::invalid_argument("K must be >= 1");
    if (time_order < K - 1) throw std::invalid_argument("time order below K - 1");
    if (static_cast<int>(caps.size()) != dim || static_cast<int>(m.size()) != dim ||
        static_cast<int>(s.size()) != dim) {
        throw std::invalid_argument("per-axis arity mismatch");
    }
    if (static_cast<int>(initial.size()) != K) {
        throw std::invalid_argument("initial data must supply K polynomials");
    }
    for (const auto& phi : initial) {
        if (phi.caps() != caps) throw std::invalid_argument("initial datum caps mismatch");
    }
    if (forcing.order() >= 0 && forcing.spatial_caps() != caps) {
        throw std::invalid_argument("forcing caps mismatch");
    }
    if (m0.cap() < time_order) throw std::out_of_range("m0 cap below time order");
    for (int i = 0; i < dim; ++i) {
        if (m[static_cast<std::size_t>(i)].cap() < caps[static_cast<std::size_t>(i)]) {
            throw std::out_of_range("spatial sequence cap below spatial caps");
        }
    }
    for (const auto& t : terms) {
        if (static_cast<int>(t.alpha.size()) != dim) {
            throw std::invalid_argument("term arity mismatch");
        }
        if (t.j < 0) throw std::invalid_argument("term j must be >= 0");
        for (int a : t.alpha) {
            if (a < 0) throw std::invalid_argument("term alpha must be >= 0");
        }
    }
    if (!check_condition_a(terms, K)) {
        throw std::domain_error("operator violates the t-order condition");
    }
}

MultiPoly CauchyProblem::rhs_coefficient(int n) const {
    if (n < 0) throw std::out_of_range("negative t-order");
    if (forcing.order() < 0 || n > forcing.order()) return MultiPoly(caps);
    if (convention == ForcingConvention::direct) return forcing.coefficient(n);
    MultiPoly out = forcing.coefficient(n);
    out *= std::exp(-m0.log_value(n));
    return out;
}

MultiPoly CauchyProblem::rhs_numerator(int n) const {
    if (n < 0) throw std::out_of_range("negative t-order");
    if (forcing.order() < 0 || n > forcing.order()) return MultiPoly(caps);
    if (convention == ForcingConvention::numerator) return forcing.coefficient(n);
    MultiPoly out = forcing.coefficient(n);
    out *= m0.value(n);
    return out;
}

namespace {

void check_finite(const MultiPoly& p, int n) {
    for (double c : p.coefficients()) {
        if (!std::isfinite(c)) {
            throw std::overflow_error("coefficient overflow at t-order " + std::to_string(n));
        }
    }
}

}  // namespace

TimeSeries solve_variable(const CauchyProblem& problem) {
    problem.validate();
    const int K = problem.K;
    const int N_t = problem.time_order;
    TimeSeries u(problem.caps, N_t);

    for (int j = 0; j < K && j <= N_t; ++j) {
        u.coefficient(j) = problem.initial[static_cast<std::size_t>(j)];
        u.coefficient(j) *= problem.m0.log_ratio(0, j);
    }

    for (int n = K; n <= N_t; ++n) {
        MultiPoly acc = problem.rhs_coefficient(n - K);
        for (const auto& term : problem.terms) {
            if (!term.coeff.has_terms()) continue;
            const int q = term.coeff.ord() - term.j + K;
            for (int p = q; p <= n - term.j; ++p) {
                // t^{K-j} a(t) = sum_p c_p t^p, so c_p is the coefficient of
                // a at power p - K + j.
                const double c = term.coeff.at(p - K + term.j);
                if (c == 0.0) continue;
                MultiPoly d = moment_derivative_multi_exact(u.coefficient(n - p), problem.m,
                                                            term.alpha);
                acc.add_scaled(d, -c * problem.m0.log_ratio(n - p, n - p - term.j));
            }
        }
        acc *= problem.m0.log_ratio(n - K, n);
        check_finite(acc, n);
        u.coefficient(n) = std::move(acc);
    }
    return u;
}

GnFamily gn_polynomials(const std::vector<MultiPoly>& P, int K, int n_max) {
    if (K < 1) throw std::invalid_argument("operator needs K >= 1");
    if (static_cast<int>(P.size()) != K) throw std::invalid_argument("needs P_1..P_K");
    for (const auto& p : P) {
        if (!p.same_shape(P.front())) throw std::invalid_argument("polynomial shape mismatch");
    }
    GnFamily fam{K, P, {}};
    const MultiIndex& caps = P.front().caps();
    fam.g.assign(static_cast<std::size_t>(std::max(n_max, K - 1)) + 1, MultiPoly(caps));
    fam.g[static_cast<std::size_t>(K - 1)].at(MultiIndex(caps.size(), 0)) = 1.0;
    for (int n = K; n <= n_max; ++n) {
        MultiPoly acc(caps);
        for (int j = 1; j <= K; ++j) {
            // Truncated product P_j * g_{n-j}: polynomial multiplication
            // dropping monomials beyond caps. Dropped monomials only ever
            // feed higher monomials, so the kept range stays exact.
            const MultiPoly& pj = P[static_cast<std::size_t>(j - 1)];
            const MultiPoly& gprev = fam.g[static_cast<std::size_t>(n - j)];
            pj.for_each([&](const MultiIndex& a, std::size_t fa) {
                const double ca = pj.coefficients()[fa];
                if (ca == 0.0) return;
                gprev.for_each([&](const MultiIndex& b, std::size_t fb) {
                    const double cb = gprev.coefficients()[fb];
                    if (cb == 0.0) return;
                    MultiIndex ab(a.size());
                    for (std::size_t i = 0; i < a.size(); ++i) {
                        ab[i] = a[i] + b[i];
                        if (ab[i] > caps[i]) return;
                    }
                    acc.at(ab) += ca * cb;
                });
            });
        }
        fam.g[static_cast<std::size_t>(n)] = std::move(acc);
    }
    fam.g.resize(static_cast<std::size_t>(n_max) + 1, MultiPoly(caps));
    return fam;
}

namespace {

// sum over monomials of g of g_a * d^a f, the exact-polynomial reading.
MultiPoly apply_gn(const MultiPoly& g, const MultiPoly& f, const std::vector<MomentSequence>& m) {
    MultiPoly acc(f.caps());
    g.for_each([&](const MultiIndex& a, std::size_t fa) {
        const double c = g.coefficients()[fa];
        if (c == 0.0) return;
        acc.add_scaled(moment_derivative_multi_exact(f, m, a), c);
    });
    return acc;
}

}  // namespace

TimeSeries solve_constant(const CauchyProblem& problem) {
    problem.validate();
    for (const auto& t : problem.terms) {
        if (!t.coeff.is_constant()) {
            throw std::invalid_argument("constant path requires t-constant coefficients");
        }
        if (t.coeff.has_terms() && t.j >= problem.K) {
            throw std::invalid_argument("constant path requires j < K");
        }
    }
    for (const auto& phi : problem.initial) {
        if (!phi.is_zero()) {
            throw std::invalid_argument("constant path requires zero initial data");
        }
    }

    std::vector<MultiPoly> P(static_cast<std::size_t>(problem.K), MultiPoly(problem.caps));
    for (const auto& t : problem.terms) {
        if (!t.coeff.has_terms()) continue;
        bool beyond = false;
        for (std::size_t i = 0; i < t.alpha.size() && !beyond; ++i) {
            beyond = t.alpha[i] > problem.caps[i];
        }
        // A monomial beyond caps annihilates every data polynomial; dropping
        // it matches the capped g recursion.
        if (beyond) continue;
        P[static_cast<std::size_t>(problem.K - 1 - t.j)].at(t.alpha) -= t.coeff.at(0);
    }

    const int N_t = problem.time_order;
    const GnFamily fam = gn_polynomials(P, problem.K, std::max(0, N_t - 1));
    TimeSeries u(problem.caps, N_t);
    for (int n = 1; n <= N_t; ++n) {
        MultiPoly acc(problem.caps);
        for (int i = 0; i <= n - 1; ++i) {
            const MultiPoly fn = problem.rhs_numerator(n - 1 - i);
            if (fn.is_zero()) continue;
            acc += apply_gn(fam.g[static_cast<std::size_t>(i)], fn, problem.m);
        }
        acc *= std::exp(-problem.m0.log_value(n));  // t-coefficient is u_n/m0(n)
        check_finite(acc, n);
        u.coefficient(n) = std::move(acc);
    }
    return u;
}

ResidualReport residual(const CauchyProblem& problem, const TimeSeries& u) {
    problem.validate();
    if (u.spatial_caps() != problem.caps || u.order() != problem.time_order) {
        throw std::invalid_argument("solution shape mismatch");
    }
    const int K = problem.K;
    const int top = u.order() - K;
    ResidualReport rep;
    rep.orders_checked = top + 1;

    // Additive pieces per order: principal d^K u, each term, minus F.
    // scale_n tracks the largest piece magnitude per coefficient slot.
    const std::size_t slots = MultiPoly(problem.caps).size();
    for (int n = 0; n <= top; ++n) {
        std::vector<double> sum(slots, 0.0), scale(slots, 0.0);
        const auto absorb = [&](const MultiPoly& piece, double sign) {
            const auto& c = piece.coefficients();
            for (std::size_t i = 0; i < slots; ++i) {
                sum[i] += sign * c[i];
                scale[i] = std::max(scale[i], std::abs(c[i]));
            }
        };

        MultiPoly principal = u.coefficient(n + K);
        principal *= problem.m0.log_ratio(n + K, n);
        absorb(principal, 1.0);

        for (const auto& term : problem.terms) {
            if (!term.coeff.has_terms()) continue;
            for (const auto& [p, c] : term.coeff.powers) {
                const int l = n - p;  // order of d^j d^alpha u needed
                if (l < 0) continue;
                if (l + term.j > u.order()) continue;
                MultiPoly piece = moment_derivative_multi_exact(u.coefficient(l + term.j),
                                                                problem.m, term.alpha);
                piece *= problem.m0.log_ratio(l + term.j, l);
                absorb(piece, c);
            }
        }

        absorb(problem.rhs_coefficient(n), -1.0);

        for (std::size_t i = 0; i < slots; ++i) {
            if (scale[i] == 0.0) continue;
            rep.equation = std::max(rep.equation, std::abs(sum[i]) / scale[i]);
        }
    }

    for (int j = 0; j < K && j <= u.order(); ++j) {
        // d^j u at t = 0 is u_j m0(j)/m0(0).
        MultiPoly at0 = u.coefficient(j);
        at0 *= problem.m0.log_ratio(j, 0);
        MultiPoly diff = at0;
        diff.add_scaled(problem.initial[static_cast<std::size_t>(j)], -1.0);
        const double denom = std::max(
            1.0, std::max(coefficient_norm(at0, 1.0),
                          coefficient_norm(problem.initial[static_cast<std::size_t>(j)], 1.0)));
        rep.initial = std::max(rep.initial, coefficient_norm(diff, 1.0) / denom);
    }
    return rep;
}

double solution_distance(const TimeSeries& a, const TimeSeries& b) {
    if (a.spatial_caps() != b.spatial_caps() || a.order() != b.order()) {
        throw std::invalid_argument("solution shape mismatch");
    }
    double worst = 0.0;
    for (int n = 0; n <= a.order(); ++n) {
        const auto& ca = a.coefficient(n).coefficients();
        const auto& cb = b.coefficient(n).coefficients();
        double scale = 0.0, diff = 0.0;
        for (std::size_t i = 0; i < ca.size(); ++i) {
            scale = std::max({scale, std::abs(ca[i]), std::abs(cb[i])});
            diff = std::max(diff, std::abs(ca[i] - cb[i]));
        }
        if (scale > 0.0) worst = std::max(worst, diff / scale);
    }
    return worst;
}

}  // namespace momentpde
