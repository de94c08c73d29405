#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "momentpde/calculus.hpp"
#include "momentpde/estimator.hpp"

using namespace momentpde;

namespace {

OperatorTerm term(int j, MultiIndex alpha, CoeffSeries c) {
    OperatorTerm t;
    t.j = j;
    t.alpha = std::move(alpha);
    t.coeff = std::move(c);
    return t;
}

CauchyProblem heat_problem(int cap, int n_t, MomentSequence M) {
    const MultiIndex caps = {cap};
    const int seq = std::max(cap, n_t) + 4;
    return CauchyProblem{1,
                         1,
                         caps,
                         {term(0, {2}, CoeffSeries::constant(-1.0))},
                         MomentSequence::factorial(seq),
                         {MomentSequence::factorial(seq)},
                         std::move(M),
                         Rational(1),
                         {Rational(1)},
                         {geometric_majorant(caps, 1.0, 1.0)},
                         TimeSeries(caps, 0),
                         ForcingConvention::direct,
                         n_t};
}

}  // namespace

TEST_CASE("norm sequence evaluates per order and flags overflow") {
    TimeSeries u({2}, 2);
    u.coefficient(0).at({0}) = 1.0;
    u.coefficient(0).at({1}) = 2.0;
    u.coefficient(0).at({2}) = 3.0;
    u.coefficient(2).at({1}) = -4.0;

    const NormSequenceResult at1 = norm_sequence(u, 1.0);
    REQUIRE(at1.values.size() == 3);
    CHECK(at1.values[0] == doctest::Approx(6.0));
    CHECK(at1.values[1] == 0.0);
    CHECK(at1.log_values[1] == -std::numeric_limits<double>::infinity());
    CHECK(at1.values[2] == doctest::Approx(4.0));
    CHECK_FALSE(at1.overflowed);

    const NormSequenceResult at0 = norm_sequence(u, 0.0);
    CHECK(at0.values[0] == doctest::Approx(1.0));
    CHECK(at0.values[2] == 0.0);

    // the log value survives where the linear norm leaves the finite range
    TimeSeries big({1}, 0);
    big.coefficient(0).at({0}) = 1e308;
    big.coefficient(0).at({1}) = 1e308;
    const NormSequenceResult huge = norm_sequence(big, 1.5);
    CHECK(huge.overflowed);
    CHECK(std::isfinite(huge.log_values[0]));
    CHECK(huge.log_values[0] == doctest::Approx(std::log(1e308) + std::log(2.5)).epsilon(1e-12));
}

TEST_CASE("growth fit recovers planted constants exactly") {
    const MomentSequence fact = MomentSequence::factorial(24);
    std::vector<double> logs(21);
    for (int n = 0; n <= 20; ++n) {
        logs[static_cast<std::size_t>(n)] =
            std::log(2.0) + n * std::log(3.0) + 1.5 * fact.log_value(n);
    }
    const GrowthFit fit = fit_order_log(logs, fact, 2, 20);
    CHECK_FALSE(fit.degenerate);
    CHECK(fit.points_used == 19);
    CHECK(fit.sigma_hat == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(fit.log_H == doctest::Approx(std::log(3.0)).epsilon(1e-9));
    CHECK(fit.log_C == doctest::Approx(std::log(2.0)).epsilon(1e-8));
    CHECK(fit.rms <= 1e-10);
}

TEST_CASE("linear fit wrapper logs the values and skips zeros") {
    const MomentSequence fact = MomentSequence::factorial(16);
    std::vector<double> values(13);
    for (int n = 0; n <= 12; ++n) {
        values[static_cast<std::size_t>(n)] =
            2.0 * std::pow(3.0, n) * std::exp(1.5 * fact.log_value(n));
    }
    const GrowthFit a = fit_order(values, fact, 2, 12);
    CHECK(a.sigma_hat == doctest::Approx(1.5).epsilon(1e-9));

    values[5] = 0.0;  // dropped, not fitted as log 0
    const GrowthFit b = fit_order(values, fact, 2, 12);
    CHECK(b.points_used == a.points_used - 1);
    CHECK(b.sigma_hat == doctest::Approx(1.5).epsilon(1e-9));

    values[3] = -1.0;
    CHECK_THROWS_AS(fit_order(values, fact, 2, 12), std::invalid_argument);
}

TEST_CASE("rank deficient designs are reported, not fitted") {
    std::vector<double> logs(21);
    for (int n = 0; n <= 20; ++n) logs[static_cast<std::size_t>(n)] = 0.5 + 0.25 * n;
    // constant scale: log M identically zero
    const MomentSequence ones = MomentSequence::table(std::vector<double>(21, 1.0), 20);
    const GrowthFit flat = fit_order_log(logs, ones, 0, 20);
    CHECK(flat.degenerate);
    CHECK(flat.sigma_hat == 0.0);
    CHECK(flat.log_C == doctest::Approx(0.5 + 0.25 * 10.0));
    // geometric scale: log M collinear with n
    std::vector<double> pow2(21);
    for (int n = 0; n <= 20; ++n) pow2[static_cast<std::size_t>(n)] = std::ldexp(1.0, n);
    const MomentSequence geo = MomentSequence::table(pow2, 20);
    CHECK(fit_order_log(logs, geo, 0, 20).degenerate);
}

TEST_CASE("fit window validation") {
    const MomentSequence fact = MomentSequence::factorial(10);
    std::vector<double> logs(8, 1.0);
    CHECK_THROWS_AS(fit_order_log(logs, fact, 5, 3), std::invalid_argument);
    CHECK_THROWS_AS(fit_order_log(logs, fact, 0, 8), std::invalid_argument);
    CHECK_THROWS_AS(fit_order_log(logs, fact, -1, 5), std::invalid_argument);
    const MomentSequence low = MomentSequence::factorial(4);
    CHECK_THROWS_AS(fit_order_log(logs, low, 0, 7), std::out_of_range);
    // four usable points are not enough
    std::vector<double> sparse(12, -std::numeric_limits<double>::infinity());
    for (int n : {2, 4, 6, 8}) sparse[static_cast<std::size_t>(n)] = 1.0 * n;
    CHECK_THROWS_AS(fit_order_log(sparse, fact, 0, 10), std::invalid_argument);
}

TEST_CASE("certified growth verdict on the heat family") {
    const CauchyProblem p = heat_problem(80, 40, MomentSequence::factorial(84));
    const TimeSeries u = solve_variable(p);

    const OrderVerdict v = verify_theorem_order(p, u, 0.0, 0.05, true, 10, 40);
    CHECK(v.k1_inv == Rational(1));
    CHECK(v.residual <= 1e-9);
    CHECK_FALSE(v.fit.degenerate);
    CHECK(v.fit.n_lo == 10);
    CHECK(v.fit.n_hi == 40);
    CHECK(v.fit.sigma_hat == doctest::Approx(1.0230322716619356).epsilon(1e-13));
    CHECK(v.pass);

    // defaults pick the top three quarters, out-of-range endpoints clamp
    const OrderVerdict d = verify_theorem_order(p, u, 0.0, 0.05, true, 0, 0);
    CHECK(d.fit.n_lo == 10);
    CHECK(d.fit.n_hi == 40);
    CHECK(d.fit.sigma_hat == v.fit.sigma_hat);
    const OrderVerdict c = verify_theorem_order(p, u, 0.0, 0.05, true, 10, 999);
    CHECK(c.fit.n_hi == 40);

    // a collapsed window has fewer than 5 points
    CHECK_THROWS_AS(verify_theorem_order(p, u, 0.0, 0.05, true, 50, 0), std::invalid_argument);

    // residual certification gates the fit
    TimeSeries bad = u;
    bad.coefficient(3).at({1}) *= 1.0 + 1e-3;
    CHECK_THROWS_AS(verify_theorem_order(p, bad, 0.0, 0.05, true, 10, 40), std::domain_error);

    // a scale that cannot separate order from rate yields a failed verdict
    const CauchyProblem q = heat_problem(80, 40, MomentSequence::table(std::vector<double>(41, 1.0), 40));
    const OrderVerdict w = verify_theorem_order(q, u, 0.0, 0.05, false, 10, 40);
    CHECK(w.fit.degenerate);
    CHECK_FALSE(w.pass);
}
