#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "momentpde/calculus.hpp"
#include "momentpde/solver.hpp"

using namespace momentpde;

namespace {

OperatorTerm term(int j, MultiIndex alpha, CoeffSeries c) {
    OperatorTerm t;
    t.j = j;
    t.alpha = std::move(alpha);
    t.coeff = std::move(c);
    return t;
}

// d_t u = d_z^2 u with the unit geometric datum.
CauchyProblem heat_problem(int cap, int n_t) {
    const MultiIndex caps = {cap};
    const int seq = std::max(cap, n_t) + 4;
    return CauchyProblem{1,
                         1,
                         caps,
                         {term(0, {2}, CoeffSeries::constant(-1.0))},
                         MomentSequence::factorial(seq),
                         {MomentSequence::factorial(seq)},
                         MomentSequence::factorial(seq),
                         Rational(1),
                         {Rational(1)},
                         {geometric_majorant(caps, 1.0, 1.0)},
                         TimeSeries(caps, 0),
                         ForcingConvention::direct,
                         n_t};
}

long double rising(int from, int upto) {  // from * (from+1) * .. * upto
    long double r = 1.0L;
    for (int i = from; i <= upto; ++i) r *= i;
    return r;
}

}  // namespace

TEST_CASE("heat coefficients follow the double factorial quotient") {
    const CauchyProblem p = heat_problem(24, 10);
    const TimeSeries u = solve_variable(p);
    REQUIRE(u.order() == 10);
    // datum passes through untouched at order zero
    for (int k = 0; k <= 24; ++k) CHECK(u.coefficient(0).at({k}) == 1.0);
    // t-coefficient n at z = 0 is (2n)!/n!
    for (int n = 0; n <= 10; ++n) {
        const double want = static_cast<double>(rising(n + 1, 2 * n));
        CHECK(u.coefficient(n).at({0}) == doctest::Approx(want).epsilon(1e-12));
    }
    // interior entries are (j+2n)!/(j! n!)
    CHECK(u.coefficient(1).at({2}) == doctest::Approx(12.0).epsilon(1e-12));
    CHECK(u.coefficient(2).at({1}) == doctest::Approx(60.0).epsilon(1e-12));
    const ResidualReport rep = residual(p, u);
    CHECK(rep.orders_checked == 10);
    CHECK(rep.equation <= 1e-12);
    CHECK(rep.initial <= 1e-14);
}

TEST_CASE("bracket time scale divides the coefficients") {
    const MultiIndex caps = {12};
    const CauchyProblem p{1,
                          1,
                          caps,
                          {term(0, {2}, CoeffSeries::constant(-1.0))},
                          MomentSequence::q_factorial(0.5, 16),
                          {MomentSequence::factorial(16)},
                          MomentSequence::factorial(16),
                          Rational(0),
                          {Rational(1)},
                          {geometric_majorant(caps, 1.0, 1.0)},
                          TimeSeries(caps, 0),
                          ForcingConvention::direct,
                          8};
    const TimeSeries u = solve_variable(p);
    // [1]_q = 1 and [2]_q = 1.5, so the first orders are 2 and 4!/1.5
    CHECK(u.coefficient(1).at({0}) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(u.coefficient(2).at({0}) == doctest::Approx(16.0).epsilon(1e-13));
    CHECK(residual(p, u).max() <= 1e-12);
}

TEST_CASE("second order principal part interleaves zero orders") {
    const MultiIndex caps = {12};
    const CauchyProblem p{1,
                          2,
                          caps,
                          {term(0, {2}, CoeffSeries::constant(-1.0))},
                          MomentSequence::factorial(16),
                          {MomentSequence::factorial(16)},
                          MomentSequence::factorial(16),
                          Rational(1),
                          {Rational(1)},
                          {geometric_majorant(caps, 1.0, 1.0), MultiPoly(caps)},
                          TimeSeries(caps, 0),
                          ForcingConvention::direct,
                          8};
    const TimeSeries u = solve_variable(p);
    // zero velocity keeps every odd order empty; at z = 0 the even orders are 1
    CHECK(u.coefficient(1).is_zero());
    CHECK(u.coefficient(3).is_zero());
    CHECK(u.coefficient(2).at({0}) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(u.coefficient(4).at({0}) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(residual(p, u).max() <= 1e-12);
}

TEST_CASE("gn recursion reproduces the closed powers") {
    const MultiIndex caps = {10};
    // K = 1 heat symbol: P_1 = zeta^2, so g_i = zeta^{2i}
    const GnFamily f1 = gn_polynomials({MultiPoly::monomial(caps, {2}, 1.0)}, 1, 4);
    REQUIRE(f1.g.size() == 5);
    CHECK(f1.g[0].at({0}) == 1.0);
    CHECK(f1.g[2].at({4}) == 1.0);
    CHECK(f1.g[4].at({8}) == 1.0);
    // only the single monomial survives in each
    for (const auto& g : f1.g) {
        int nonzero = 0;
        for (double c : g.coefficients()) nonzero += (c != 0.0);
        CHECK(nonzero == 1);
    }
    // K = 2 wave symbol: P_1 = 0, P_2 = zeta^2 gives the odd powers
    const GnFamily f2 =
        gn_polynomials({MultiPoly(caps), MultiPoly::monomial(caps, {2}, 1.0)}, 2, 6);
    CHECK(f2.g[0].is_zero());
    CHECK(f2.g[1].at({0}) == 1.0);
    CHECK(f2.g[2].is_zero());
    CHECK(f2.g[3].at({2}) == 1.0);
    CHECK(f2.g[4].is_zero());
    CHECK(f2.g[5].at({4}) == 1.0);
    // monomials pushed beyond the caps annihilate
    const GnFamily capped = gn_polynomials({MultiPoly::monomial({3}, {2}, 1.0)}, 1, 2);
    CHECK(capped.g[1].at({2}) == 1.0);
    CHECK(capped.g[2].is_zero());
}

TEST_CASE("constant path closed form for forced zero data") {
    const MultiIndex caps = {16};
    TimeSeries forcing(caps, 0);
    forcing.coefficient(0) = geometric_majorant(caps, 1.0, 1.0);
    const CauchyProblem p{1,
                          1,
                          caps,
                          {term(0, {2}, CoeffSeries::constant(-1.0))},
                          MomentSequence::factorial(24),
                          {MomentSequence::factorial(24)},
                          MomentSequence::factorial(24),
                          Rational(1),
                          {Rational(1)},
                          {MultiPoly(caps)},
                          forcing,
                          ForcingConvention::direct,
                          8};
    const TimeSeries uc = solve_constant(p);
    // t-coefficient n at z = 0 is (2n-2)!/n! for n >= 1
    CHECK(uc.coefficient(0).is_zero());
    CHECK(uc.coefficient(1).at({0}) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(uc.coefficient(2).at({0}) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(uc.coefficient(3).at({0}) == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(uc.coefficient(4).at({0}) == doctest::Approx(30.0).epsilon(1e-13));

    const TimeSeries uv = solve_variable(p);
    CHECK(solution_distance(uv, uc) <= 1e-12);
    CHECK(residual(p, uc).max() <= 1e-10);
    CHECK(residual(p, uv).max() <= 1e-10);
}

TEST_CASE("numerator convention divides the stored forcing by the time scale") {
    const MultiIndex caps = {10};
    TimeSeries stored(caps, 2);
    stored.coefficient(2) = geometric_majorant(caps, 1.0, 0.5);
    TimeSeries halved(caps, 2);
    halved.coefficient(2) = geometric_majorant(caps, 1.0, 0.5);
    halved.coefficient(2) *= 0.5;  // m0(2) = 2 for the factorial scale

    CauchyProblem p{1,
                    1,
                    caps,
                    {term(0, {2}, CoeffSeries::constant(-1.0))},
                    MomentSequence::factorial(16),
                    {MomentSequence::factorial(16)},
                    MomentSequence::factorial(16),
                    Rational(1),
                    {Rational(1)},
                    {MultiPoly(caps)},
                    stored,
                    ForcingConvention::numerator,
                    8};
    const TimeSeries un = solve_variable(p);
    p.forcing = halved;
    p.convention = ForcingConvention::direct;
    const TimeSeries ud = solve_variable(p);
    CHECK(solution_distance(un, ud) <= 1e-15);
}

TEST_CASE("constant path preconditions") {
    CauchyProblem p = heat_problem(12, 6);
    CHECK_THROWS_AS(solve_constant(p), std::invalid_argument);  // nonzero datum
    p.initial = {MultiPoly(p.caps)};
    CHECK_NOTHROW(solve_constant(p));
    CoeffSeries linear;
    linear.powers = {{1, -1.0}};
    p.terms = {term(0, {2}, linear)};
    CHECK_THROWS_AS(solve_constant(p), std::invalid_argument);  // t-dependent coefficient
}

TEST_CASE("validate rejects malformed problems") {
    CauchyProblem p = heat_problem(12, 6);
    CHECK_NOTHROW(p.validate());
    {
        CauchyProblem bad = p;
        bad.initial.clear();
        CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    }
    {
        CauchyProblem bad = p;
        bad.initial = {geometric_majorant({8}, 1.0, 1.0)};
        CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    }
    {
        CauchyProblem bad = p;
        bad.m0 = MomentSequence::factorial(4);  // below time order
        CHECK_THROWS_AS(bad.validate(), std::out_of_range);
    }
    {
        CauchyProblem bad = p;
        bad.terms = {term(1, {1}, CoeffSeries::constant(1.0))};  // needs ord >= 1
        CHECK_THROWS_AS(bad.validate(), std::domain_error);
    }
}

TEST_CASE("perturbed solutions fail the residual certificate") {
    const CauchyProblem p = heat_problem(24, 10);
    const TimeSeries u = solve_variable(p);
    TimeSeries v = u;
    v.coefficient(5).at({3}) *= 1.0 + 1e-3;
    CHECK(residual(p, v).max() > 1e-5);
    TimeSeries w = u;
    CHECK_THROWS_AS(residual(heat_problem(24, 12), w), std::invalid_argument);
}

TEST_CASE("runaway coefficient growth is reported with its order") {
    const CauchyProblem p = heat_problem(400, 200);
    try {
        solve_variable(p);
        FAIL("expected overflow");
    } catch (const std::overflow_error& e) {
        CHECK(std::string(e.what()).find("t-order") != std::string::npos);
    }
}

TEST_CASE("solution distance gauges per order") {
    TimeSeries a({1}, 1), b({1}, 1);
    a.coefficient(0).at({0}) = 2.0;
    b.coefficient(0).at({0}) = 1.0;
    a.coefficient(1).at({1}) = 4.0;
    b.coefficient(1).at({1}) = 4.0;
    CHECK(solution_distance(a, b) == doctest::Approx(0.5));
    CHECK(solution_distance(a, a) == 0.0);
    TimeSeries c({2}, 1);
    CHECK_THROWS_AS(solution_distance(a, c), std::invalid_argument);
}
