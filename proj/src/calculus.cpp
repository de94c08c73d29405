#include "momentpde/calculus.hpp"

#include <cmath>
#include <stdexcept>

namespace momentpde {

namespace {

void check_axis(const MultiPoly& f, int axis, int times) {
    if (axis < 0 || axis >= f.axes()) throw std::invalid_argument("axis out of range");
    if (times < 0) throw std::invalid_argument("derivative order must be >= 0");
}

MultiPoly derivative_impl(const MultiPoly& f, const MomentSequence& m, int axis, int times,
                          bool keep_caps) {
    check_axis(f, axis, times);
    if (times == 0) return f;
    MultiIndex out_caps = f.caps();
    if (!keep_caps) {
        out_caps[static_cast<std::size_t>(axis)] -= times;
        if (out_caps[static_cast<std::size_t>(axis)] < 0) {
            throw std::invalid_argument("truncation exhausted by derivative");
        }
    }
    const int top_src = f.caps()[static_cast<std::size_t>(axis)];
    if (top_src > m.cap()) {
        throw std::out_of_range("sequence cap below required derivative shift");
    }
    MultiPoly out(out_caps);
    out.for_each([&](const MultiIndex& alpha, std::size_t flat) {
        const int a = alpha[static_cast<std::size_t>(axis)];
        if (a + times > top_src) return;  // exact-polynomial reading: zero
        MultiIndex src = alpha;
        src[static_cast<std::size_t>(axis)] = a + times;
        out.coefficients()[flat] = f.at(src) * m.log_ratio(a + times, a);
    });
    return out;
}

}  // namespace

MultiPoly moment_derivative_axis(const MultiPoly& f, const MomentSequence& m, int axis, int times) {
    return derivative_impl(f, m, axis, times, false);
}

MultiPoly moment_derivative_multi(const MultiPoly& f, const std::vector<MomentSequence>& m,
                                  const MultiIndex& alpha) {
    if (static_cast<int>(m.size()) != f.axes() || static_cast<int>(alpha.size()) != f.axes()) {
        throw std::invalid_argument("per-axis arity mismatch");
    }
    MultiPoly out = f;
    for (int axis = 0; axis < f.axes(); ++axis) {
        out = derivative_impl(out, m[static_cast<std::size_t>(axis)], axis,
                              alpha[static_cast<std::size_t>(axis)], false);
    }
    return out;
}

MultiPoly moment_derivative_axis_exact(const MultiPoly& f, const MomentSequence& m, int axis,
                                       int times) {
    return derivative_impl(f, m, axis, times, true);
}

MultiPoly moment_derivative_multi_exact(const MultiPoly& f, const std::vector<MomentSequence>& m,
                                        const MultiIndex& alpha) {
    if (static_cast<int>(m.size()) != f.axes() || static_cast<int>(alpha.size()) != f.axes()) {
        throw std::invalid_argument("per-axis arity mismatch");
    }
    MultiPoly out = f;
    for (int axis = 0; axis < f.axes(); ++axis) {
        out = derivative_impl(out, m[static_cast<std::size_t>(axis)], axis,
                              alpha[static_cast<std::size_t>(axis)], true);
    }
    return out;
}

TimeSeries moment_derivative_time(const TimeSeries& f, const MomentSequence& m0, int times) {
    if (times < 0) throw std::invalid_argument("derivative order must be >= 0");
    if (times > f.order()) throw std::invalid_argument("truncation exhausted by time derivative");
    if (f.order() > m0.cap()) throw std::out_of_range("time sequence cap below series order");
    TimeSeries out(f.spatial_caps(), f.order() - times);
    for (int n = 0; n <= out.order(); ++n) {
        out.coefficient(n) = f.coefficient(n + times);
        out.coefficient(n) *= m0.log_ratio(n + times, n);
    }
    return out;
}

TimeSeries moment_antiderivative_time(const TimeSeries& f, const MomentSequence& m0) {
    if (f.order() + 1 > m0.cap()) {
        throw std::out_of_range("time sequence cap below antiderivative order");
    }
    TimeSeries out(f.spatial_caps(), f.order() + 1);
    for (int n = 0; n <= f.order(); ++n) {
        out.coefficient(n + 1) = f.coefficient(n);
        out.coefficient(n + 1) *= m0.log_ratio(n, n + 1);
    }
    return out;
}

bool majorizes(const MultiPoly& g, const MultiPoly& f) {
    if (!g.same_shape(f)) throw std::invalid_argument("polynomial shape mismatch");
    for (double c : g.coefficients()) {
        if (c < 0.0) throw std::invalid_argument("majorant must have nonnegative coefficients");
    }
    const auto& gc = g.coefficients();
    const auto& fc = f.coefficients();
    for (std::size_t i = 0; i < gc.size(); ++i) {
        if (std::abs(fc[i]) > gc[i]) return false;
    }
    return true;
}

double eval(const MultiPoly& f, std::span<const double> z) {
    if (static_cast<int>(z.size()) != f.axes()) throw std::invalid_argument("point arity mismatch");
    // Horner over the last axis of blocks over the leading axes.
    const auto& caps = f.caps();
    const auto& c = f.coefficients();
    std::function<double(std::size_t, std::size_t, std::size_t)> rec =
        [&](std::size_t axis_count, std::size_t offset, std::size_t block) -> double {
        if (axis_count == 0) return c[offset];
        const std::size_t axis = axis_count - 1;
        const std::size_t sub = block / (static_cast<std::size_t>(caps[axis]) + 1);
        double acc = 0.0;
        for (int k = caps[axis]; k >= 0; --k) {
            acc = acc * z[axis] + rec(axis, offset + static_cast<std::size_t>(k) * sub, sub);
        }
        return acc;
    };
    return rec(static_cast<std::size_t>(f.axes()), 0, f.size());
}

double coefficient_norm(const MultiPoly& f, double r) {
    if (r < 0.0) throw std::invalid_argument("radius must be >= 0");
    int degree_budget = 0;
    for (int c : f.caps()) degree_budget += c;
    std::vector<double> rpow(static_cast<std::size_t>(degree_budget) + 1, 1.0);
    for (std::size_t k = 1; k < rpow.size(); ++k) rpow[k] = rpow[k - 1] * r;
    double acc = 0.0;
    f.for_each([&](const MultiIndex& alpha, std::size_t flat) {
        acc += std::abs(f.coefficients()[flat]) * rpow[static_cast<std::size_t>(index_sum(alpha))];
    });
    return acc;
}

MultiPoly geometric_majorant(const MultiIndex& caps, double C, double D) {
    if (!(C >= 0.0) || !(D >= 0.0)) throw std::invalid_argument("majorant needs C, D >= 0");
    MultiPoly g(caps);
    g.for_each([&](const MultiIndex& alpha, std::size_t flat) {
        g.coefficients()[flat] = C * std::pow(D, index_sum(alpha));
    });
    return g;
}

}  // namespace momentpde
