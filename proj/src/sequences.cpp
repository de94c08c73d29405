#include "momentpde/sequences.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace momentpde {

std::string family_name(SequenceFamily f) {
    switch (f) {
        case SequenceFamily::factorial: return "factorial";
        case SequenceFamily::gevrey: return "gevrey";
        case SequenceFamily::gevrey_log: return "gevrey_log";
        case SequenceFamily::q_factorial: return "q_factorial";
        case SequenceFamily::parity_factorial: return "parity_factorial";
        case SequenceFamily::table: return "table";
    }
    return "?";
}

std::string SequenceSpec::describe() const {
    switch (family) {
        case SequenceFamily::gevrey: return "gevrey(s=" + std::to_string(s) + ")";
        case SequenceFamily::gevrey_log:
            return "gevrey_log(s=" + std::to_string(s) + ",p=" + std::to_string(p) + ")";
        case SequenceFamily::q_factorial: return "q_factorial(q=" + std::to_string(q) + ")";
        default: return family_name(family);
    }
}

namespace {

// log(m(n)/m(n-1)) for n >= 1; each family's ratio has a closed form that is
// stable to evaluate directly in log space.
double log_step(const SequenceSpec& spec, int n) {
    switch (spec.family) {
        case SequenceFamily::factorial:
            return std::log(static_cast<double>(n));
        case SequenceFamily::gevrey:
            return std::lgamma(1.0 + spec.s * n) - std::lgamma(1.0 + spec.s * (n - 1));
        case SequenceFamily::gevrey_log:
            return std::lgamma(1.0 + spec.s * n) - std::lgamma(1.0 + spec.s * (n - 1)) +
                   spec.p * std::log(std::log(std::numbers::e + n));
        case SequenceFamily::q_factorial:
            // log [n]_q = log(1 - q^n) - log(1 - q)
            return std::log1p(-std::pow(spec.q, n)) - std::log1p(-spec.q);
        case SequenceFamily::parity_factorial:
            if (n % 2 == 1) return 0.0;
            return std::log(static_cast<double>(n)) + std::log(static_cast<double>(n - 1));
        case SequenceFamily::table:
            return std::log(spec.values[static_cast<std::size_t>(n)]) -
                   std::log(spec.values[static_cast<std::size_t>(n - 1)]);
    }
    return 0.0;
}

void validate(const SequenceSpec& spec) {
    if (spec.n_cap < 1) throw std::invalid_argument("sequence cap must be >= 1");
    switch (spec.family) {
        case SequenceFamily::gevrey:
            if (!(spec.s > 0.0)) throw std::invalid_argument("gevrey requires s > 0");
            break;
        case SequenceFamily::gevrey_log:
            if (!(spec.s > 0.0)) throw std::invalid_argument("gevrey_log requires s > 0");
            if (!(spec.p >= 0.0)) throw std::invalid_argument("gevrey_log requires p >= 0");
            break;
        case SequenceFamily::q_factorial:
            if (!(spec.q > 0.0 && spec.q < 1.0)) {
                throw std::invalid_argument("q_factorial requires 0 < q < 1");
            }
            break;
        case SequenceFamily::table:
            if (spec.values.size() < static_cast<std::size_t>(spec.n_cap) + 1) {
                throw std::invalid_argument("table shorter than cap + 1");
            }
            for (double v : spec.values) {
                if (!(v > 0.0) || !std::isfinite(v)) {
                    throw std::invalid_argument("table values must be positive and finite");
                }
            }
            break;
        default:
            break;
    }
}

}  // namespace

MomentSequence MomentSequence::make(const SequenceSpec& spec) {
    validate(spec);
    std::vector<double> logs(static_cast<std::size_t>(spec.n_cap) + 1);
    logs[0] = spec.family == SequenceFamily::table ? std::log(spec.values[0]) : 0.0;
    for (int n = 1; n <= spec.n_cap; ++n) {
        logs[static_cast<std::size_t>(n)] = logs[static_cast<std::size_t>(n - 1)] + log_step(spec, n);
    }
    return MomentSequence(spec, std::move(logs));
}

MomentSequence MomentSequence::factorial(int n_cap) {
    return make({.family = SequenceFamily::factorial, .values = {}, .n_cap = n_cap});
}

MomentSequence MomentSequence::gevrey(double s, int n_cap) {
    return make({.family = SequenceFamily::gevrey, .s = s, .values = {}, .n_cap = n_cap});
}

MomentSequence MomentSequence::gevrey_log(double s, double p, int n_cap) {
    return make({.family = SequenceFamily::gevrey_log, .s = s, .p = p, .values = {}, .n_cap = n_cap});
}

MomentSequence MomentSequence::q_factorial(double q, int n_cap) {
    return make({.family = SequenceFamily::q_factorial, .q = q, .values = {}, .n_cap = n_cap});
}

MomentSequence MomentSequence::parity_factorial(int n_cap) {
    return make({.family = SequenceFamily::parity_factorial, .values = {}, .n_cap = n_cap});
}

MomentSequence MomentSequence::table(std::vector<double> values, int n_cap) {
    return make({.family = SequenceFamily::table, .values = std::move(values), .n_cap = n_cap});
}

double MomentSequence::log_value(int n) const {
    if (n < 0 || n > cap()) {
        throw std::out_of_range("sequence index " + std::to_string(n) + " beyond cap " +
                                std::to_string(cap()));
    }
    return log_values_[static_cast<std::size_t>(n)];
}

double MomentSequence::value(int n) const {
    const double lv = log_value(n);
    const double v = std::exp(lv);
    if (!std::isfinite(v)) {
        throw std::overflow_error("sequence value at n=" + std::to_string(n) +
                                  " exceeds linear range (log = " + std::to_string(lv) + ")");
    }
    return v;
}

double MomentSequence::ratio(int n) const {
    if (n < 1) throw std::out_of_range("ratio needs n >= 1");
    return log_ratio(n, n - 1);
}

double MomentSequence::log_ratio(int a, int b) const {
    const double v = std::exp(log_value(a) - log_value(b));
    if (!std::isfinite(v)) throw std::overflow_error("sequence ratio exceeds linear range");
    return v;
}

}  // namespace momentpde
