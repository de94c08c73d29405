#pragma once

#include <string>
#include <vector>

namespace momentpde {

// Built-in moment sequence families. Every built-in has m(0) = 1; table
// sequences carry arbitrary positive user values.
enum class SequenceFamily {
    factorial,         // n!
    gevrey,            // Gamma(1 + s*n), s > 0
    gevrey_log,        // Gamma(1 + s*n) * prod_{j=0..n} log^p(e + j)
    q_factorial,       // [n]_q! with [n]_q = (1 - q^n)/(1 - q), 0 < q < 1
    parity_factorial,  // n! for even n, (n-1)! for odd n
    table,             // explicit positive values
};

std::string family_name(SequenceFamily f);

struct SequenceSpec {
    SequenceFamily family = SequenceFamily::factorial;
    double s = 0.0;              // gevrey, gevrey_log
    double p = 0.0;              // gevrey_log
    double q = 0.0;              // q_factorial
    std::vector<double> values;  // table
    int n_cap = kDefaultCap;

    static constexpr int kDefaultCap = 64;

    std::string describe() const;
};

// A moment sequence evaluated on 0..cap. Values live in log space, built by
// the per-family log-ratio recurrence; linear values are materialized on
// demand and refuse to overflow silently.
class MomentSequence {
public:
    static MomentSequence make(const SequenceSpec& spec);

    static MomentSequence factorial(int n_cap = SequenceSpec::kDefaultCap);
    static MomentSequence gevrey(double s, int n_cap = SequenceSpec::kDefaultCap);
    static MomentSequence gevrey_log(double s, double p, int n_cap = SequenceSpec::kDefaultCap);
    static MomentSequence q_factorial(double q, int n_cap = SequenceSpec::kDefaultCap);
    static MomentSequence parity_factorial(int n_cap = SequenceSpec::kDefaultCap);
    static MomentSequence table(std::vector<double> values, int n_cap);

    const SequenceSpec& spec() const { return spec_; }
    int cap() const { return static_cast<int>(log_values_.size()) - 1; }

    // log m(n); throws std::out_of_range beyond cap.
    double log_value(int n) const;
    // m(n); throws std::overflow_error when exp(log m(n)) is not finite.
    double value(int n) const;
    // m(n)/m(n-1), n >= 1, evaluated as exp of the log difference.
    double ratio(int n) const;
    // exp(log m(a) - log m(b)); the only sanctioned way to form m(a)/m(b).
    double log_ratio(int a, int b) const;

private:
    MomentSequence(SequenceSpec spec, std::vector<double> log_values)
        : spec_(std::move(spec)), log_values_(std::move(log_values)) {}

    SequenceSpec spec_;
    std::vector<double> log_values_;
};

}  // namespace momentpde
