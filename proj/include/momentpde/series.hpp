#pragma once

#include <functional>
#include <vector>

namespace momentpde {

using MultiIndex = std::vector<int>;

int index_sum(const MultiIndex& alpha);

// Dense multivariate polynomial with inclusive per-axis degree caps.
// Storage is row-major with axis 0 fastest; that storage order is the fixed
// summation/iteration order used everywhere bit-reproducibility matters.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(MultiIndex caps);

    static constexpr int kMaxAxes = 3;
    static constexpr int kMaxDegree = 64;
    // Caps for estimator-scale runs exceed kMaxDegree deliberately on one
    // axis only; that path is validated at problem load, not here.
    static MultiPoly monomial(MultiIndex caps, const MultiIndex& alpha, double value);

    int axes() const { return static_cast<int>(caps_.size()); }
    const MultiIndex& caps() const { return caps_; }
    std::size_t size() const { return coeffs_.size(); }

    double at(const MultiIndex& alpha) const;
    double& at(const MultiIndex& alpha);
    const std::vector<double>& coefficients() const { return coeffs_; }
    std::vector<double>& coefficients() { return coeffs_; }

    bool same_shape(const MultiPoly& o) const { return caps_ == o.caps_; }
    bool is_zero() const;

    MultiPoly& operator+=(const MultiPoly& o);  // shapes must match
    MultiPoly& operator*=(double c);
    void add_scaled(const MultiPoly& o, double c);  // *this += c * o

    std::size_t flat_index(const MultiIndex& alpha) const;

    // Visits every index in storage order.
    void for_each(const std::function<void(const MultiIndex&, std::size_t)>& fn) const;

private:
    MultiIndex caps_;
    std::vector<std::size_t> strides_;
    std::vector<double> coeffs_;
};

// Iterates all multi-indices within caps in storage order without needing an
// instance.
void for_each_index(const MultiIndex& caps,
                    const std::function<void(const MultiIndex&, std::size_t)>& fn);

// Truncated series in t whose coefficients are spatial polynomials sharing a
// common shape. order() is the highest stored power of t.
class TimeSeries {
public:
    TimeSeries() = default;
    TimeSeries(MultiIndex spatial_caps, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const MultiIndex& spatial_caps() const { return spatial_caps_; }

    const MultiPoly& coefficient(int n) const;
    MultiPoly& coefficient(int n);

private:
    MultiIndex spatial_caps_;
    std::vector<MultiPoly> coeffs_;
};

}  // namespace momentpde
