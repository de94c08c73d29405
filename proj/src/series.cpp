#include "momentpde/series.hpp"

#include <stdexcept>
#include <string>

namespace momentpde {

int index_sum(const MultiIndex& alpha) {
    int s = 0;
    for (int a : alpha) s += a;
    return s;
}

MultiPoly::MultiPoly(MultiIndex caps) : caps_(std::move(caps)) {
    if (caps_.empty() || caps_.size() > kMaxAxes) {
        throw std::invalid_argument("polynomial needs 1..3 axes");
    }
    std::size_t total = 1;
    strides_.resize(caps_.size());
    for (std::size_t i = 0; i < caps_.size(); ++i) {
        if (caps_[i] < 0) throw std::invalid_argument("negative degree cap");
        strides_[i] = total;
        total *= static_cast<std::size_t>(caps_[i]) + 1;
    }
    coeffs_.assign(total, 0.0);
}

MultiPoly MultiPoly::monomial(MultiIndex caps, const MultiIndex& alpha, double value) {
    MultiPoly p(std::move(caps));
    p.at(alpha) = value;
    return p;
}

std::size_t MultiPoly::flat_index(const MultiIndex& alpha) const {
    if (alpha.size() != caps_.size()) throw std::invalid_argument("index arity mismatch");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0 || alpha[i] > caps_[i]) {
            throw std::out_of_range("index component " + std::to_string(alpha[i]) +
                                    " outside cap " + std::to_string(caps_[i]));
        }
        idx += static_cast<std::size_t>(alpha[i]) * strides_[i];
    }
    return idx;
}

double MultiPoly::at(const MultiIndex& alpha) const { return coeffs_[flat_index(alpha)]; }

double& MultiPoly::at(const MultiIndex& alpha) { return coeffs_[flat_index(alpha)]; }

bool MultiPoly::is_zero() const {
    for (double c : coeffs_) {
        if (c != 0.0) return false;
    }
    return true;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (!same_shape(o)) throw std::invalid_argument("polynomial shape mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

MultiPoly& MultiPoly::operator*=(double c) {
    for (double& v : coeffs_) v *= c;
    return *this;
}

void MultiPoly::add_scaled(const MultiPoly& o, double c) {
    if (!same_shape(o)) throw std::invalid_argument("polynomial shape mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += c * o.coeffs_[i];
}

void MultiPoly::for_each(const std::function<void(const MultiIndex&, std::size_t)>& fn) const {
    for_each_index(caps_, fn);
}

void for_each_index(const MultiIndex& caps,
                    const std::function<void(const MultiIndex&, std::size_t)>& fn) {
    MultiIndex alpha(caps.size(), 0);
    std::size_t flat = 0;
    for (;;) {
        fn(alpha, flat);
        ++flat;
        std::size_t axis = 0;
        while (axis < caps.size()) {
            if (alpha[axis] < caps[axis]) {
                ++alpha[axis];
                break;
            }
            alpha[axis] = 0;
            ++axis;
        }
        if (axis == caps.size()) return;
    }
}

TimeSeries::TimeSeries(MultiIndex spatial_caps, int order) : spatial_caps_(std::move(spatial_caps)) {
    if (order < 0) throw std::invalid_argument("time order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, MultiPoly(spatial_caps_));
}

const MultiPoly& TimeSeries::coefficient(int n) const {
    if (n < 0 || n > order()) throw std::out_of_range("time order beyond truncation");
    return coeffs_[static_cast<std::size_t>(n)];
}

MultiPoly& TimeSeries::coefficient(int n) {
    if (n < 0 || n > order()) throw std::out_of_range("time order beyond truncation");
    return coeffs_[static_cast<std::size_t>(n)];
}

}  // namespace momentpde
