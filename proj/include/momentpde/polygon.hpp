#pragma once

#include <string>
#include <utility>
#include <vector>

#include "momentpde/rational.hpp"
#include "momentpde/series.hpp"

namespace momentpde {

// t-power series coefficient a(t) = sum A_p t^p of one operator term,
// represented sparsely as (power, value) pairs sorted by power with nonzero
// values. ord() is the lowest stored power; the zero series reports ord as
// +infinity via has_terms() == false.
struct CoeffSeries {
    std::vector<std::pair<int, double>> powers;

    static CoeffSeries constant(double v);
    void normalize();  // sort, drop zeros; throws on negative powers or dups
    bool has_terms() const { return !powers.empty(); }
    int ord() const;             // throws when empty
    double at(int power) const;  // 0 when absent
    bool is_constant() const;    // single entry at power 0 (or empty)
};

// One term a_{j,alpha}(t) d_t^j d_z^alpha of the operator; the principal
// part d_t^K is implicit and never stored as a term.
struct OperatorTerm {
    int j = 0;
    MultiIndex alpha;
    CoeffSeries coeff;
};

// ord_t(a_{j,alpha}) >= max(0, j - K + 1) for every term, equivalently
// q_{j,alpha} = ord_t - j + K >= 1: the recursion in t is well founded.
bool check_condition_a(const std::vector<OperatorTerm>& terms, int K);

// 1/k_1 = max(0, max over terms of (s0 (j - K) + s . alpha) / q_{j,alpha}),
// exact rational arithmetic. Zero means no positive slope.
Rational k1_inverse(const std::vector<OperatorTerm>& terms, int K, const Rational& s0,
                    const std::vector<Rational>& s);

struct PolygonPoint {
    Rational x;
    std::int64_t y = 0;
    bool principal = false;
};

// The boundary of the convex hull of the union of quarter-planes
// {x <= a, y >= b}: a horizontal ray toward x = -infinity at the minimal y,
// the finite vertex chain with strictly increasing positive slopes, and a
// vertical ray toward y = +infinity at the maximal x.
struct NewtonPolygon {
    std::vector<PolygonPoint> points;    // all generating points
    std::vector<PolygonPoint> vertices;  // finite chain, x increasing
    std::vector<Rational> slopes;        // per chain segment, strictly increasing
    Rational k1_inv;                     // from the first chain segment; 0 if no segment
};

NewtonPolygon build_polygon(const std::vector<OperatorTerm>& terms, int K, const Rational& s0,
                            const std::vector<Rational>& s);

// Axis-aligned sketch of the polygon: generating points, vertex chain, and
// the two rays dashed.
std::string polygon_svg(const NewtonPolygon& polygon);

}  // namespace momentpde
