#include "momentpde/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace momentpde {

CoeffSeries CoeffSeries::constant(double v) {
    CoeffSeries c;
    if (v != 0.0) c.powers.emplace_back(0, v);
    return c;
}

void CoeffSeries::normalize() {
    std::erase_if(powers, [](const auto& pv) { return pv.second == 0.0; });
    std::sort(powers.begin(), powers.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < powers.size(); ++i) {
        if (powers[i].first < 0) throw std::invalid_argument("negative t-power in coefficient");
        if (i > 0 && powers[i].first == powers[i - 1].first) {
            throw std::invalid_argument("duplicate t-power in coefficient");
        }
    }
}

int CoeffSeries::ord() const {
    if (powers.empty()) throw std::logic_error("order of the zero coefficient");
    return powers.front().first;
}

double CoeffSeries::at(int power) const {
    for (const auto& [p, v] : powers) {
        if (p == power) return v;
    }
    return 0.0;
}

bool CoeffSeries::is_constant() const {
    return powers.empty() || (powers.size() == 1 && powers.front().first == 0);
}

bool check_condition_a(const std::vector<OperatorTerm>& terms, int K) {
    if (K < 1) throw std::invalid_argument("operator needs K >= 1");
    for (const auto& t : terms) {
        if (!t.coeff.has_terms()) continue;
        if (t.coeff.ord() < std::max(0, t.j - K + 1)) return false;
    }
    return true;
}

namespace {

int q_of(const OperatorTerm& t, int K) { return t.coeff.ord() - t.j + K; }

Rational dot(const std::vector<Rational>& s, const MultiIndex& alpha) {
    if (s.size() != alpha.size()) throw std::invalid_argument("order arity mismatch");
    Rational acc(0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        acc = acc + s[i] * Rational(alpha[i]);
    }
    return acc;
}

}  // namespace

Rational k1_inverse(const std::vector<OperatorTerm>& terms, int K, const Rational& s0,
                    const std::vector<Rational>& s) {
    if (!check_condition_a(terms, K)) {
        throw std::domain_error("operator violates the t-order condition");
    }
    Rational best(0);
    for (const auto& t : terms) {
        if (!t.coeff.has_terms()) continue;
        const Rational cand =
            (s0 * Rational(t.j - K) + dot(s, t.alpha)) / Rational(q_of(t, K));
        if (cand > best) best = cand;
    }
    return best;
}

NewtonPolygon build_polygon(const std::vector<OperatorTerm>& terms, int K, const Rational& s0,
                            const std::vector<Rational>& s) {
    if (K < 1) throw std::invalid_argument("operator needs K >= 1");
    NewtonPolygon poly;
    poly.points.push_back({s0 * Rational(K), -static_cast<std::int64_t>(K), true});
    for (const auto& t : terms) {
        if (!t.coeff.has_terms()) continue;
        poly.points.push_back(
            {s0 * Rational(t.j) + dot(s, t.alpha), static_cast<std::int64_t>(t.coeff.ord() - t.j),
             false});
    }

    // Staircase corners: sort by x ascending keeping only the minimal y per
    // x, then sweep right-to-left keeping points strictly below everything
    // further right. Corners end up with x and y both strictly increasing.
    std::vector<PolygonPoint> sorted = poly.points;
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    std::vector<PolygonPoint> dedup;
    for (const auto& p : sorted) {
        if (dedup.empty() || p.x != dedup.back().x) dedup.push_back(p);
    }
    std::vector<PolygonPoint> corners;
    for (auto it = dedup.rbegin(); it != dedup.rend(); ++it) {
        if (corners.empty() || it->y < corners.back().y) corners.push_back(*it);
    }
    std::reverse(corners.begin(), corners.end());

    // Convex sweep: keep strictly increasing slopes, drop collinear middles.
    for (const auto& p : corners) {
        while (poly.vertices.size() >= 2) {
            const auto& a = poly.vertices[poly.vertices.size() - 2];
            const auto& b = poly.vertices.back();
            const Rational cross = (b.x - a.x) * Rational(p.y - b.y) -
                                   Rational(b.y - a.y) * (p.x - b.x);
            if (cross <= Rational(0)) {
                poly.vertices.pop_back();
            } else {
                break;
            }
        }
        poly.vertices.push_back(p);
    }

    for (std::size_t i = 1; i < poly.vertices.size(); ++i) {
        const auto& a = poly.vertices[i - 1];
        const auto& b = poly.vertices[i];
        poly.slopes.push_back(Rational(b.y - a.y) / (b.x - a.x));
    }
    poly.k1_inv = poly.slopes.empty() ? Rational(0) : Rational(1) / poly.slopes.front();
    return poly;
}

std::string polygon_svg(const NewtonPolygon& polygon) {
    // Data bounds in doubles; exactness does not matter for the sketch.
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (const auto& p : polygon.points) {
        const double x = p.x.to_double();
        const double y = static_cast<double>(p.y);
        if (first) {
            xmin = xmax = x;
            ymin = ymax = y;
            first = false;
        }
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    const double pad = 1.0;
    xmin -= pad;
    ymin -= pad;
    xmax += pad;
    ymax += pad;
    const double w = 420.0, h = 420.0;
    const auto X = [&](double x) { return 20.0 + (x - xmin) / (xmax - xmin) * (w - 40.0); };
    const auto Y = [&](double y) { return h - 20.0 - (y - ymin) / (ymax - ymin) * (h - 40.0); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    os << "<line x1=\"" << X(xmin) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(xmax) << "\" y2=\""
       << Y(0) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(ymin) << "\" x2=\"" << X(0) << "\" y2=\""
       << Y(ymax) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    if (!polygon.vertices.empty()) {
        const auto& lo = polygon.vertices.front();
        const auto& hi = polygon.vertices.back();
        os << "<line x1=\"" << X(xmin) << "\" y1=\"" << Y(static_cast<double>(lo.y)) << "\" x2=\""
           << X(lo.x.to_double()) << "\" y2=\"" << Y(static_cast<double>(lo.y))
           << "\" stroke=\"#c33\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
        os << "<line x1=\"" << X(hi.x.to_double()) << "\" y1=\"" << Y(static_cast<double>(hi.y))
           << "\" x2=\"" << X(hi.x.to_double()) << "\" y2=\"" << Y(ymax)
           << "\" stroke=\"#c33\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
        os << "<polyline fill=\"none\" stroke=\"#c33\" stroke-width=\"2\" points=\"";
        for (const auto& v : polygon.vertices) {
            os << X(v.x.to_double()) << "," << Y(static_cast<double>(v.y)) << " ";
        }
        os << "\"/>\n";
    }
    for (const auto& p : polygon.points) {
        os << "<circle cx=\"" << X(p.x.to_double()) << "\" cy=\"" << Y(static_cast<double>(p.y))
           << "\" r=\"4\" fill=\"" << (p.principal ? "#06c" : "#333") << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace momentpde
