#include "momentpde/sequence_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace momentpde {

namespace {

void require_range(const MomentSequence& M, int n_max, const char* who) {
    if (n_max < 1) throw std::invalid_argument(std::string(who) + ": n_max must be >= 1");
    if (n_max > M.cap()) {
        throw std::out_of_range(std::string(who) + ": n_max " + std::to_string(n_max) +
                                " beyond sequence cap " + std::to_string(M.cap()));
    }
}

// Extreme of (M_{n+k}/(M_n M_k))^{1/(n+k)} over the grid 1 <= n+k <= n_max.
double grid_extreme(const MomentSequence& M, int n_max, bool want_max) {
    double best = want_max ? -std::numeric_limits<double>::infinity()
                           : std::numeric_limits<double>::infinity();
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; n + k <= n_max; ++k) {
            if (n + k == 0) continue;
            const double q =
                (M.log_value(n + k) - M.log_value(n) - M.log_value(k)) / (n + k);
            best = want_max ? std::max(best, q) : std::min(best, q);
        }
    }
    return std::exp(best);
}

}  // namespace

PropertyWitness check_lc(const MomentSequence& M, int n_max) {
    require_range(M, n_max, "check_lc");
    if (n_max + 1 > M.cap()) {
        throw std::out_of_range("check_lc: needs M up to n_max + 1");
    }
    PropertyWitness w{SequenceProperty::lc, n_max, true, 0.0, std::nullopt};
    for (int n = 1; n <= n_max; ++n) {
        const double margin =
            M.log_value(n - 1) + M.log_value(n + 1) - 2.0 * M.log_value(n);
        if (margin < -kLogEps) {
            w.holds = false;
            w.first_failure = std::make_pair(n, n);
            break;
        }
    }
    return w;
}

PropertyWitness mg_witness(const MomentSequence& M, int n_max) {
    require_range(M, n_max, "mg_witness");
    return {SequenceProperty::mg, n_max, true, grid_extreme(M, n_max, true), std::nullopt};
}

PropertyWitness star_witness(const MomentSequence& M, int n_max) {
    require_range(M, n_max, "star_witness");
    return {SequenceProperty::star, n_max, true, grid_extreme(M, n_max, false), std::nullopt};
}

OrderWitness order_witness(const MomentSequence& m, const MomentSequence& M, double s, int n_max) {
    require_range(m, n_max, "order_witness");
    require_range(M, n_max, "order_witness");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int n = 1; n <= n_max; ++n) {
        const double q = (m.log_value(n) - s * M.log_value(n)) / n;
        lo = std::min(lo, q);
        hi = std::max(hi, q);
    }
    return {OrderKind::plain, s, n_max, std::exp(lo), std::exp(hi), false};
}

OrderWitness regularity_witness(const MomentSequence& m, const MomentSequence& M, double s,
                                int n_max) {
    require_range(m, n_max, "regularity_witness");
    require_range(M, n_max, "regularity_witness");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    int last_new_min = 1;
    for (int n = 1; n <= n_max; ++n) {
        const double q = (m.log_value(n) - m.log_value(n - 1)) -
                         s * (M.log_value(n) - M.log_value(n - 1));
        if (q < lo - kLogEps) last_new_min = n;
        lo = std::min(lo, q);
        hi = std::max(hi, q);
    }
    OrderWitness w{OrderKind::regular, s, n_max, std::exp(lo), std::exp(hi), false};
    w.degenerate_lower = last_new_min > (3 * n_max) / 4;
    return w;
}

namespace {

struct SuiteBuilder {
    const MomentSequence& M;
    int n_max;
    double logB;
    double logb;
    bool lc_ok;
    std::vector<LemmaCheck> out;

    double L(int n) const { return M.log_value(n); }

    void skipped(const std::string& id, const std::string& why) {
        out.push_back({id, false, false, why});
    }

    // fail_at: empty string means passed.
    void record(const std::string& id, const std::string& fail_at, const std::string& constants) {
        if (fail_at.empty()) {
            out.push_back({id, true, true, constants});
        } else {
            out.push_back({id, true, false, "first failure at " + fail_at + "; " + constants});
        }
    }

    void quotient_power() {
        if (!lc_ok) return skipped("quotient_power", "requires lc");
        for (int n = 1; n <= n_max; ++n) {
            for (int p = 1; p <= n; ++p) {
                if (L(n) - L(n - p) > p * (L(n) - L(n - 1)) + kLogEps) {
                    return record("quotient_power",
                                  "n=" + std::to_string(n) + ",p=" + std::to_string(p), "");
                }
            }
        }
        record("quotient_power", "", "");
    }

    void power_subadditive() {
        if (!lc_ok) return skipped("power_subadditive", "requires lc");
        for (int d = 0; d <= n_max; ++d) {
            for (int n = 0; n <= n_max && d * n <= n_max; ++n) {
                if (d * L(n) > L(d * n) + kLogEps) {
                    return record("power_subadditive",
                                  "d=" + std::to_string(d) + ",n=" + std::to_string(n), "");
                }
            }
        }
        record("power_subadditive", "", "");
    }

    void power_moderate() {
        for (int d = 1; d <= n_max; ++d) {
            const double logCp = 0.5 * d * (d + 1) * logB;
            for (int n = 1; n <= n_max && d * n <= n_max; ++n) {
                if (L(d * n) > n * logCp + d * L(n) + kLogEps) {
                    return record("power_moderate",
                                  "d=" + std::to_string(d) + ",n=" + std::to_string(n),
                                  "C'=B^(d(d+1)/2)");
                }
            }
        }
        record("power_moderate", "", "C'=B^(d(d+1)/2)");
    }

    void head_quotient() {
        if (!lc_ok) return skipped("head_quotient", "requires lc");
        for (int q = 1; q <= n_max; ++q) {
            for (int p = 1; p <= q; ++p) {
                if (L(p) > p * (L(q) - L(q - 1)) + kLogEps) {
                    return record("head_quotient",
                                  "p=" + std::to_string(p) + ",q=" + std::to_string(q), "");
                }
            }
        }
        record("head_quotient", "", "");
    }

    void shifted_ratio() {
        if (!lc_ok) return skipped("shifted_ratio", "requires lc");
        double logC = -std::numeric_limits<double>::infinity();
        for (int p = 1; p <= n_max; ++p) {
            logC = std::max(logC, L(p) - L(p - 1) - L(p) / p);
        }
        const std::string cdesc = "C=" + std::to_string(std::exp(logC));
        for (int d = 1; d <= n_max; ++d) {
            for (int n = 1; n <= n_max && d * n <= n_max; ++n) {
                for (int a = 1; a <= d * n; ++a) {
                    if (L(d * n - a) - L(d * n) > a * logC + a * (L(n - 1) - L(n)) + kLogEps) {
                        return record("shifted_ratio",
                                      "d=" + std::to_string(d) + ",n=" + std::to_string(n) +
                                          ",a=" + std::to_string(a),
                                      cdesc);
                    }
                }
            }
        }
        record("shifted_ratio", "", cdesc);
    }

    // p/q range for the floor-power checks; the inequalities quantify over
    // all p, q >= 1, the grid instantiates a representative corner of it.
    static constexpr int kRatioRange = 4;

    void floor_power_upper() {
        for (int p = 1; p <= kRatioRange; ++p) {
            for (int q = 1; q <= kRatioRange; ++q) {
                const double logD =
                    (-0.5 * p * (q + 1) * logb + 0.5 * p * (p + 1) * logB) / q;
                for (int n = 0; n * p <= n_max; ++n) {
                    const int k = (n * p) / q;
                    if (L(k) > n * logD + (static_cast<double>(p) / q) * L(n) + kLogEps) {
                        return record("floor_power_upper",
                                      "p=" + std::to_string(p) + ",q=" + std::to_string(q) +
                                          ",n=" + std::to_string(n),
                                      "C=1,D=(b^(-p(q+1)/2)B^(p(p+1)/2))^(1/q)");
                    }
                }
            }
        }
        record("floor_power_upper", "", "C=1,D=(b^(-p(q+1)/2)B^(p(p+1)/2))^(1/q)");
    }

    void floor_power_lower() {
        for (int p = 1; p <= kRatioRange; ++p) {
            for (int q = 1; q <= kRatioRange; ++q) {
                double logC = 0.0;
                for (int r = 0; r < q; ++r) logC = std::max(logC, L(r));
                logC /= q;
                const double logD =
                    (-0.5 * p * (p + 1) * logb + p * logB + 0.5 * p * (q + 1) * logB) / q;
                for (int n = 0; n * p <= n_max; ++n) {
                    const int k = (n * p) / q;
                    if ((static_cast<double>(p) / q) * L(n) > logC + n * logD + L(k) + kLogEps) {
                        return record("floor_power_lower",
                                      "p=" + std::to_string(p) + ",q=" + std::to_string(q) +
                                          ",n=" + std::to_string(n),
                                      "C=(max_{r<q}M_r)^(1/q),D=(b^(-p(p+1)/2)B^(p(q+3)/2))^(1/q)");
                    }
                }
            }
        }
        record("floor_power_lower", "", "C=(max_{r<q}M_r)^(1/q),D=(b^(-p(p+1)/2)B^(p(q+3)/2))^(1/q)");
    }
};

}  // namespace

std::vector<LemmaCheck> verify_lemma_suite(const MomentSequence& M, int n_max) {
    require_range(M, n_max, "verify_lemma_suite");
    SuiteBuilder b{M,
                   n_max,
                   std::log(mg_witness(M, n_max).constant),
                   std::log(star_witness(M, n_max).constant),
                   check_lc(M, n_max - 1).holds,
                   {}};
    b.quotient_power();
    b.power_subadditive();
    b.power_moderate();
    b.head_quotient();
    b.shifted_ratio();
    b.floor_power_upper();
    b.floor_power_lower();
    return b.out;
}

}  // namespace momentpde
