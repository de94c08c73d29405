#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momentpde/sequences.hpp"

namespace momentpde {

// Slack for log-space inequality checks throughout the library.
inline constexpr double kLogEps = 1e-12;

enum class SequenceProperty {
    lc,    // M_n^2 <= M_{n-1} M_{n+1}
    mg,    // M_{n+k} <= B^{n+k} M_n M_k
    star,  // M_{n+k} >= b^{n+k} M_n M_k
};

// Result of checking one property on the grid [0, n_max]. For mg/star the
// constant is the exhaustive extreme of (M_{n+k}/(M_n M_k))^{1/(n+k)}, so
// holds is true by construction; for lc the constant is unused and
// first_failure carries the smallest violating n (as {n, n}).
struct PropertyWitness {
    SequenceProperty property;
    int n_max = 0;
    bool holds = false;
    double constant = 0.0;
    std::optional<std::pair<int, int>> first_failure;
};

PropertyWitness check_lc(const MomentSequence& M, int n_max);
PropertyWitness mg_witness(const MomentSequence& M, int n_max);
PropertyWitness star_witness(const MomentSequence& M, int n_max);

enum class OrderKind {
    plain,    // a^n M_n^s <= m(n) <= A^n M_n^s
    regular,  // a (M_n/M_{n-1})^s <= m(n)/m(n-1) <= A (M_n/M_{n-1})^s
};

// Exhaustive two-sided constants over 1 <= n <= n_max. a_lo/a_hi are the
// extremes of the defining quantity, so the inequalities hold on the grid by
// construction. For the regular kind, degenerate_lower reports that the
// running minimum was still attaining new strict minima in the final quarter
// of the range, i.e. no positive lower constant is in sight.
struct OrderWitness {
    OrderKind kind;
    double s = 0.0;
    int n_max = 0;
    double a_lo = 0.0;
    double a_hi = 0.0;
    bool degenerate_lower = false;
};

OrderWitness order_witness(const MomentSequence& m, const MomentSequence& M, double s, int n_max);
OrderWitness regularity_witness(const MomentSequence& m, const MomentSequence& M, double s,
                                int n_max);

// One inequality family checked on its full legal grid. Skipped checks
// (hypotheses not satisfied) report applicable = false with the reason in
// detail; failures carry the first offending indices.
struct LemmaCheck {
    std::string id;
    bool applicable = false;
    bool passed = false;
    std::string detail;
};

// Grid instantiations of the sequence inequalities:
//   quotient_power    (lc):      M_n/M_{n-p} <= (M_n/M_{n-1})^p
//   power_subadditive (lc):      M_n^d <= M_{dn}
//   power_moderate    (mg):      M_{dn} <= C'^n M_n^d,  C' = B^{d(d+1)/2}
//   head_quotient     (lc):      M_p <= (M_q/M_{q-1})^p, p <= q
//   shifted_ratio     (lc+mg):   M_{dn-a}/M_{dn} <= C^a (M_{n-1}/M_n)^a,
//                                C = max_p (M_p/M_{p-1})/M_p^{1/p}
//   floor_power_upper (mg+star): M_{floor(np/q)} <= C D^n M_n^{p/q}
//   floor_power_lower (mg+star): M_n^{p/q} <= C D^n M_{floor(np/q)}
// with B, b the witnessed mg/star constants and all indices <= n_max.
std::vector<LemmaCheck> verify_lemma_suite(const MomentSequence& M, int n_max);

}  // namespace momentpde
