#include "momentpde/problem_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "json.hpp"

#include "momentpde/calculus.hpp"

namespace momentpde {
namespace {

using nlohmann::json;

constexpr int kMaxAxisCap = 128;
constexpr int kMaxTimeOrder = 512;
constexpr int kMaxSequenceCap = 1 << 20;
constexpr std::size_t kMaxTotalEntries = std::size_t{1} << 22;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::invalid_argument(where + ": " + what);
}

const json& member(const json& j, const std::string& where, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
    return *it;
}

void check_keys(const json& j, const std::string& where,
                std::initializer_list<const char*> allowed) {
    if (!j.is_object()) fail(where, "expected an object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : allowed) known = known || item.key() == k;
        if (!known) fail(where, "unknown key \"" + item.key() + "\"");
    }
}

long long to_int(const json& j, const std::string& where, long long lo, long long hi) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    const long long v = j.get<long long>();
    if (v < lo || v > hi) {
        fail(where, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
    }
    return v;
}

double to_number(const json& j, const std::string& where) {
    if (!j.is_number()) fail(where, "expected a number");
    return j.get<double>();
}

bool to_bool(const json& j, const std::string& where) {
    if (!j.is_boolean()) fail(where, "expected a boolean");
    return j.get<bool>();
}

Rational to_rational(const json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return Rational(j.get<long long>());
        if (j.is_string()) return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
    fail(where, "expected an integer or a \"p/q\" string");
}

// Real-valued parameter; a "p/q" string is accepted for exact-looking input.
double to_real(const json& j, const std::string& where) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return to_rational(j, where).to_double();
    fail(where, "expected a number or a \"p/q\" string");
}

struct ParsedSpec {
    SequenceSpec spec;
    bool has_cap = false;
};

ParsedSpec parse_sequence(const json& j, const std::string& where) {
    check_keys(j, where, {"family", "s", "p", "q", "values", "n_cap"});
    ParsedSpec out;
    SequenceSpec& spec = out.spec;

    const json& fam = member(j, where, "family");
    if (!fam.is_string()) fail(where + ".family", "expected a string");
    const std::string name = fam.get<std::string>();
    if (name == "factorial") {
        spec.family = SequenceFamily::factorial;
    } else if (name == "gevrey") {
        spec.family = SequenceFamily::gevrey;
    } else if (name == "gevrey_log") {
        spec.family = SequenceFamily::gevrey_log;
    } else if (name == "q_factorial") {
        spec.family = SequenceFamily::q_factorial;
    } else if (name == "parity_factorial") {
        spec.family = SequenceFamily::parity_factorial;
    } else if (name == "table") {
        spec.family = SequenceFamily::table;
    } else {
        fail(where + ".family", "unknown family \"" + name + "\"");
    }

    const auto forbid = [&](const char* key) {
        if (j.contains(key)) {
            fail(where, std::string("key \"") + key + "\" does not apply to family " + name);
        }
    };

    switch (spec.family) {
        case SequenceFamily::factorial:
        case SequenceFamily::parity_factorial:
            forbid("s");
            forbid("p");
            forbid("q");
            forbid("values");
            break;
        case SequenceFamily::gevrey:
            spec.s = to_real(member(j, where, "s"), where + ".s");
            forbid("p");
            forbid("q");
            forbid("values");
            break;
        case SequenceFamily::gevrey_log:
            spec.s = to_real(member(j, where, "s"), where + ".s");
            spec.p = to_real(member(j, where, "p"), where + ".p");
            forbid("q");
            forbid("values");
            break;
        case SequenceFamily::q_factorial:
            spec.q = to_real(member(j, where, "q"), where + ".q");
            forbid("s");
            forbid("p");
            forbid("values");
            break;
        case SequenceFamily::table: {
            forbid("s");
            forbid("p");
            forbid("q");
            const json& vals = member(j, where, "values");
            if (!vals.is_array() || vals.empty()) {
                fail(where + ".values", "expected a nonempty array");
            }
            spec.values.reserve(vals.size());
            for (std::size_t i = 0; i < vals.size(); ++i) {
                spec.values.push_back(
                    to_number(vals[i], where + ".values[" + std::to_string(i) + "]"));
            }
            break;
        }
    }

    if (j.contains("n_cap")) {
        spec.n_cap = static_cast<int>(to_int(j["n_cap"], where + ".n_cap", 0, kMaxSequenceCap));
        out.has_cap = true;
    }
    return out;
}

// Explicit n_cap is honored as written; otherwise the cap defaults to the
// table length (table family) or to default_sequence_cap(), raised to the
// problem's own minimum requirement.
SequenceSpec finish_spec(ParsedSpec parsed, int requirement, const std::string& where) {
    SequenceSpec spec = std::move(parsed.spec);
    if (!parsed.has_cap) {
        const int def = spec.family == SequenceFamily::table
                            ? static_cast<int>(spec.values.size()) - 1
                            : default_sequence_cap();
        spec.n_cap = std::max(def, requirement);
    }
    if (spec.n_cap < requirement) {
        fail(where, "n_cap " + std::to_string(spec.n_cap) + " below the required " +
                        std::to_string(requirement));
    }
    if (spec.family == SequenceFamily::table &&
        static_cast<int>(spec.values.size()) - 1 < spec.n_cap) {
        fail(where, "table of " + std::to_string(spec.values.size()) +
                        " values cannot reach n_cap " + std::to_string(spec.n_cap));
    }
    return spec;
}

MomentSequence build_sequence(const json& j, const std::string& where, int requirement) {
    try {
        return MomentSequence::make(finish_spec(parse_sequence(j, where), requirement, where));
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        if (msg.rfind(where, 0) == 0) throw;
        fail(where, msg);
    }
}

MultiIndex parse_alpha(const json& row, const std::string& where, std::size_t offset, int dim,
                       const MultiIndex* caps) {
    MultiIndex alpha(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        const long long hi = caps != nullptr ? (*caps)[static_cast<std::size_t>(i)] : 1024;
        alpha[static_cast<std::size_t>(i)] = static_cast<int>(
            to_int(row[offset + static_cast<std::size_t>(i)],
                   where + "[" + std::to_string(offset + static_cast<std::size_t>(i)) + "]", 0,
                   hi));
    }
    return alpha;
}

MultiPoly parse_data_poly(const json& j, const std::string& where, const MultiIndex& caps) {
    check_keys(j, where, {"coefficients", "geometric"});
    const bool has_rows = j.contains("coefficients");
    const bool has_geom = j.contains("geometric");
    if (has_rows == has_geom) {
        fail(where, "expected exactly one of \"coefficients\", \"geometric\"");
    }
    if (has_geom) {
        const json& g = j["geometric"];
        check_keys(g, where + ".geometric", {"C", "D"});
        return geometric_majorant(caps, to_number(member(g, where + ".geometric", "C"),
                                                  where + ".geometric.C"),
                                  to_number(member(g, where + ".geometric", "D"),
                                            where + ".geometric.D"));
    }
    const json& rows = j["coefficients"];
    if (!rows.is_array()) fail(where + ".coefficients", "expected an array");
    MultiPoly poly(caps);
    const int dim = static_cast<int>(caps.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string rw = where + ".coefficients[" + std::to_string(r) + "]";
        const json& row = rows[r];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(dim) + 1) {
            fail(rw, "expected [alpha_1.." + std::to_string(dim) + ", value]");
        }
        const MultiIndex alpha = parse_alpha(row, rw, 0, dim, &caps);
        poly.at(alpha) += to_number(row[static_cast<std::size_t>(dim)], rw + ".value");
    }
    return poly;
}

TimeSeries parse_forcing(const json& j, const std::string& where, const MultiIndex& caps,
                         int time_order, ForcingConvention* convention) {
    check_keys(j, where, {"convention", "coefficients", "geometric"});
    *convention = ForcingConvention::direct;
    if (j.contains("convention")) {
        const json& c = j["convention"];
        if (!c.is_string()) fail(where + ".convention", "expected a string");
        const std::string name = c.get<std::string>();
        if (name == "direct") {
            *convention = ForcingConvention::direct;
        } else if (name == "numerator") {
            *convention = ForcingConvention::numerator;
        } else {
            fail(where + ".convention", "expected \"direct\" or \"numerator\"");
        }
    }

    const int dim = static_cast<int>(caps.size());
    struct Row {
        int n;
        MultiIndex alpha;
        double value;
    };
    std::vector<Row> entries;
    struct Geom {
        int n;
        double C;
        double D;
    };
    std::vector<Geom> geoms;
    int top = 0;

    if (j.contains("coefficients")) {
        const json& rows = j["coefficients"];
        if (!rows.is_array()) fail(where + ".coefficients", "expected an array");
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::string rw = where + ".coefficients[" + std::to_string(r) + "]";
            const json& row = rows[r];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(dim) + 2) {
                fail(rw, "expected [n, alpha_1.." + std::to_string(dim) + ", value]");
            }
            Row e;
            e.n = static_cast<int>(to_int(row[0], rw + "[0]", 0, time_order));
            e.alpha = parse_alpha(row, rw, 1, dim, &caps);
            e.value = to_number(row[static_cast<std::size_t>(dim) + 1], rw + ".value");
            top = std::max(top, e.n);
            entries.push_back(std::move(e));
        }
    }
    if (j.contains("geometric")) {
        const json& rows = j["geometric"];
        if (!rows.is_array()) fail(where + ".geometric", "expected an array");
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::string rw = where + ".geometric[" + std::to_string(r) + "]";
            const json& row = rows[r];
            check_keys(row, rw, {"order", "C", "D"});
            Geom g;
            g.n = static_cast<int>(to_int(member(row, rw, "order"), rw + ".order", 0, time_order));
            g.C = to_number(member(row, rw, "C"), rw + ".C");
            g.D = to_number(member(row, rw, "D"), rw + ".D");
            top = std::max(top, g.n);
            geoms.push_back(g);
        }
    }

    TimeSeries f(caps, top);
    for (const Row& e : entries) f.coefficient(e.n).at(e.alpha) += e.value;
    for (const Geom& g : geoms) f.coefficient(g.n) += geometric_majorant(caps, g.C, g.D);
    return f;
}

std::vector<OperatorTerm> parse_terms(const json& j, const std::string& where, int dim) {
    if (!j.is_array()) fail(where, "expected an array");
    std::vector<OperatorTerm> terms;
    terms.reserve(j.size());
    for (std::size_t t = 0; t < j.size(); ++t) {
        const std::string tw = where + "[" + std::to_string(t) + "]";
        const json& jt = j[t];
        check_keys(jt, tw, {"j", "alpha", "coeff"});
        OperatorTerm term;
        term.j = static_cast<int>(to_int(member(jt, tw, "j"), tw + ".j", 0, 64));
        const json& alpha = member(jt, tw, "alpha");
        if (!alpha.is_array() || alpha.size() != static_cast<std::size_t>(dim)) {
            fail(tw + ".alpha", "expected an array of " + std::to_string(dim) + " integers");
        }
        term.alpha = parse_alpha(alpha, tw + ".alpha", 0, dim, nullptr);
        const json& coeff = member(jt, tw, "coeff");
        if (!coeff.is_array()) fail(tw + ".coeff", "expected an array of [power, value] pairs");
        for (std::size_t c = 0; c < coeff.size(); ++c) {
            const std::string cw = tw + ".coeff[" + std::to_string(c) + "]";
            const json& pair = coeff[c];
            if (!pair.is_array() || pair.size() != 2) fail(cw, "expected [power, value]");
            const int power = static_cast<int>(to_int(pair[0], cw + "[0]", 0, 4096));
            term.coeff.powers.emplace_back(power, to_number(pair[1], cw + "[1]"));
        }
        try {
            term.coeff.normalize();
        } catch (const std::invalid_argument& e) {
            fail(tw + ".coeff", e.what());
        }
        terms.push_back(std::move(term));
    }
    return terms;
}

EstimatorConfig parse_estimator(const json& j, const std::string& where, int time_order) {
    check_keys(j, where, {"radius", "window", "tol", "sharp"});
    EstimatorConfig cfg;
    if (j.contains("radius")) {
        cfg.radius = to_number(j["radius"], where + ".radius");
        if (!(cfg.radius >= 0.0)) fail(where + ".radius", "expected a radius >= 0");
    }
    if (j.contains("window")) {
        const json& w = j["window"];
        if (!w.is_array() || w.size() != 2) fail(where + ".window", "expected [n_lo, n_hi]");
        cfg.n_lo = static_cast<int>(to_int(w[0], where + ".window[0]", 0, time_order));
        cfg.n_hi = static_cast<int>(to_int(w[1], where + ".window[1]", 0, time_order));
    }
    if (j.contains("tol")) {
        cfg.tol = to_number(j["tol"], where + ".tol");
        if (!(cfg.tol > 0.0)) fail(where + ".tol", "expected tol > 0");
    }
    if (j.contains("sharp")) cfg.sharp = to_bool(j["sharp"], where + ".sharp");
    return cfg;
}

LoadedProblem parse_problem_json(const json& root) {
    check_keys(root, "problem",
               {"meta", "sequences", "orders", "terms", "forcing", "initial", "estimator"});

    const json& meta = member(root, "problem", "meta");
    check_keys(meta, "meta", {"dim", "K", "N_t", "caps"});
    const int dim =
        static_cast<int>(to_int(member(meta, "meta", "dim"), "meta.dim", 1, MultiPoly::kMaxAxes));
    const int K = static_cast<int>(to_int(member(meta, "meta", "K"), "meta.K", 1, 16));
    const int time_order =
        static_cast<int>(to_int(member(meta, "meta", "N_t"), "meta.N_t", K, kMaxTimeOrder));
    const json& jcaps = member(meta, "meta", "caps");
    if (!jcaps.is_array() || jcaps.size() != static_cast<std::size_t>(dim)) {
        fail("meta.caps", "expected an array of " + std::to_string(dim) + " integers");
    }
    MultiIndex caps(static_cast<std::size_t>(dim));
    std::size_t total = 1;
    for (int i = 0; i < dim; ++i) {
        caps[static_cast<std::size_t>(i)] = static_cast<int>(
            to_int(jcaps[static_cast<std::size_t>(i)], "meta.caps[" + std::to_string(i) + "]", 0,
                   kMaxAxisCap));
        total *= static_cast<std::size_t>(caps[static_cast<std::size_t>(i)]) + 1;
    }
    if (total > kMaxTotalEntries) fail("meta.caps", "total coefficient count too large");

    const json& orders = member(root, "problem", "orders");
    check_keys(orders, "orders", {"s0", "s"});
    const Rational s0 = to_rational(member(orders, "orders", "s0"), "orders.s0");
    if (s0 < Rational(0)) fail("orders.s0", "expected s0 >= 0");
    const json& js = member(orders, "orders", "s");
    if (!js.is_array() || js.size() != static_cast<std::size_t>(dim)) {
        fail("orders.s", "expected an array of " + std::to_string(dim) + " rationals");
    }
    std::vector<Rational> s;
    s.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        const std::string sw = "orders.s[" + std::to_string(i) + "]";
        s.push_back(to_rational(js[static_cast<std::size_t>(i)], sw));
        if (s.back() < Rational(0)) fail(sw, "expected s >= 0");
    }

    const json& seqs = member(root, "problem", "sequences");
    check_keys(seqs, "sequences", {"m0", "m", "M"});
    int max_cap = 0;
    for (int c : caps) max_cap = std::max(max_cap, c);
    MomentSequence m0 = build_sequence(member(seqs, "sequences", "m0"), "sequences.m0", time_order);
    const json& jm = member(seqs, "sequences", "m");
    if (!jm.is_array() || jm.size() != static_cast<std::size_t>(dim)) {
        fail("sequences.m", "expected an array of " + std::to_string(dim) + " sequences");
    }
    std::vector<MomentSequence> m;
    m.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        m.push_back(build_sequence(jm[static_cast<std::size_t>(i)],
                                   "sequences.m[" + std::to_string(i) + "]",
                                   caps[static_cast<std::size_t>(i)]));
    }
    MomentSequence M = build_sequence(member(seqs, "sequences", "M"), "sequences.M",
                                      std::max(max_cap, time_order));

    std::vector<OperatorTerm> terms = parse_terms(member(root, "problem", "terms"), "terms", dim);

    const json& jinit = member(root, "problem", "initial");
    if (!jinit.is_array() || jinit.size() != static_cast<std::size_t>(K)) {
        fail("initial", "expected an array of " + std::to_string(K) + " data entries");
    }
    std::vector<MultiPoly> initial;
    initial.reserve(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        initial.push_back(parse_data_poly(jinit[static_cast<std::size_t>(k)],
                                          "initial[" + std::to_string(k) + "]", caps));
    }

    ForcingConvention convention = ForcingConvention::direct;
    TimeSeries forcing(caps, 0);
    if (root.contains("forcing")) {
        forcing = parse_forcing(root["forcing"], "forcing", caps, time_order, &convention);
    }

    EstimatorConfig estimator;
    if (root.contains("estimator")) {
        estimator = parse_estimator(root["estimator"], "estimator", time_order);
    }

    // No validate() here: the solvers run it themselves, and the polygon
    // path must be able to display operators that violate the t-order
    // condition before reporting the hypothesis failure.
    CauchyProblem problem{dim,
                          K,
                          std::move(caps),
                          std::move(terms),
                          std::move(m0),
                          std::move(m),
                          std::move(M),
                          s0,
                          std::move(s),
                          std::move(initial),
                          std::move(forcing),
                          convention,
                          time_order};
    return LoadedProblem{std::move(problem), estimator};
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find(sep, start);
        if (end == std::string_view::npos) {
            out.push_back(text.substr(start));
            break;
        }
        out.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

long long csv_int(std::string_view tok, const std::string& where) {
    long long v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
        fail(where, "bad integer \"" + std::string(tok) + "\"");
    }
    return v;
}

double csv_double(std::string_view tok, const std::string& where) {
    double v = 0.0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
        fail(where, "bad number \"" + std::string(tok) + "\"");
    }
    return v;
}

std::string sanitize_cell(std::string text) {
    std::replace(text.begin(), text.end(), ',', ';');
    return text;
}

const char* pass_fail(bool pass) { return pass ? "pass" : "fail"; }

}  // namespace

int default_sequence_cap() {
    const char* env = std::getenv("MOMENTPDE_NCAP");
    if (env == nullptr || *env == '\0') return SequenceSpec::kDefaultCap;
    int v = 0;
    const auto [p, ec] = std::from_chars(env, env + std::strlen(env), v);
    if (ec != std::errc{} || *p != '\0' || v < 1 || v > kMaxSequenceCap) {
        throw std::invalid_argument("MOMENTPDE_NCAP must be an integer in [1, 1048576]");
    }
    return v;
}

LoadedProblem parse_problem_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("problem file: ") + e.what());
    }
    return parse_problem_json(root);
}

LoadedProblem load_problem_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open problem file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

SequenceSpec parse_sequence_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("sequence: ") + e.what());
    }
    ParsedSpec parsed = parse_sequence(j, "sequence");
    return finish_spec(std::move(parsed), 0, "sequence");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string solve_csv(const CauchyProblem& problem, const TimeSeries& u,
                      const ResidualReport& report) {
    std::string out = "n";
    for (int i = 0; i < problem.dim; ++i) out += ",alpha_" + std::to_string(i + 1);
    out += ",value\n";
    for (int n = 0; n <= u.order(); ++n) {
        const MultiPoly& poly = u.coefficient(n);
        poly.for_each([&](const MultiIndex& alpha, std::size_t flat) {
            out += std::to_string(n);
            for (int a : alpha) {
                out += ',';
                out += std::to_string(a);
            }
            out += ',';
            out += format_double(poly.coefficients()[flat]);
            out += '\n';
        });
    }
    out += "residual,";
    out += format_double(report.max());
    out += '\n';
    return out;
}

std::string polygon_csv(const NewtonPolygon& polygon, bool condition_a) {
    std::string out = "condition_a,";
    out += condition_a ? "true" : "false";
    out += '\n';
    for (const PolygonPoint& v : polygon.vertices) {
        out += "vertex," + v.x.to_string() + "," + std::to_string(v.y) + "\n";
    }
    for (const Rational& slope : polygon.slopes) {
        out += "slope," + slope.to_string() + "\n";
    }
    out += "k1_inv," + polygon.k1_inv.to_string() + "\n";
    return out;
}

std::string sequence_report_csv(const SequenceSpec& spec, const PropertyWitness& lc,
                                const PropertyWitness& mg, const PropertyWitness& star) {
    std::string out = "family," + sanitize_cell(spec.describe()) + "\n";
    out += "n_max," + std::to_string(lc.n_max) + "\n";
    out += std::string("lc,") + pass_fail(lc.holds) + "\n";
    if (!lc.holds && lc.first_failure.has_value()) {
        out += "lc_first_failure," + std::to_string(lc.first_failure->first) + "\n";
    }
    out += "mg_B," + format_double(mg.constant) + "\n";
    out += "star_b," + format_double(star.constant) + "\n";
    return out;
}

std::string lemma_report_csv(const std::vector<LemmaCheck>& checks) {
    std::string out;
    for (const LemmaCheck& c : checks) {
        out += "check," + c.id + ",";
        out += c.applicable ? pass_fail(c.passed) : "skipped";
        out += "," + sanitize_cell(c.detail) + "\n";
    }
    return out;
}

std::string estimate_csv(const EstimateOutput& est) {
    std::string out;
    out += "window," + std::to_string(est.fit.n_lo) + "," + std::to_string(est.fit.n_hi) + "\n";
    out += "points_used," + std::to_string(est.fit.points_used) + "\n";
    out += "sigma_hat," + format_double(est.fit.sigma_hat) + "\n";
    out += "log_H," + format_double(est.fit.log_H) + "\n";
    out += "log_C," + format_double(est.fit.log_C) + "\n";
    out += "rms," + format_double(est.fit.rms) + "\n";
    out += std::string("degenerate,") + (est.fit.degenerate ? "true" : "false") + "\n";
    out += "k1_inv," + est.k1_inv.to_string() + "\n";
    out += "radius," + format_double(est.radius) + "\n";
    out += "tol," + format_double(est.tol) + "\n";
    out += std::string("sharp,") + (est.sharp ? "true" : "false") + "\n";
    out += std::string("verdict,") + (est.pass ? "PASS" : "FAIL") + "\n";
    return out;
}

TimeSeries read_solution_csv(const std::string& text) {
    const std::vector<std::string_view> lines = split(text, '\n');
    if (lines.empty()) throw std::invalid_argument("solution csv: empty input");

    const std::vector<std::string_view> header = split(lines[0], ',');
    if (header.size() < 3 || header.front() != "n" || header.back() != "value") {
        throw std::invalid_argument("solution csv: expected header n,alpha_1..,value");
    }
    const int dim = static_cast<int>(header.size()) - 2;
    for (int i = 0; i < dim; ++i) {
        const std::string want = "alpha_" + std::to_string(i + 1);
        if (header[static_cast<std::size_t>(i) + 1] != want) {
            throw std::invalid_argument("solution csv: expected header column " + want);
        }
    }

    struct Row {
        int n;
        MultiIndex alpha;
        double value;
    };
    std::vector<Row> rows;
    int order = 0;
    MultiIndex caps(static_cast<std::size_t>(dim), 0);
    for (std::size_t li = 1; li < lines.size(); ++li) {
        if (lines[li].empty()) continue;
        const std::string where = "solution csv line " + std::to_string(li + 1);
        const std::vector<std::string_view> cells = split(lines[li], ',');
        if (cells.front() == "residual") continue;
        if (cells.size() != static_cast<std::size_t>(dim) + 2) {
            throw std::invalid_argument(where + ": expected " + std::to_string(dim + 2) +
                                        " cells");
        }
        Row row;
        row.n = static_cast<int>(csv_int(cells[0], where));
        if (row.n < 0) throw std::invalid_argument(where + ": negative order");
        row.alpha.resize(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) {
            const long long a = csv_int(cells[static_cast<std::size_t>(i) + 1], where);
            if (a < 0 || a > kMaxAxisCap) throw std::invalid_argument(where + ": bad exponent");
            row.alpha[static_cast<std::size_t>(i)] = static_cast<int>(a);
            caps[static_cast<std::size_t>(i)] =
                std::max(caps[static_cast<std::size_t>(i)], static_cast<int>(a));
        }
        row.value = csv_double(cells.back(), where);
        order = std::max(order, row.n);
        rows.push_back(std::move(row));
    }

    TimeSeries u(caps, order);
    for (const Row& row : rows) u.coefficient(row.n).at(row.alpha) = row.value;
    return u;
}

}  // namespace momentpde
