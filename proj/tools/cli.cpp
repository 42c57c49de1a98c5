#include "cli.hpp"

#include <secretary/asymptotic.hpp>
#include <secretary/dp.hpp>
#include <secretary/exactprob.hpp>
#include <secretary/optimize.hpp>
#include <secretary/rational.hpp>
#include <secretary/simulate.hpp>
#include <secretary/types.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace secretary::cli {
namespace {

// ---------------------------------------------------------------------------
// output records
//
// Every subcommand produces a flat list of records with a fixed field order.
// JSON renders integer fields as numbers and computed reals as decimal
// strings; CSV renders the same strings, so both formats carry identical
// values. One record serializes as a JSON object, several as an array.
// ---------------------------------------------------------------------------

using Value = std::variant<long long, unsigned long long, std::string>;

struct Record {
    std::vector<std::pair<std::string, Value>> fields;

    void put(std::string name, long long v) { fields.emplace_back(std::move(name), v); }
    void put(std::string name, int v) { put(std::move(name), static_cast<long long>(v)); }
    void put(std::string name, unsigned long long v) { fields.emplace_back(std::move(name), v); }
    void put(std::string name, std::string v) { fields.emplace_back(std::move(name), std::move(v)); }
    void put(std::string name, const char* v) { put(std::move(name), std::string(v)); }

    const Value* find(const std::string& name) const {
        for (const auto& [key, value] : fields)
            if (key == name) return &value;
        return nullptr;
    }
};

Record make_record(const char* kind) {
    Record rec;
    rec.put("schema_version", "1");
    rec.put("kind", kind);
    return rec;
}

// 12 significant digits: enough for bit-level round trips of every value the
// solver reports while staying locale-independent ("%g" under the C locale).
std::string fmt_sig(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt_fixed(double v, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, v);
    return buf;
}

std::string rational_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string value_string(const Value& v) {
    if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
    if (const auto* u = std::get_if<unsigned long long>(&v)) return std::to_string(*u);
    return std::get<std::string>(v);
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        quoted += c;
        if (c == '"') quoted += '"';
    }
    quoted += '"';
    return quoted;
}

std::string to_json_text(const std::vector<Record>& records) {
    auto to_object = [](const Record& rec) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (const auto& [name, value] : rec.fields) {
            if (const auto* i = std::get_if<long long>(&value))
                obj[name] = *i;
            else if (const auto* u = std::get_if<unsigned long long>(&value))
                obj[name] = *u;
            else
                obj[name] = std::get<std::string>(value);
        }
        return obj;
    };
    nlohmann::ordered_json doc;
    if (records.size() == 1) {
        doc = to_object(records.front());
    } else {
        doc = nlohmann::ordered_json::array();
        for (const auto& rec : records) doc.push_back(to_object(rec));
    }
    return doc.dump(2) + "\n";
}

// Header = union of field names in first-appearance order; records missing a
// column leave the cell empty. Only the bare `asymptotic` command mixes record
// shapes, so in practice this is a plain fixed-column table. LF line ends.
std::string to_csv_text(const std::vector<Record>& records) {
    std::vector<std::string> header;
    for (const auto& rec : records)
        for (const auto& [name, value] : rec.fields) {
            (void)value;
            if (std::find(header.begin(), header.end(), name) == header.end())
                header.push_back(name);
        }
    std::string text;
    for (std::size_t c = 0; c < header.size(); ++c)
        text += (c ? "," : "") + csv_cell(header[c]);
    text += '\n';
    for (const auto& rec : records) {
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (c) text += ',';
            if (const Value* v = rec.find(header[c])) text += csv_cell(value_string(*v));
        }
        text += '\n';
    }
    return text;
}

// The convergence CSV layout is pinned: exactly these three columns, one row
// per grid point, header always present (so an empty grid yields header only).
std::string to_convergence_csv(const std::vector<Record>& records) {
    std::string text = "n,p_finite,p_limit\n";
    for (const auto& rec : records) {
        const Value* n = rec.find("n");
        const Value* fin = rec.find("p_finite");
        const Value* lim = rec.find("p_limit");
        text += value_string(*n) + "," + value_string(*fin) + "," + value_string(*lim) + "\n";
    }
    return text;
}

// ---------------------------------------------------------------------------
// subcommand options and execution
// ---------------------------------------------------------------------------

struct Options {
    int n = 0;
    int b = 0;
    int s = 0;
    int r = 0;
    int s1 = 0;
    int s2 = 0;
    int r1 = 0;
    int r2 = 0;
    double alpha = 0.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    std::vector<int> n_list;
    std::vector<int> b_list;
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    double tol = 1e-10;
    bool exact = false;
    std::string format = "json";
    std::string out_path;

    NumericMode mode() const {
        return exact ? NumericMode::exact_rational : NumericMode::float64;
    }
};

void sort_unique(std::vector<int>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

std::string policy_echo(const Policy& policy) {
    return std::visit(
        [](const auto& p) -> std::string {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, SingleLevelPolicy>) {
                return "slp(s=" + std::to_string(p.s) + ",r=" + std::to_string(p.r) + ")";
            } else if constexpr (std::is_same_v<P, DoubleLevelPolicy>) {
                return "dlp(s1=" + std::to_string(p.s1) + ",s2=" + std::to_string(p.s2) +
                       ",r1=" + std::to_string(p.r1) + ",r2=" + std::to_string(p.r2) + ")";
            } else {
                std::string text = "mlp(s=";
                for (std::size_t j = 0; j < p.thresholds.size(); ++j)
                    text += (j ? ";" : "") + std::to_string(p.thresholds[j]);
                return text + ")";
            }
        },
        policy);
}

std::vector<Record> run_slp(const Options& o) {
    const ProblemInstance inst{o.n, o.b};
    const SingleLevelPolicy policy{o.s, o.r};
    const WinProbability p = exactprob::slp_win_prob(inst, policy, o.mode());
    Record rec = make_record("slp");
    rec.put("n", o.n);
    rec.put("b", o.b);
    rec.put("s", o.s);
    rec.put("r", o.r);
    rec.put("probability", fmt_sig(p.value()));
    if (o.exact) rec.put("probability_exact", rational_string(p.rational()));
    return {std::move(rec)};
}

std::vector<Record> run_dlp(const Options& o) {
    const ProblemInstance inst{o.n, o.b};
    const DoubleLevelPolicy policy{o.s1, o.s2, o.r1, o.r2};
    const WinProbability p = exactprob::dlp_win_prob(inst, policy, o.mode());
    Record rec = make_record("dlp");
    rec.put("n", o.n);
    rec.put("b", o.b);
    rec.put("s1", o.s1);
    rec.put("s2", o.s2);
    rec.put("r1", o.r1);
    rec.put("r2", o.r2);
    rec.put("probability", fmt_sig(p.value()));
    if (o.exact) rec.put("probability_exact", rational_string(p.rational()));
    return {std::move(rec)};
}

std::vector<Record> run_optimal(const Options& o) {
    const ProblemInstance inst{o.n, o.b};
    const dp::OptimalPolicyResult res = dp::optimal_policy_dp(inst, o.mode());
    Record rec = make_record("optimal");
    rec.put("n", o.n);
    rec.put("b", o.b);
    std::string thresholds;
    for (std::size_t j = 0; j < res.policy.thresholds.size(); ++j)
        thresholds += (j ? ";" : "") + std::to_string(res.policy.thresholds[j]);
    rec.put("thresholds", thresholds);
    rec.put("value", fmt_sig(res.value.value()));
    if (o.exact) rec.put("value_exact", rational_string(res.value.rational()));
    return {std::move(rec)};
}

std::vector<Record> run_slp_opt(const Options& o) {
    const ProblemInstance inst{o.n, o.b};
    const optimize::OptimizationReport rep = optimize::slp_optimum(inst, o.mode());
    const auto& policy = std::get<SingleLevelPolicy>(rep.best);
    Record rec = make_record("slp");
    rec.put("n", o.n);
    rec.put("b", o.b);
    rec.put("s", policy.s);
    rec.put("r", policy.r);
    rec.put("probability", fmt_sig(rep.value.value()));
    rec.put("relative_error_pct", fmt_sig(rep.relative_error_pct));
    if (o.exact) rec.put("probability_exact", rational_string(rep.value.rational()));
    return {std::move(rec)};
}

std::vector<Record> run_dlp_opt(const Options& o) {
    const ProblemInstance inst{o.n, o.b};
    const optimize::OptimizationReport rep = optimize::dlp_optimum(inst, o.mode());
    const auto& policy = std::get<DoubleLevelPolicy>(rep.best);
    Record rec = make_record("dlp");
    rec.put("n", o.n);
    rec.put("b", o.b);
    rec.put("s1", policy.s1);
    rec.put("s2", policy.s2);
    rec.put("r1", policy.r1);
    rec.put("r2", policy.r2);
    rec.put("probability", fmt_sig(rep.value.value()));
    rec.put("relative_error_pct", fmt_sig(rep.relative_error_pct));
    if (o.exact) rec.put("probability_exact", rational_string(rep.value.rational()));
    return {std::move(rec)};
}

Record single_level_limit_record(int b, int r, double alpha, double value) {
    Record rec = make_record("asymptotic");
    rec.put("b", b);
    rec.put("r", r);
    rec.put("alpha", fmt_sig(alpha));
    rec.put("value", fmt_sig(value));
    return rec;
}

Record double_level_limit_record(int b, int r1, int r2, double alpha1, double alpha2,
                                 double value) {
    Record rec = make_record("asymptotic");
    rec.put("b", b);
    rec.put("r1", r1);
    rec.put("r2", r2);
    rec.put("alpha1", fmt_sig(alpha1));
    rec.put("alpha2", fmt_sig(alpha2));
    rec.put("value", fmt_sig(value));
    return rec;
}

std::vector<Record> run_asymptotic(const Options& o, bool has_r, bool has_alpha, bool has_pair,
                                   bool has_alpha_pair) {
    if (has_alpha && has_alpha_pair)
        throw std::domain_error(
            "asymptotic: give either --alpha/--r (single level) or "
            "--alpha1/--alpha2/--r1/--r2 (double level), not both");
    if (has_alpha) {
        if (!has_r) throw std::domain_error("asymptotic: --alpha requires --r");
        const double value = asymptotic::slp_asymptotic_win(o.alpha, o.r, o.b, o.tol);
        return {single_level_limit_record(o.b, o.r, o.alpha, value)};
    }
    if (has_alpha_pair) {
        if (!has_pair)
            throw std::domain_error("asymptotic: --alpha1/--alpha2 require --r1 and --r2");
        const double value =
            asymptotic::dlp_asymptotic_win(o.alpha1, o.alpha2, o.r1, o.r2, o.b, o.tol);
        return {double_level_limit_record(o.b, o.r1, o.r2, o.alpha1, o.alpha2, value)};
    }
    if (has_r || has_pair)
        throw std::domain_error("asymptotic: rank levels need matching --alpha values "
                                "(omit both to optimize)");
    std::vector<Record> records;
    const asymptotic::AsymptoticPolicy single = asymptotic::slp_asymptotic_optimum(o.b, o.tol);
    records.push_back(single_level_limit_record(o.b, single.r1, single.alpha1, single.value));
    if (o.b >= 2) {
        const asymptotic::AsymptoticPolicy dbl = asymptotic::dlp_asymptotic_optimum(o.b, o.tol);
        records.push_back(
            double_level_limit_record(o.b, dbl.r1, dbl.r2, dbl.alpha1, dbl.alpha2, dbl.value));
    }
    return records;
}

std::vector<Record> run_asymptotic_table(Options& o) {
    sort_unique(o.b_list);
    std::vector<Record> records;
    for (int b : o.b_list) {
        const asymptotic::AsymptoticPolicy single = asymptotic::slp_asymptotic_optimum(b, o.tol);
        const asymptotic::AsymptoticPolicy dbl = asymptotic::dlp_asymptotic_optimum(b, o.tol);
        Record rec = make_record("asymptotic");
        rec.put("b", b);
        rec.put("r", single.r1);
        rec.put("alpha", fmt_sig(single.alpha1));
        rec.put("p_single", fmt_sig(single.value));
        rec.put("r1", dbl.r1);
        rec.put("r2", dbl.r2);
        rec.put("alpha1", fmt_sig(dbl.alpha1));
        rec.put("alpha2", fmt_sig(dbl.alpha2));
        rec.put("p_double", fmt_sig(dbl.value));
        rec.put("alpha_4dp", fmt_fixed(single.alpha1, 4));
        rec.put("p_single_6dp", fmt_fixed(single.value, 6));
        rec.put("alpha1_4dp", fmt_fixed(dbl.alpha1, 4));
        rec.put("alpha2_4dp", fmt_fixed(dbl.alpha2, 4));
        rec.put("p_double_6dp", fmt_fixed(dbl.value, 6));
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<Record> run_errors_table(Options& o) {
    sort_unique(o.n_list);
    sort_unique(o.b_list);
    std::vector<Record> records;
    for (int n : o.n_list) {
        for (int b : o.b_list) {
            const ProblemInstance inst{n, b};
            const dp::OptimalPolicyResult opt = dp::optimal_policy_dp(inst);
            const optimize::OptimizationReport srep = optimize::slp_optimum(inst);
            const optimize::OptimizationReport drep = optimize::dlp_optimum(inst);
            const auto& spol = std::get<SingleLevelPolicy>(srep.best);
            const auto& dpol = std::get<DoubleLevelPolicy>(drep.best);
            Record rec = make_record("error-table");
            rec.put("n", n);
            rec.put("b", b);
            rec.put("p_optimal", fmt_sig(opt.value.value()));
            rec.put("s", spol.s);
            rec.put("r", spol.r);
            rec.put("p_slp", fmt_sig(srep.value.value()));
            rec.put("err_slp_pct", fmt_sig(srep.relative_error_pct));
            rec.put("s1", dpol.s1);
            rec.put("s2", dpol.s2);
            rec.put("r1", dpol.r1);
            rec.put("r2", dpol.r2);
            rec.put("p_dlp", fmt_sig(drep.value.value()));
            rec.put("err_dlp_pct", fmt_sig(drep.relative_error_pct));
            rec.put("err_slp_pct_3dp", fmt_fixed(srep.relative_error_pct, 3));
            rec.put("err_dlp_pct_3dp", fmt_fixed(drep.relative_error_pct, 3));
            records.push_back(std::move(rec));
        }
    }
    return records;
}

std::vector<Record> run_convergence(Options& o, bool has_r, bool has_pair) {
    if (has_r == has_pair)
        throw std::domain_error(
            "convergence: give exactly one of --r (single level) or --r1/--r2 (double level)");
    sort_unique(o.n_list);
    const asymptotic::ConvergenceSeries series =
        has_r ? asymptotic::convergence_series(o.b, o.r, o.n_list)
              : asymptotic::convergence_series(o.b, o.r1, o.r2, o.n_list);
    std::vector<Record> records;
    for (const asymptotic::ConvergencePoint& point : series.points) {
        Record rec = make_record("convergence");
        rec.put("b", o.b);
        if (has_r) {
            rec.put("r", o.r);
        } else {
            rec.put("r1", o.r1);
            rec.put("r2", o.r2);
        }
        rec.put("n", point.n);
        rec.put("p_finite", fmt_sig(point.value));
        rec.put("p_limit", fmt_sig(series.limit));
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<Record> run_simulate(const Options& o, bool has_single, bool has_double) {
    if (has_single == has_double)
        throw std::domain_error(
            "simulate: give exactly one policy, --s/--r (single level) or "
            "--s1/--s2/--r1/--r2 (double level)");
    const ProblemInstance inst{o.n, o.b};
    const Policy policy = has_single ? Policy(SingleLevelPolicy{o.s, o.r})
                                     : Policy(DoubleLevelPolicy{o.s1, o.s2, o.r1, o.r2});
    const simulate::SimulationEstimate est =
        simulate::monte_carlo(inst, policy, o.trials, o.seed);
    Record rec = make_record("simulate");
    rec.put("n", o.n);
    rec.put("b", o.b);
    rec.put("policy", policy_echo(policy));
    rec.put("trials", static_cast<unsigned long long>(est.trials));
    rec.put("seed", static_cast<unsigned long long>(est.seed));
    rec.put("successes", static_cast<unsigned long long>(est.successes));
    rec.put("estimate", fmt_sig(est.estimate));
    rec.put("std_error", fmt_sig(est.std_error));
    return {std::move(rec)};
}

void emit(const std::vector<Record>& records, const Options& o, std::ostream& out,
          bool convergence_layout) {
    std::string text;
    if (o.format == "csv")
        text = convergence_layout ? to_convergence_csv(records) : to_csv_text(records);
    else
        text = to_json_text(records);
    if (!o.out_path.empty()) {
        std::ofstream file(o.out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open --out path: " + o.out_path);
        file << text;
        file.flush();
        if (!file) throw std::runtime_error("failed writing --out path: " + o.out_path);
    } else {
        out << text;
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"solver for the generalized secretary problem: hire one of the b best of n"};
    app.name("secretary");
    app.require_subcommand(1);

    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", o.out_path, "write output to this file instead of stdout");
    app.add_flag("--exact", o.exact, "also compute exact rational probabilities");
    app.add_option("--tol", o.tol, "quadrature tolerance for limiting values")
        ->capture_default_str();

    auto* slp = app.add_subcommand("slp", "win probability of a single-level policy");
    slp->add_option("--n", o.n, "number of candidates")->required();
    slp->add_option("--b", o.b, "number of acceptable top ranks")->required();
    slp->add_option("--s", o.s, "positions to skip before stopping is allowed")->required();
    slp->add_option("--r", o.r, "relative-rank acceptance level")->required();

    auto* dlp = app.add_subcommand("dlp", "win probability of a double-level policy");
    dlp->add_option("--n", o.n, "number of candidates")->required();
    dlp->add_option("--b", o.b, "number of acceptable top ranks")->required();
    dlp->add_option("--s1", o.s1, "skip length before the first acceptance window")->required();
    dlp->add_option("--s2", o.s2, "position where the acceptance level loosens")->required();
    dlp->add_option("--r1", o.r1, "acceptance level on positions s1+1..s2")->required();
    dlp->add_option("--r2", o.r2, "acceptance level after position s2")->required();

    auto* optimal = app.add_subcommand("optimal", "optimal multi-level policy and value");
    optimal->add_option("--n", o.n, "number of candidates")->required();
    optimal->add_option("--b", o.b, "number of acceptable top ranks")->required();

    auto* slp_opt = app.add_subcommand("slp-opt", "best single-level policy");
    slp_opt->add_option("--n", o.n, "number of candidates")->required();
    slp_opt->add_option("--b", o.b, "number of acceptable top ranks")->required();

    auto* dlp_opt = app.add_subcommand("dlp-opt", "best double-level policy (b >= 2)");
    dlp_opt->add_option("--n", o.n, "number of candidates")->required();
    dlp_opt->add_option("--b", o.b, "number of acceptable top ranks")->required();

    auto* asym = app.add_subcommand(
        "asymptotic", "limiting (n -> infinity) win probabilities; optimizes when no "
                      "--alpha values are given");
    asym->add_option("--b", o.b, "number of acceptable top ranks")->required();
    auto* asym_r = asym->add_option("--r", o.r, "single acceptance level to evaluate");
    auto* asym_alpha =
        asym->add_option("--alpha", o.alpha, "proportional threshold to evaluate at --r");
    auto* asym_r1 = asym->add_option("--r1", o.r1, "first acceptance level");
    auto* asym_r2 = asym->add_option("--r2", o.r2, "second acceptance level");
    auto* asym_a1 = asym->add_option("--alpha1", o.alpha1, "first proportional threshold");
    auto* asym_a2 = asym->add_option("--alpha2", o.alpha2, "second proportional threshold");

    auto* asym_table = app.add_subcommand(
        "asymptotic-table", "best limiting single- and double-level policies per b");
    asym_table->add_option("--b", o.b_list, "comma-separated list of b values (each >= 2)")
        ->required()
        ->delimiter(',');

    auto* errors = app.add_subcommand(
        "errors-table", "optimal value and best single/double-level policies with "
                        "relative errors, per (n, b)");
    errors->add_option("--n", o.n_list, "comma-separated list of n values")
        ->required()
        ->delimiter(',');
    errors->add_option("--b", o.b_list, "comma-separated list of b values (each >= 2)")
        ->required()
        ->delimiter(',');

    auto* conv = app.add_subcommand(
        "convergence", "finite-n optimal values at fixed levels next to their limit");
    conv->add_option("--b", o.b, "number of acceptable top ranks")->required();
    auto* conv_r = conv->add_option("--r", o.r, "single acceptance level");
    auto* conv_r1 = conv->add_option("--r1", o.r1, "first acceptance level");
    auto* conv_r2 = conv->add_option("--r2", o.r2, "second acceptance level");
    conv->add_option("--n", o.n_list, "comma-separated grid of n values (may be empty)")
        ->delimiter(',');

    auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate of a policy's win rate");
    sim->add_option("--n", o.n, "number of candidates")->required();
    sim->add_option("--b", o.b, "number of acceptable top ranks")->required();
    auto* sim_s = sim->add_option("--s", o.s, "single-level skip length");
    auto* sim_r = sim->add_option("--r", o.r, "single-level acceptance level");
    auto* sim_s1 = sim->add_option("--s1", o.s1, "double-level first skip length");
    auto* sim_s2 = sim->add_option("--s2", o.s2, "double-level loosening position");
    auto* sim_r1 = sim->add_option("--r1", o.r1, "double-level first acceptance level");
    auto* sim_r2 = sim->add_option("--r2", o.r2, "double-level second acceptance level");
    sim->add_option("--trials", o.trials, "number of simulated arrival orders")
        ->capture_default_str();
    sim->add_option("--seed", o.seed, "master seed (substreams are derived per block)")
        ->capture_default_str();

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        std::vector<Record> records;
        bool convergence_layout = false;
        if (slp->parsed()) {
            records = run_slp(o);
        } else if (dlp->parsed()) {
            records = run_dlp(o);
        } else if (optimal->parsed()) {
            records = run_optimal(o);
        } else if (slp_opt->parsed()) {
            records = run_slp_opt(o);
        } else if (dlp_opt->parsed()) {
            records = run_dlp_opt(o);
        } else if (asym->parsed()) {
            const bool has_pair = asym_r1->count() > 0 && asym_r2->count() > 0;
            const bool has_alpha_pair = asym_a1->count() > 0 || asym_a2->count() > 0;
            if (has_alpha_pair && (asym_a1->count() == 0 || asym_a2->count() == 0))
                throw std::domain_error("asymptotic: --alpha1 and --alpha2 go together");
            records = run_asymptotic(o, asym_r->count() > 0, asym_alpha->count() > 0, has_pair,
                                     has_alpha_pair);
        } else if (asym_table->parsed()) {
            records = run_asymptotic_table(o);
        } else if (errors->parsed()) {
            records = run_errors_table(o);
        } else if (conv->parsed()) {
            const bool has_r = conv_r->count() > 0;
            const bool has_pair = conv_r1->count() > 0 && conv_r2->count() > 0;
            if (!has_pair && (conv_r1->count() > 0 || conv_r2->count() > 0))
                throw std::domain_error("convergence: --r1 and --r2 go together");
            records = run_convergence(o, has_r, has_pair);
            convergence_layout = true;
        } else if (sim->parsed()) {
            const bool has_single = sim_s->count() > 0 && sim_r->count() > 0;
            const bool has_double = sim_s1->count() > 0 && sim_s2->count() > 0 &&
                                    sim_r1->count() > 0 && sim_r2->count() > 0;
            records = run_simulate(o, has_single, has_double);
        }
        emit(records, o, out, convergence_layout);
        return 0;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace secretary::cli
