#include "secretary/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "secretary/exact.hpp"
#include "secretary/montecarlo.hpp"
#include "secretary/optimizer.hpp"
#include "secretary/oracle.hpp"

namespace secretary {

namespace {

using nlohmann::ordered_json;

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string exact_with_decimal(const Rational& value) {
    return value.str() + " ≈ " + value.decimal();
}

ordered_json to_json(const OptimizationResult& r, int n) {
    ordered_json j;
    j["objective"] = r.objective == Objective::MinRank ? "rank" : "reward";
    if (r.objective == Objective::MaxReward) j["d"] = r.d;
    j["n"] = n;
    j["k_star"] = r.k_star;
    j["l_star"] = r.l_star;
    j["value"] = r.value;
    if (r.exact) j["exact"] = r.exact->str();
    j["search_domain"] = {{"k_min", r.k_min}, {"k_max", r.k_max},
                          {"l_min", r.l_min}, {"l_max", r.l_max}};
    j["tie_break"] = r.tie_break;
    return j;
}

ordered_json to_json(const SimConfig& config, const SimResult& r) {
    ordered_json j;
    j["n"] = config.params.n;
    j["k"] = config.params.k;
    j["l"] = config.params.l;
    if (config.horizon) j["d"] = config.horizon->d;
    j["samples"] = r.samples;
    j["seed"] = config.seed;
    j["mean_rank"] = r.mean_rank;
    j["std_error_rank"] = r.std_error_rank;
    if (r.mean_reward) {
        j["mean_reward"] = *r.mean_reward;
        j["std_error_reward"] = *r.std_error_reward;
    }
    return j;
}

ordered_json to_json(const OracleReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["l"] = r.l;
    j["total"] = r.total;
    ordered_json counts, fails, rewards;
    for (int s = 1; s <= r.n; ++s) {
        counts[std::to_string(s)] = r.rank_counts[static_cast<size_t>(s - 1)];
        fails[std::to_string(s)] = r.fail_counts[static_cast<size_t>(s - 1)];
    }
    for (int d = 1; d <= r.n; ++d)
        rewards[std::to_string(d)] = r.mean_reward[static_cast<size_t>(d - 1)].str();
    j["rank_counts"] = counts;
    j["fail_counts"] = fails;
    j["mean_rank"] = r.mean_rank.str();
    j["mean_reward"] = rewards;
    return j;
}

struct EvalArgs {
    int n = 0, k = 0, l = 0;
    int d = -1;
    bool force_exact = false, force_float = false;
};

int run_eval(const EvalArgs& a, std::ostream& out) {
    const RuleParams params(a.n, a.k, a.l);
    const bool exact = a.force_exact || (!a.force_float && a.n <= 500);
    if (exact) {
        out << "expected rank = " << exact_with_decimal(expected_rank(params)) << "\n";
        if (a.d > 0)
            out << "expected reward (d=" << a.d << ") = "
                << exact_with_decimal(expected_reward(params, RewardHorizon{a.d})) << "\n";
    } else {
        out << "expected rank = " << fmt12(expected_rank_float(params)) << "\n";
        if (a.d > 0)
            out << "expected reward (d=" << a.d << ") = "
                << fmt12(expected_reward_float(params, RewardHorizon{a.d})) << "\n";
    }
    return 0;
}

struct OptimizeArgs {
    int n = 0;
    std::string objective = "rank";
    int d = 1;
    SearchOptions options;
    std::optional<int> l_max_flag;
};

int run_optimize(const OptimizeArgs& a, std::ostream& out) {
    SearchOptions options = a.options;
    options.l_max = a.l_max_flag;
    const OptimizationResult result =
        a.objective == "rank" ? optimize_rank(a.n, options)
                              : optimize_reward(a.n, RewardHorizon{a.d}, options);
    out << to_json(result, a.n).dump(2) << "\n";
    return 0;
}

struct OracleArgs {
    int n_max = 0;
    int n = 0, k = 0, l = 0;
    int cap = kDefaultOracleCap;
};

int run_oracle(const OracleArgs& a, std::ostream& out, std::ostream& err) {
    if (a.n_max > 0) {
        const auto discrepancies = verify_formulas(a.n_max, a.cap);
        if (discrepancies.empty()) {
            out << "verified: exhaustive enumeration matches the exact formulas for all "
                   "n <= " << a.n_max << ", all valid (k,l), all d\n";
            return 0;
        }
        for (const auto& disc : discrepancies)
            err << "discrepancy: n=" << disc.n << " k=" << disc.k << " l=" << disc.l
                << " d=" << disc.d << " " << disc.quantity
                << " oracle=" << disc.oracle_value.str()
                << " formula=" << disc.formula_value.str() << "\n";
        return 1;
    }
    const OracleReport report = oracle_enumerate(RuleParams(a.n, a.k, a.l), a.cap);
    out << to_json(report).dump(2) << "\n";
    return 0;
}

struct SimulateArgs {
    int n = 0, k = 0, l = 0;
    int d = -1;
    std::int64_t samples = 10000;
    std::uint64_t seed = 0;
};

int run_simulate(const SimulateArgs& a, std::ostream& out) {
    SimConfig config{RuleParams(a.n, a.k, a.l),
                     a.d > 0 ? std::optional<RewardHorizon>(RewardHorizon{a.d}) : std::nullopt,
                     a.samples, a.seed};
    out << to_json(config, simulate(config)).dump(2) << "\n";
    return 0;
}

struct SweepArgs {
    int n = 0;
    std::string vary = "k";
    int fixed_k = 0, fixed_l = 0;
    int d = -1;
    int from = 0, to = 0;
};

int run_sweep(const SweepArgs& a, std::ostream& out) {
    const bool vary_k = a.vary == "k";
    if (vary_k && a.fixed_l < 1)
        throw CLI::ValidationError("sweep", "--vary k needs a fixed --l");
    if (!vary_k && a.fixed_k < 1)
        throw CLI::ValidationError("sweep", "--vary l needs a fixed --k");

    int lo, hi;
    if (vary_k) {
        lo = std::max(a.fixed_l, 1);
        hi = a.n - 1;
    } else {
        lo = 1;
        hi = a.fixed_k;
    }
    if (a.from > 0) lo = std::max(lo, a.from);
    if (a.to > 0) hi = std::min(hi, a.to);

    const bool exact = a.n <= 500;
    out << "n,k,l,d,value\n";
    for (int v = lo; v <= hi; ++v) {
        const int k = vary_k ? v : a.fixed_k;
        const int l = vary_k ? a.fixed_l : v;
        const RuleParams params(a.n, k, l);
        std::string value;
        if (a.d > 0) {
            const RewardHorizon horizon{a.d};
            value = exact ? expected_reward(params, horizon).decimal()
                          : fmt12(expected_reward_float(params, horizon));
        } else {
            value = exact ? expected_rank(params).decimal()
                          : fmt12(expected_rank_float(params));
        }
        out << a.n << "," << k << "," << l << ","
            << (a.d > 0 ? std::to_string(a.d) : "") << "," << value << "\n";
    }
    return 0;
}

struct ConstantsArgs {
    int d_max = 8;
    int n = 2000;
    int l_max = 40;
};

int run_constants(const ConstantsArgs& a, std::ostream& out) {
    out << "finite-n reward-rate estimates (n=" << a.n << ", l_max=" << a.l_max << "):\n";
    for (int d = 1; d <= a.d_max; ++d)
        out << "  c_" << d << " = " << fmt12(estimate_cd(d, a.n, a.l_max)) << "\n";
    const C2Solution sol = solve_c2();
    out << "exact limits:\n";
    out << "  c_1 = 1/e = " << fmt12(1.0 / std::exp(1.0)) << "\n";
    out << "  c_2 = x*(2-x) = " << fmt12(sol.c2)
        << "  (x = " << fmt12(sol.x) << ", the smaller root of 2x - 2*ln(x) = 3)\n";
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and empirical analysis of the cutoff stopping rule R_n(k,l) "
                 "for rank-minimizing selection"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Expected rank (and reward) for one (n,k,l)");
    eval->add_option("-n,--n", eval_args.n, "pool size")->required();
    eval->add_option("-k,--k", eval_args.k, "rejection-phase length")->required();
    eval->add_option("-l,--l", eval_args.l, "rank threshold")->required();
    eval->add_option("-d,--d", eval_args.d, "reward cutoff (omit for rank only)");
    auto* fe = eval->add_flag("--exact", eval_args.force_exact, "force the exact rational path");
    eval->add_flag("--float", eval_args.force_float, "force the floating-point path")
        ->excludes(fe);

    OptimizeArgs opt_args;
    auto* optimize = app.add_subcommand("optimize", "Grid search for the best (k,l)");
    optimize->add_option("-n,--n", opt_args.n, "pool size")->required();
    optimize->add_option("--objective", opt_args.objective, "rank or reward")
        ->check(CLI::IsMember({"rank", "reward"}));
    optimize->add_option("-d,--d", opt_args.d, "reward cutoff (reward objective)");
    int l_max_opt = 0;
    auto* l_max_flag = optimize->add_option("--l-max", l_max_opt, "cap on l in the grid");
    optimize->add_option("--exact-limit", opt_args.options.exact_limit,
                         "largest n evaluated exactly (0 forces float)");

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle",
                                      "Exhaustive enumeration: verify formulas or dump one report");
    auto* n_max = oracle->add_option("--n-max", oracle_args.n_max,
                                     "verify all n <= n-max against the formulas");
    oracle->add_option("-n,--n", oracle_args.n, "pool size (report mode)")->excludes(n_max);
    oracle->add_option("-k,--k", oracle_args.k, "rejection-phase length (report mode)");
    oracle->add_option("-l,--l", oracle_args.l, "rank threshold (report mode)");
    oracle->add_option("--cap", oracle_args.cap, "enumeration size cap");

    SimulateArgs sim_args;
    auto* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo estimate");
    simulate->add_option("-n,--n", sim_args.n, "pool size")->required();
    simulate->add_option("-k,--k", sim_args.k, "rejection-phase length")->required();
    simulate->add_option("-l,--l", sim_args.l, "rank threshold")->required();
    simulate->add_option("-d,--d", sim_args.d, "reward cutoff (optional)");
    simulate->add_option("--samples,-M", sim_args.samples, "number of sampled permutations");
    simulate->add_option("--seed", sim_args.seed, "64-bit generator seed");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "CSV grid sweep over k or l");
    sweep->add_option("-n,--n", sweep_args.n, "pool size")->required();
    sweep->add_option("--vary", sweep_args.vary, "which parameter varies: k or l")
        ->check(CLI::IsMember({"k", "l"}));
    sweep->add_option("-k,--k", sweep_args.fixed_k, "fixed k (when varying l)");
    sweep->add_option("-l,--l", sweep_args.fixed_l, "fixed l (when varying k)");
    sweep->add_option("-d,--d", sweep_args.d, "reward cutoff (omit for rank)");
    sweep->add_option("--from", sweep_args.from, "range start for the varied parameter");
    sweep->add_option("--to", sweep_args.to, "range end for the varied parameter");

    ConstantsArgs const_args;
    auto* constants = app.add_subcommand("constants", "Reward-rate constants c_d");
    constants->add_option("--d-max", const_args.d_max, "largest cutoff to estimate");
    constants->add_option("--n", const_args.n, "pool size for the finite-n estimates");
    constants->add_option("--l-max", const_args.l_max, "cap on l in the grid");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (*l_max_flag) opt_args.l_max_flag = l_max_opt;
        if (*eval) return run_eval(eval_args, out);
        if (*optimize) return run_optimize(opt_args, out);
        if (*oracle) return run_oracle(oracle_args, out, err);
        if (*simulate) return run_simulate(sim_args, out);
        if (*sweep) return run_sweep(sweep_args, out);
        if (*constants) return run_constants(const_args, out);
        err << "no subcommand given\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace secretary
