// rmcount: constrained-subcode counting for Reed-Muller codes.
//
// Subcommands: estimate (sampling-based size estimate), oracle (exact
// brute-force count), weights (weight enumerator, exact or estimated),
// budget (sample-size calculator), lower-bound (analytic RLL rate bound),
// reproduce-table (rerun a published results table row by row).

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "record.hpp"
#include "rmcount/estimator.hpp"
#include "rmcount/oracle.hpp"
#include "rmcount/rm_code.hpp"
#include "rmcount/version.hpp"

namespace {

using nlohmann::json;
using rmtool::RunConfig;
using rmtool::RunRecord;

rmcount::InitMode parse_init(const std::string& mode) {
    if (mode == "zero") return rmcount::InitMode::kZero;
    if (mode == "random") return rmcount::InitMode::kRandom;
    throw std::invalid_argument("init mode must be 'zero' or 'random', got '" + mode + "'");
}

rmcount::EstimatorOptions estimator_options(const RunConfig& config) {
    rmcount::EstimatorOptions opts;
    opts.tau = config.tau;
    opts.samples_per_step = config.t;
    opts.delta = config.delta;
    opts.ell_max = config.ell_max;
    opts.threads = rmtool::resolve_parallelism(config.parallelism);
    opts.init = parse_init(config.init);
    opts.literal_alg3_order = config.literal_alg3_order;
    opts.warm_start = config.warm_start;
    opts.reuse_chain = config.reuse_chain;
    return opts;
}

json result_payload(const rmcount::EstimateResult& r, bool include_trace = true) {
    json j;
    j["log2_z_hat"] = r.log2_estimate;
    const double zhat = r.zhat();
    j["z_hat"] = std::isfinite(zhat) ? json(zhat) : json(nullptr);
    j["z_hat_str"] = rmtool::log2_to_decimal(r.log2_estimate);
    j["rate"] = r.rate;
    j["steps"] = r.steps_used;
    j["converged"] = r.converged;
    j["beta_final"] = r.beta_final;
    j["terminal_mean_energy"] = r.terminal_mean_energy;
    j["first_all_zero_step"] = r.first_all_zero_step;
    j["t"] = r.samples_per_step;
    j["tau"] = r.tau;
    if (include_trace) j["ratio_trace"] = r.ratio_trace;
    return j;
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
    return seed ^ (0x9e3779b97f4a7c15ull * (index + 1));
}

json run_estimate(const RunConfig& config) {
    const rmcount::RmCode code(config.m, config.r);
    const auto constraint = rmcount::Constraint::parse(config.constraint);
    const auto opts = estimator_options(config);

    if (config.replicas > 1) {
        const auto median = rmcount::median_amplify(code, constraint, config.beta_star, opts,
                                                    config.replicas, config.seed);
        json j;
        j["log2_z_hat"] = median.log2_median;
        const double zhat = std::exp2(median.log2_median);
        j["z_hat"] = std::isfinite(zhat) ? json(zhat) : json(nullptr);
        j["z_hat_str"] = rmtool::log2_to_decimal(median.log2_median);
        j["rate"] = median.rate;
        j["replicas"] = json::array();
        bool all_converged = true;
        for (const auto& rep : median.replicas) {
            j["replicas"].push_back(result_payload(rep, false));
            all_converged = all_converged && rep.converged;
        }
        j["converged"] = all_converged;
        return j;
    }
    const auto result =
        config.beta_star
            ? rmcount::estimate_fixed_schedule(code, constraint, *config.beta_star, opts,
                                               config.seed)
            : rmcount::estimate_adaptive(code, constraint, opts, config.seed);
    if (!result.converged) {
        std::cerr << "warning: estimate did not converge within " << result.steps_used
                  << " schedule steps (terminal mean energy " << result.terminal_mean_energy
                  << "); returning the running estimate\n";
    }
    return result_payload(result);
}

json run_oracle(const RunConfig& config) {
    const rmcount::RmCode code(config.m, config.r);
    const auto constraint = rmcount::Constraint::parse(config.constraint);
    const int threads = rmtool::resolve_parallelism(config.parallelism);
    const auto hist = rmcount::energy_histogram(code, constraint, threads, config.allow_k29);
    const std::uint64_t count = hist[0];

    json j;
    j["exact_z"] = count;
    j["exact_rate"] =
        count > 0 ? json(std::log2(static_cast<double>(count)) / code.n()) : json(nullptr);
    j["n"] = code.n();
    j["k"] = code.k();
    if (!config.betas.empty()) {
        json values = json::array();
        for (double beta : config.betas) {
            values.push_back({beta, rmcount::partition_function(hist, beta)});
        }
        j["partition_values"] = values;
    }
    return j;
}

json run_weights(const RunConfig& config) {
    const rmcount::RmCode code(config.m, config.r);
    const int threads = rmtool::resolve_parallelism(config.parallelism);
    json j;
    j["mode"] = config.weights_mode;
    j["rows"] = json::array();

    if (config.weights_mode == "exact") {
        const auto enumerator = rmcount::weight_enumerator(code, threads, config.allow_k29);
        for (std::size_t omega = 0; omega < enumerator.size(); ++omega) {
            json row;
            row["omega"] = omega;
            row["exact_z"] = enumerator[omega];
            row["exact_rate"] = enumerator[omega] > 0
                                    ? json(std::log2(static_cast<double>(enumerator[omega])) /
                                           code.n())
                                    : json(nullptr);
            j["rows"].push_back(row);
        }
        return j;
    }
    if (config.weights_mode != "estimate") {
        throw std::invalid_argument("weights: --mode must be 'exact' or 'estimate'");
    }

    // Sweep even weights from d_min to n/2; mirror the symmetric half.
    const auto opts = estimator_options(config);
    const int n = code.n();
    const int d_min = code.min_weight();
    json swept = json::array();
    for (int omega = d_min; omega <= n / 2; omega += 2) {
        const auto result = rmcount::estimate_adaptive(
            code, rmcount::Constraint::constant_weight(omega), opts,
            sub_seed(config.seed, static_cast<std::uint64_t>(omega)));
        json row = result_payload(result, false);
        row["omega"] = omega;
        swept.push_back(row);
        std::cerr << "weights: omega " << omega << " done (" << result.steps_used
                  << " steps)\n";
    }
    j["rows"] = swept;
    for (auto it = swept.rbegin(); it != swept.rend(); ++it) {
        const int omega = (*it)["omega"].get<int>();
        if (n - omega == omega) continue;
        json row = *it;
        row["omega"] = n - omega;
        row["mirrored_from"] = omega;
        j["rows"].push_back(row);
    }
    return j;
}

json run_budget(const RunConfig& config) {
    long ell = config.ell;
    if (ell <= 0) {
        if (config.m <= 0 || !config.beta_star) {
            throw std::invalid_argument(
                "budget: provide --ell, or --m with --beta-star to derive ell = ceil(beta* n)");
        }
        const int n = 1 << config.m;
        ell = static_cast<long>(std::ceil(*config.beta_star * n - 1e-9));
    }
    const auto budget = rmcount::sample_budget(ell, config.epsilon);
    json j;
    j["ell"] = budget.ell;
    j["epsilon"] = budget.epsilon;
    j["b_constant"] = budget.b_constant;
    j["t_star"] = budget.t_star;
    j["total_samples"] = budget.t_star * budget.ell;
    j["total_chain_steps"] = static_cast<double>(budget.t_star) * budget.ell * config.tau;
    return j;
}

json run_lower_bound(const RunConfig& config) {
    const double printed = rmcount::rll_rate_lower_bound(config.m, config.r, true);
    const double nolog = rmcount::rll_rate_lower_bound(config.m, config.r, false);
    json j;
    j["lb_printed"] = printed;
    j["lb_nolog"] = nolog;
    j["selected"] = config.no_log_lb ? nolog : printed;
    j["reading"] = config.no_log_lb ? "nolog" : "printed";
    return j;
}

json run_reproduce_table(const RunConfig& config) {
    const auto rows = rmtool::table_rows(config.table);
    json j;
    j["table"] = config.table;
    j["rows"] = json::array();
    const int threads = rmtool::resolve_parallelism(config.parallelism);

    for (std::size_t index = 0; index < rows.size(); ++index) {
        const auto& row_def = rows[index];
        if (config.row >= 0 && static_cast<std::size_t>(config.row) != index) continue;

        json row;
        row["m"] = row_def.m;
        row["r"] = row_def.r;
        row["constraint"] = row_def.constraint;
        row["tau"] = row_def.tau;
        row["t"] = row_def.t;
        row["delta"] = row_def.delta;
        if (!std::isnan(row_def.paper_zhat)) row["paper_z_hat"] = row_def.paper_zhat;
        if (!std::isnan(row_def.paper_rate)) row["paper_rate"] = row_def.paper_rate;

        if (row_def.long_gated && !config.long_rows) {
            row["status"] = "skipped (pass --long to run)";
            j["rows"].push_back(row);
            continue;
        }
        if (config.dry_run) {
            row["status"] = "planned";
            j["rows"].push_back(row);
            continue;
        }

        const auto start = std::chrono::steady_clock::now();
        const rmcount::RmCode code(row_def.m, row_def.r);
        const auto constraint = rmcount::Constraint::parse(row_def.constraint);

        RunConfig row_config = config;
        row_config.tau = row_def.tau;
        row_config.t = row_def.t;
        row_config.delta = row_def.delta;
        auto opts = estimator_options(row_config);
        const auto result = rmcount::estimate_adaptive(code, constraint, opts,
                                                       sub_seed(config.seed, index));
        row.update(result_payload(result, false));

        if (row_def.exact_z >= 0) {
            // Brute-force column published alongside the estimate; k = 29
            // rows enable the large-enumeration override automatically.
            const std::uint64_t exact = rmcount::exact_constrained_count(
                code, constraint, threads, config.allow_k29 || row_def.needs_k29);
            row["exact_z"] = exact;
            row["exact_rate"] = exact > 0
                                    ? json(std::log2(static_cast<double>(exact)) / code.n())
                                    : json(nullptr);
            row["exact_matches_published"] =
                exact == static_cast<std::uint64_t>(row_def.exact_z);
            const double zhat = result.zhat();
            if (std::isfinite(zhat)) {
                row["abs_err"] = std::fabs(zhat - static_cast<double>(exact));
            }
            if (exact > 0) {
                row["rate_gap"] = std::fabs(result.rate - std::log2(static_cast<double>(exact)) /
                                                              code.n());
            }
        } else if (!std::isnan(row_def.paper_rate)) {
            row["rate_gap"] = std::fabs(result.rate - row_def.paper_rate);
        }
        if (config.table == "II") {
            row["lb_printed"] = rmcount::rll_rate_lower_bound(row_def.m, row_def.r, true);
            row["lb_nolog"] = rmcount::rll_rate_lower_bound(row_def.m, row_def.r, false);
        }
        const auto stop = std::chrono::steady_clock::now();
        row["wall_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        j["rows"].push_back(row);
        std::cerr << "table " << config.table << ": row " << index << " (RM(" << row_def.m
                  << "," << row_def.r << ") " << row_def.constraint << ") done\n";
    }
    return j;
}

void emit(const RunRecord& record) {
    const std::string text = record.config.output_format == "csv"
                                 ? rmtool::record_csv(record)
                                 : rmtool::record_to_string(record);
    if (record.config.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(record.config.output_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file '" + record.config.output_path + "'");
    }
    out << text;
    std::cerr << "wrote " << record.config.output_path << "\n";
}

void add_common_options(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--seed", config.seed, "64-bit seed; all randomness derives from it");
    cmd->add_option("--format", config.output_format, "Output format: json (canonical) or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output,-o", config.output_path, "Write output to a file instead of stdout");
    cmd->add_option("--parallelism,-j", config.parallelism,
                    "Worker threads (default: RMCOUNT_THREADS or hardware concurrency)");
}

void add_estimate_options(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--tau", config.tau, "Metropolis steps per chain (default 10000)");
    cmd->add_option("--t", config.t, "Samples per schedule step (default 100)");
    cmd->add_option("--delta", config.delta, "Adaptive stopping precision (default 0.001)");
    cmd->add_option("--ell-max", config.ell_max,
                    "Cap on adaptive schedule steps (default 4 n^3)");
    cmd->add_option("--init", config.init, "Chain initialization: random or zero")
        ->check(CLI::IsMember({"random", "zero"}));
    cmd->add_flag("--literal-alg3-order", config.literal_alg3_order,
                  "Increment beta before sampling each iteration instead of after");
    cmd->add_flag("--warm-start", config.warm_start,
                  "Carry chain states across schedule steps (opt-in speedup)");
    cmd->add_flag("--reuse-chain", config.reuse_chain,
                  "Thin one long chain per step instead of independent restarts");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sampling-based size estimates of constrained Reed-Muller subcodes"};
    app.require_subcommand(1);
    RunConfig config;

    auto* estimate = app.add_subcommand(
        "estimate", "Estimate the constrained subcode size by annealed sampling");
    estimate->add_option("--m", config.m, "RM parameter m (blocklength 2^m)")->required();
    estimate->add_option("--r", config.r, "RM order r")->required();
    estimate->add_option("--constraint", config.constraint, "Constraint: rll:<d> or weight:<w>")
        ->required();
    estimate->add_option("--beta-star", config.beta_star,
                         "Fixed-schedule target inverse temperature (default: adaptive)");
    estimate->add_option("--replicas,-T", config.replicas,
                         "Median amplification: number of independent estimates");
    add_estimate_options(estimate, config);
    add_common_options(estimate, config);

    auto* oracle =
        app.add_subcommand("oracle", "Exact constrained count by brute-force enumeration");
    oracle->add_option("--m", config.m, "RM parameter m")->required();
    oracle->add_option("--r", config.r, "RM order r")->required();
    oracle->add_option("--constraint", config.constraint, "Constraint: rll:<d> or weight:<w>")
        ->required();
    oracle->add_option("--beta", config.betas,
                       "Also report the partition function at these inverse temperatures");
    oracle->add_flag("--allow-k29", config.allow_k29,
                     "Permit enumerations up to 2^29 codewords (minutes of work)");
    add_common_options(oracle, config);

    auto* weights = app.add_subcommand("weights", "Weight enumerator, exact or estimated");
    weights->add_option("--m", config.m, "RM parameter m")->required();
    weights->add_option("--r", config.r, "RM order r")->required();
    weights->add_option("--mode", config.weights_mode, "exact (enumeration) or estimate (sweep)")
        ->required()
        ->check(CLI::IsMember({"exact", "estimate"}));
    weights->add_flag("--allow-k29", config.allow_k29, "Permit enumerations up to 2^29");
    add_estimate_options(weights, config);
    add_common_options(weights, config);

    auto* budget = app.add_subcommand(
        "budget", "Sample-size calculator for the (1 +- epsilon, 3/4) guarantee");
    budget->add_option("--ell", config.ell, "Cooling schedule length");
    budget->add_option("--m", config.m, "Alternative: derive ell from m and beta-star");
    budget->add_option("--beta-star", config.beta_star, "Target inverse temperature");
    budget->add_option("--epsilon", config.epsilon, "Relative accuracy in (0, 1]")->required();
    budget->add_option("--tau", config.tau, "Steps per chain, for the total-step projection");
    add_common_options(budget, config);

    auto* lower_bound =
        app.add_subcommand("lower-bound", "Analytic rate lower bound for (1,inf)-RLL subcodes");
    lower_bound->add_option("--m", config.m, "RM parameter m")->required();
    lower_bound->add_option("--r", config.r, "RM order r")->required();
    lower_bound->add_flag("--no-log-lb", config.no_log_lb,
                          "Report the alternate reading (first branch without log2)");
    add_common_options(lower_bound, config);

    auto* reproduce =
        app.add_subcommand("reproduce-table", "Re-run a published results table row by row");
    reproduce->add_option("--table", config.table, "Table id: I, II, III, or IV")->required();
    reproduce->add_option("--row", config.row, "Run a single row (0-based index)");
    reproduce->add_flag("--long", config.long_rows,
                        "Run long-gated rows (table IV: tau = 5e5 on a length-512 code)");
    reproduce->add_flag("--dry-run", config.dry_run, "List planned rows without running them");
    reproduce->add_flag("--allow-k29", config.allow_k29, "Permit 2^29 enumerations");
    add_common_options(reproduce, config);

    CLI11_PARSE(app, argc, argv);

    try {
        config.command = app.get_subcommands().front()->get_name();
        const auto start = std::chrono::steady_clock::now();
        json payload;
        if (config.command == "estimate") payload = run_estimate(config);
        if (config.command == "oracle") payload = run_oracle(config);
        if (config.command == "weights") payload = run_weights(config);
        if (config.command == "budget") payload = run_budget(config);
        if (config.command == "lower-bound") payload = run_lower_bound(config);
        if (config.command == "reproduce-table") payload = run_reproduce_table(config);
        const auto stop = std::chrono::steady_clock::now();

        RunRecord record;
        record.config = config;
        record.payload = std::move(payload);
        record.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        record.version = rmcount::kVersion;
        emit(record);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
