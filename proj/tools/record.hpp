#pragma once

// Run configuration echo, result payloads, and their JSON / CSV encodings.
// JSON is the canonical format; CSV is a fixed-schema projection meant to be
// diffed or plotted directly. Everything here is deterministic given the
// config and seed; wall-clock and tool version live in a separate meta block
// so payload bytes can be compared across runs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace rmtool {

struct RunConfig {
    std::string command;
    int m = 0;
    int r = 0;
    std::string constraint;
    long tau = 10'000;
    int t = 100;
    double delta = 1e-3;
    std::optional<double> beta_star;
    std::uint64_t seed = 0;
    int replicas = 1;
    std::string output_format = "json";
    std::string output_path;
    int parallelism = 0;
    bool reuse_chain = false;
    bool warm_start = false;
    bool literal_alg3_order = false;
    bool no_log_lb = false;
    bool allow_k29 = false;
    std::string weights_mode;  // weights: "exact" | "estimate"
    std::string table;         // reproduce-table: "I".."IV"
    bool long_rows = false;
    int row = -1;
    bool dry_run = false;
    std::string init = "random";
    double epsilon = 1.0;
    long ell = 0;
    long ell_max = 0;
    std::vector<double> betas;  // oracle: partition function evaluation points
};

nlohmann::json config_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

// FNV-1a over the canonical (compact, key-sorted) config encoding.
std::string config_hash(const RunConfig& config);

struct RunRecord {
    RunConfig config;
    nlohmann::json payload;
    double wall_ms = 0.0;
    std::string version;
};

nlohmann::json record_json(const RunRecord& record);
RunRecord record_from_json(const nlohmann::json& j);
std::string record_to_string(const RunRecord& record);

inline constexpr const char* kCsvHeader =
    "m,r,constraint,tau,t,delta,seed,log2_Z_hat,Z_hat,rate,exact_Z,exact_rate,steps,converged,"
    "wall_ms";

// Fixed-schema rows for estimate / oracle / weights / reproduce-table
// records; command-specific small schemas for budget and lower-bound.
std::string record_csv(const RunRecord& record);

// "2.926e8"-style rendering of 2^log2v with four significant digits; exact
// integers below 2^53 print in full.
std::string log2_to_decimal(double log2v);

// Published-table replication rows.
struct TableRow {
    int m = 0;
    int r = 0;
    std::string constraint;
    long tau = 0;
    int t = 0;
    double delta = 0.0;
    double paper_zhat = 0.0;  // NaN when the table prints none
    double paper_rate = 0.0;  // NaN when the table prints none
    long long exact_z = -1;   // -1: not brute-forced in the published table
    bool needs_k29 = false;
    bool long_gated = false;
};
std::vector<TableRow> table_rows(const std::string& table);

// Default worker count: --parallelism flag, else RMCOUNT_THREADS, else
// hardware concurrency.
int resolve_parallelism(int flag_value);

}  // namespace rmtool
