#include "record.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rmtool {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string csv_field(const nlohmann::json& payload, const char* key) {
    if (!payload.contains(key) || payload[key].is_null()) return "";
    const auto& v = payload[key];
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

void append_schema_row(std::string& out, const RunConfig& config, const nlohmann::json& payload,
                       double wall_ms, const std::string& constraint) {
    std::ostringstream row;
    row << config.m << ',' << config.r << ',' << constraint << ',';
    const bool sampling = payload.contains("log2_z_hat") && !payload["log2_z_hat"].is_null();
    if (sampling) {
        row << config.tau << ',' << config.t << ',' << config.delta << ',' << config.seed << ',';
    } else {
        row << ",,," << ',';
    }
    row << csv_field(payload, "log2_z_hat") << ',' << csv_field(payload, "z_hat_str") << ','
        << csv_field(payload, "rate") << ',' << csv_field(payload, "exact_z") << ','
        << csv_field(payload, "exact_rate") << ',' << csv_field(payload, "steps") << ','
        << csv_field(payload, "converged") << ',' << wall_ms << '\n';
    out += row.str();
}

}  // namespace

nlohmann::json config_json(const RunConfig& c) {
    nlohmann::json j;
    j["command"] = c.command;
    j["m"] = c.m;
    j["r"] = c.r;
    j["constraint"] = c.constraint;
    j["tau"] = c.tau;
    j["t"] = c.t;
    j["delta"] = c.delta;
    if (c.beta_star) {
        j["beta_star"] = *c.beta_star;
    } else {
        j["beta_star"] = nullptr;
    }
    j["seed"] = c.seed;
    j["replicas"] = c.replicas;
    j["output_format"] = c.output_format;
    j["output_path"] = c.output_path;
    j["parallelism"] = c.parallelism;
    j["reuse_chain"] = c.reuse_chain;
    j["warm_start"] = c.warm_start;
    j["literal_alg3_order"] = c.literal_alg3_order;
    j["no_log_lb"] = c.no_log_lb;
    j["allow_k29"] = c.allow_k29;
    j["weights_mode"] = c.weights_mode;
    j["table"] = c.table;
    j["long_rows"] = c.long_rows;
    j["row"] = c.row;
    j["dry_run"] = c.dry_run;
    j["init"] = c.init;
    j["epsilon"] = c.epsilon;
    j["ell"] = c.ell;
    j["ell_max"] = c.ell_max;
    j["betas"] = c.betas;
    return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    c.m = j.at("m").get<int>();
    c.r = j.at("r").get<int>();
    c.constraint = j.at("constraint").get<std::string>();
    c.tau = j.at("tau").get<long>();
    c.t = j.at("t").get<int>();
    c.delta = j.at("delta").get<double>();
    if (!j.at("beta_star").is_null()) c.beta_star = j.at("beta_star").get<double>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.replicas = j.at("replicas").get<int>();
    c.output_format = j.at("output_format").get<std::string>();
    c.output_path = j.at("output_path").get<std::string>();
    c.parallelism = j.at("parallelism").get<int>();
    c.reuse_chain = j.at("reuse_chain").get<bool>();
    c.warm_start = j.at("warm_start").get<bool>();
    c.literal_alg3_order = j.at("literal_alg3_order").get<bool>();
    c.no_log_lb = j.at("no_log_lb").get<bool>();
    c.allow_k29 = j.at("allow_k29").get<bool>();
    c.weights_mode = j.at("weights_mode").get<std::string>();
    c.table = j.at("table").get<std::string>();
    c.long_rows = j.at("long_rows").get<bool>();
    c.row = j.at("row").get<int>();
    c.dry_run = j.at("dry_run").get<bool>();
    c.init = j.at("init").get<std::string>();
    c.epsilon = j.at("epsilon").get<double>();
    c.ell = j.at("ell").get<long>();
    c.ell_max = j.at("ell_max").get<long>();
    c.betas = j.at("betas").get<std::vector<double>>();
    return c;
}

std::string config_hash(const RunConfig& config) {
    const std::string canonical = config_json(config).dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : canonical) h = (h ^ ch) * 0x100000001b3ull;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json record_json(const RunRecord& record) {
    nlohmann::json j;
    j["config"] = config_json(record.config);
    j["result"] = record.payload;
    j["meta"] = {{"wall_ms", record.wall_ms},
                 {"version", record.version},
                 {"config_hash", config_hash(record.config)}};
    return j;
}

RunRecord record_from_json(const nlohmann::json& j) {
    RunRecord rec;
    rec.config = config_from_json(j.at("config"));
    rec.payload = j.at("result");
    rec.wall_ms = j.at("meta").at("wall_ms").get<double>();
    rec.version = j.at("meta").at("version").get<std::string>();
    return rec;
}

std::string record_to_string(const RunRecord& record) { return record_json(record).dump(2) + "\n"; }

std::string log2_to_decimal(double log2v) {
    if (!std::isfinite(log2v)) return "0";
    if (log2v < 53.0) {
        const double value = std::exp2(log2v);
        char buf[64];
        if (value == std::floor(value)) {
            std::snprintf(buf, sizeof buf, "%.0f", value);
        } else {
            std::snprintf(buf, sizeof buf, "%.4g", value);
        }
        return buf;
    }
    const double log10v = log2v * 0.30102999566398119521;
    const double exponent = std::floor(log10v);
    const double mantissa = std::pow(10.0, log10v - exponent);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3fe%d", mantissa, static_cast<int>(exponent));
    return buf;
}

std::string record_csv(const RunRecord& record) {
    const auto& config = record.config;
    const auto& payload = record.payload;

    if (config.command == "budget") {
        std::ostringstream out;
        out << "ell,epsilon,t_star,total_samples,total_chain_steps\n"
            << csv_field(payload, "ell") << ',' << csv_field(payload, "epsilon") << ','
            << csv_field(payload, "t_star") << ',' << csv_field(payload, "total_samples") << ','
            << csv_field(payload, "total_chain_steps") << '\n';
        return out.str();
    }
    if (config.command == "lower-bound") {
        std::ostringstream out;
        out << "m,r,lb_printed,lb_nolog,selected\n"
            << config.m << ',' << config.r << ',' << csv_field(payload, "lb_printed") << ','
            << csv_field(payload, "lb_nolog") << ',' << csv_field(payload, "selected") << '\n';
        return out.str();
    }
    if (config.command == "reproduce-table") {
        std::ostringstream out;
        out << "m,r,constraint,tau,t,delta,seed,log2_Z_hat,Z_hat,rate,exact_Z,exact_rate,"
               "paper_Z_hat,paper_rate,abs_err,rate_gap,steps,converged,wall_ms\n";
        for (const auto& row : payload.at("rows")) {
            out << csv_field(row, "m") << ',' << csv_field(row, "r") << ','
                << csv_field(row, "constraint") << ',' << csv_field(row, "tau") << ','
                << csv_field(row, "t") << ',' << csv_field(row, "delta") << ','
                << config.seed << ',' << csv_field(row, "log2_z_hat") << ','
                << csv_field(row, "z_hat_str") << ',' << csv_field(row, "rate") << ','
                << csv_field(row, "exact_z") << ',' << csv_field(row, "exact_rate") << ','
                << csv_field(row, "paper_z_hat") << ',' << csv_field(row, "paper_rate") << ','
                << csv_field(row, "abs_err") << ',' << csv_field(row, "rate_gap") << ','
                << csv_field(row, "steps") << ',' << csv_field(row, "converged") << ','
                << csv_field(row, "wall_ms") << '\n';
        }
        return out.str();
    }

    std::string out = std::string(kCsvHeader) + "\n";
    if (config.command == "weights") {
        for (const auto& row : payload.at("rows")) {
            append_schema_row(out, config, row, record.wall_ms,
                              "weight:" + row.at("omega").dump());
        }
    } else {
        append_schema_row(out, config, payload, record.wall_ms, config.constraint);
    }
    return out;
}

std::vector<TableRow> table_rows(const std::string& table) {
    auto row = [](int m, int r, std::string constraint, long tau, int t, double delta,
                  double zhat, double rate, long long exact, bool k29 = false,
                  bool long_gated = false) {
        TableRow tr;
        tr.m = m;
        tr.r = r;
        tr.constraint = std::move(constraint);
        tr.tau = tau;
        tr.t = t;
        tr.delta = delta;
        tr.paper_zhat = zhat;
        tr.paper_rate = rate;
        tr.exact_z = exact;
        tr.needs_k29 = k29;
        tr.long_gated = long_gated;
        return tr;
    };

    if (table == "I") {
        return {
            row(4, 2, "rll:1", 5'000, 50, 0.1, 80.0, 0.3951, 83),
            row(5, 2, "rll:1", 10'000, 50, 0.1, 278.446, 0.2538, 259),
            row(5, 3, "rll:1", 10'000, 10, 0.001, 126490.0, 0.5296, 89172),
            row(6, 1, "rll:1", 10'000, 10, 0.001, 5.551, 0.0386, 4),
            row(6, 2, "rll:1", 10'000, 10, 0.001, 997.7, 0.1557, 803),
            row(7, 2, "rll:1", 10'000, 5, 0.1, 3128.4, 0.0907, 2467, true),
            row(7, 2, "rll:1", 10'000, 100, 0.001, 2515.5, 0.0883, 2467, true),
            row(8, 1, "rll:1", 100'000, 10, 0.001, 5.3787, 0.0095, 4),
        };
    }
    if (table == "II") {
        return {
            row(7, 3, "rll:1", 10'000, 100, 0.001, 2.926e8, 0.1678, -1),
            row(7, 4, "rll:1", 10'000, 100, 0.001, 1.199e18, 0.4692, -1),
            row(7, 5, "rll:1", 10'000, 100, 0.001, 2.676e24, 0.6340, -1),
            row(8, 2, "rll:1", 100'000, 10, 0.1, 1.255e4, 0.0526, -1),
            row(8, 3, "rll:1", 100'000, 10, 0.1, 5.249e10, 0.1391, -1),
            row(8, 4, "rll:1", 100'000, 10, 0.1, 5.754e25, 0.3343, -1),
            row(8, 5, "rll:1", 100'000, 10, 0.1, 3.464e42, 0.5520, -1),
        };
    }
    if (table == "III") {
        return {
            row(4, 1, "rll:2", 10'000, 100, 0.001, 1.101, kNan, 1),
            row(4, 2, "rll:2", 10'000, 100, 0.001, 36.614, kNan, 37),
            row(4, 3, "rll:2", 10'000, 100, 0.001, 350.743, kNan, 303),
            row(5, 2, "rll:2", 10'000, 100, 0.001, 87.025, kNan, 81),
            row(5, 3, "rll:2", 10'000, 100, 0.001, 4998.2, kNan, 4917),
            row(5, 4, "rll:2", 10'000, 100, 0.001, 1.271e5, kNan, -1),
            row(6, 2, "rll:2", 10'000, 100, 0.001, 184.473, kNan, 177),
            row(6, 3, "rll:2", 10'000, 100, 0.001, 6.663e4, kNan, -1),
            row(7, 2, "rll:2", 10'000, 100, 0.001, 357.672, kNan, -1),
        };
    }
    if (table == "IV") {
        return {
            row(9, 4, "weight:76", 500'000, 1, 0.001, 4.079e22, 0.1467, -1, false, true),
            row(9, 4, "weight:80", 500'000, 1, 0.001, 2.991e23, 0.1523, -1, false, true),
            row(9, 4, "weight:84", 500'000, 1, 0.001, 1.429e25, 0.1632, -1, false, true),
        };
    }
    throw std::invalid_argument("table_rows: unknown table '" + table + "' (expected I..IV)");
}

int resolve_parallelism(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("RMCOUNT_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace rmtool
