#include "doctest.h"

#include <string>

#include "record.hpp"

using rmtool::RunConfig;
using rmtool::RunRecord;

namespace {

RunRecord sample_record() {
    RunRecord rec;
    rec.config.command = "estimate";
    rec.config.m = 4;
    rec.config.r = 2;
    rec.config.constraint = "rll:1";
    rec.config.tau = 5000;
    rec.config.t = 50;
    rec.config.delta = 0.1;
    rec.config.seed = 7;
    rec.payload = {{"log2_z_hat", 6.447117561096021},
                   {"z_hat", 87.25207649877402},
                   {"z_hat_str", "87.25"},
                   {"rate", 0.4029448475685013},
                   {"steps", 68},
                   {"converged", true},
                   {"exact_z", nullptr},
                   {"exact_rate", nullptr}};
    rec.wall_ms = 12.5;
    rec.version = "0.1.0";
    return rec;
}

}  // namespace

TEST_CASE("json round trip is byte-identical") {
    const RunRecord rec = sample_record();
    const std::string once = rmtool::record_to_string(rec);
    const RunRecord parsed = rmtool::record_from_json(nlohmann::json::parse(once));
    const std::string twice = rmtool::record_to_string(parsed);
    CHECK(once == twice);
}

TEST_CASE("config hash is stable and sensitive") {
    const RunRecord rec = sample_record();
    const std::string h1 = rmtool::config_hash(rec.config);
    CHECK(h1 == rmtool::config_hash(rec.config));
    CHECK(h1.size() == 16);

    RunConfig other = rec.config;
    other.seed = 8;
    CHECK(rmtool::config_hash(other) != h1);
}

TEST_CASE("csv projection uses the fixed schema") {
    const std::string csv = rmtool::record_csv(sample_record());
    const std::string header = csv.substr(0, csv.find('\n'));
    CHECK(header ==
          "m,r,constraint,tau,t,delta,seed,log2_Z_hat,Z_hat,rate,exact_Z,exact_rate,steps,"
          "converged,wall_ms");
    const std::string row = csv.substr(csv.find('\n') + 1);
    CHECK(row.substr(0, 21) == "4,2,rll:1,5000,50,0.1");
    CHECK(row.find("87.25") != std::string::npos);
    CHECK(row.find("true") != std::string::npos);
}

TEST_CASE("decimal rendering of log2 values") {
    CHECK(rmtool::log2_to_decimal(3.0) == "8");
    CHECK(rmtool::log2_to_decimal(0.0) == "1");
    // log2(2.926e8) = 28.124...: survives the round trip to 4 digits.
    CHECK(rmtool::log2_to_decimal(28.12456776) == "2.926e+08");
    // Beyond double-exact integers: mantissa/exponent form.
    const std::string big = rmtool::log2_to_decimal(141.3277);
    CHECK(big.find("e42") != std::string::npos);
}

TEST_CASE("table row definitions") {
    CHECK(rmtool::table_rows("I").size() == 8);
    CHECK(rmtool::table_rows("II").size() == 7);
    CHECK(rmtool::table_rows("III").size() == 9);
    CHECK(rmtool::table_rows("IV").size() == 3);
    CHECK_THROWS_AS(rmtool::table_rows("V"), std::invalid_argument);

    int estimate_only = 0;
    for (const auto& row : rmtool::table_rows("III")) {
        if (row.exact_z < 0) ++estimate_only;
    }
    CHECK(estimate_only == 3);  // the published '--' rows

    for (const auto& row : rmtool::table_rows("IV")) CHECK(row.long_gated);
}
