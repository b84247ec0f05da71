#include "doctest.h"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmcount/oracle.hpp"
#include "rmcount/rm_code.hpp"

using rmcount::Constraint;
using rmcount::RmCode;

TEST_CASE("RM(3,1) exact values") {
    const RmCode code(3, 1);

    const auto weights = rmcount::weight_enumerator(code);
    CHECK(weights[0] == 1);
    CHECK(weights[4] == 14);
    CHECK(weights[8] == 1);
    for (std::size_t w : {1u, 2u, 3u, 5u, 6u, 7u}) CHECK(weights[w] == 0);

    // Independently computed: 4 codewords satisfy (1,inf)-RLL and the
    // violation counts over the other 12 split as below.
    const auto hist = rmcount::energy_histogram(code, Constraint::rll(1));
    CHECK(hist[0] == 4);
    CHECK(hist[1] == 4);
    CHECK(hist[2] == 4);
    CHECK(hist[3] == 3);
    CHECK(hist[7] == 1);
    CHECK(rmcount::exact_constrained_count(code, Constraint::rll(1)) == 4);
    CHECK(rmcount::exact_constrained_count(code, Constraint::rll(2)) == 1);

    CHECK(rmcount::partition_function(hist, 0.0) == doctest::Approx(16.0).epsilon(1e-15));
    CHECK(rmcount::partition_function(hist, 1.0) ==
          doctest::Approx(6.163131984701367).epsilon(1e-12));
    CHECK(rmcount::partition_function(hist, 4.0) ==
          doctest::Approx(4.074622838704298).epsilon(1e-12));
    CHECK(rmcount::partition_function(hist, 8.0) ==
          doctest::Approx(4.001342300765563).epsilon(1e-12));
}

TEST_CASE("RM(4,2) and RM(4,1) exact values") {
    const RmCode code(4, 2);
    CHECK(rmcount::exact_constrained_count(code, Constraint::rll(1)) == 83);
    CHECK(rmcount::exact_constrained_count(code, Constraint::rll(2)) == 37);

    const auto weights = rmcount::weight_enumerator(code);
    CHECK(weights[4] == 140);
    CHECK(weights[6] == 448);
    CHECK(weights[8] == 870);

    const auto w41 = rmcount::weight_enumerator(RmCode(4, 1));
    CHECK(w41[0] == 1);
    CHECK(w41[8] == 30);
    CHECK(w41[16] == 1);
    CHECK(rmcount::exact_constrained_count(RmCode(4, 1), Constraint::rll(2)) == 1);
}

TEST_CASE("gray walk visits each codeword exactly once") {
    const RmCode code(3, 1);
    const auto table = rmcount::exact_gibbs_distribution(code, Constraint::rll(1), 0.0);
    std::set<std::string> seen;
    for (const auto& cw : table.codewords) seen.insert(cw.to_string());
    CHECK(seen.size() == 16);
    for (const auto& cw : table.codewords) CHECK(code.contains(cw));
}

TEST_CASE("gibbs table normalization and limits") {
    const RmCode code(3, 1);
    const Constraint rll = Constraint::rll(1);

    const auto uniform = rmcount::exact_gibbs_distribution(code, rll, 0.0);
    double sum = 0.0;
    for (double p : uniform.probabilities) {
        CHECK(p == doctest::Approx(1.0 / 16).epsilon(1e-12));
        sum += p;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

    // Large beta: uniform over the 4 zero-energy codewords.
    const auto cold = rmcount::exact_gibbs_distribution(code, rll, 60.0);
    sum = 0.0;
    for (std::size_t i = 0; i < cold.probabilities.size(); ++i) {
        sum += cold.probabilities[i];
        if (cold.energies[i] == 0) {
            CHECK(cold.probabilities[i] == doctest::Approx(0.25).epsilon(1e-9));
        } else {
            CHECK(cold.probabilities[i] < 1e-20);
        }
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partition function is non-increasing and log-convex in beta") {
    const auto hist = rmcount::energy_histogram(RmCode(4, 2), Constraint::rll(1));
    const std::vector<double> betas{0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0};
    std::vector<double> z;
    for (double b : betas) z.push_back(rmcount::partition_function(hist, b));
    for (std::size_t i = 1; i < z.size(); ++i) CHECK(z[i] <= z[i - 1]);
    // Log-convexity on an evenly spaced triple.
    const double a = std::log(rmcount::partition_function(hist, 1.0));
    const double m = std::log(rmcount::partition_function(hist, 1.5));
    const double c = std::log(rmcount::partition_function(hist, 2.0));
    CHECK(2 * m <= a + c + 1e-12);
}

TEST_CASE("constant-weight counts equal the weight enumerator") {
    const RmCode code(4, 2);
    const auto weights = rmcount::weight_enumerator(code);
    for (int omega = 0; omega <= 16; ++omega) {
        CHECK(rmcount::exact_constrained_count(code, Constraint::constant_weight(omega)) ==
              weights[static_cast<std::size_t>(omega)]);
    }
}

TEST_CASE("parallel scan matches single-threaded scan") {
    const RmCode code(5, 2);
    const Constraint rll = Constraint::rll(1);
    CHECK(rmcount::energy_histogram(code, rll, 1) == rmcount::energy_histogram(code, rll, 2));
    CHECK(rmcount::energy_histogram(code, rll, 1) == rmcount::energy_histogram(code, rll, 7));
    CHECK(rmcount::weight_enumerator(code, 3) == rmcount::weight_enumerator(code, 1));
    CHECK(rmcount::exact_constrained_count(code, rll, 2) == 259);
    CHECK(rmcount::exact_constrained_count(code, Constraint::rll(2), 2) == 81);
}

TEST_CASE("resource bounds") {
    CHECK_THROWS_AS(rmcount::weight_enumerator(RmCode(7, 2)), std::runtime_error);
    CHECK_THROWS_AS(rmcount::exact_constrained_count(RmCode(5, 4), Constraint::rll(1), 1, true),
                    std::runtime_error);
    CHECK_THROWS_AS(rmcount::exact_gibbs_distribution(RmCode(5, 3), Constraint::rll(1), 1.0),
                    std::runtime_error);
}
