#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rmcount/constraint.hpp"
#include "rmcount/rm_code.hpp"

namespace rmcount {

// Exact brute-force computations over all 2^k codewords of an enumerable
// code. The walk visits messages in Gray-code order, so each codeword is one
// generator-row xor away from the previous one; with several threads the
// message space is split into contiguous Gray segments whose histograms merge
// exactly. All of this is gated on k <= 26 (k <= 29 with allow_k29).

// Counts per weight 0..n.
std::vector<std::uint64_t> weight_enumerator(const RmCode& code, int threads = 1,
                                             bool allow_k29 = false);

// Counts per energy level 0..n for the given constraint. Entry 0 is the
// exact constrained count Z; any partition function value follows in O(n).
std::vector<std::uint64_t> energy_histogram(const RmCode& code, const Constraint& constraint,
                                            int threads = 1, bool allow_k29 = false);

// Z = |C intersect A| = energy_histogram(...)[0].
std::uint64_t exact_constrained_count(const RmCode& code, const Constraint& constraint,
                                      int threads = 1, bool allow_k29 = false);

// Z_beta = sum_E hist[E] * exp(-beta * E).
double partition_function(const std::vector<std::uint64_t>& energy_hist, double beta);
double exact_partition_function(const RmCode& code, const Constraint& constraint, double beta,
                                int threads = 1, bool allow_k29 = false);

// Fully materialized Gibbs distribution over codewords (Gray-walk order).
// Ground truth for sampler total-variation tests; k <= 16 only.
struct GibbsTable {
    std::vector<BitVector> codewords;
    std::vector<int> energies;
    std::vector<double> probabilities;
    double z_beta = 0.0;
    double beta = 0.0;
};
GibbsTable exact_gibbs_distribution(const RmCode& code, const Constraint& constraint,
                                    double beta);

// Aggregate for reporting layers.
struct OracleResult {
    std::uint64_t exact_count = 0;
    std::vector<std::uint64_t> weight_enum;                // empty unless requested
    std::vector<std::pair<double, double>> partition_values;  // (beta, Z_beta)
};

}  // namespace rmcount
