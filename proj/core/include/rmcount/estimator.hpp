#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rmcount/constraint.hpp"
#include "rmcount/rm_code.hpp"
#include "rmcount/sampler.hpp"

namespace rmcount {

// Cooling schedule beta_0 = 0 < beta_1 < ... < beta_length = beta_star with
// uniform step 1/n (the final step may be shorter when beta_star * n is not
// an integer; length = ceil(beta_star * n)).
struct CoolingSchedule {
    int n = 0;
    double beta_star = 0.0;
    int length = 0;

    static CoolingSchedule make(int n, double beta_star);
    double beta(int i) const;
};

struct EstimatorOptions {
    long tau = 10'000;        // Metropolis steps per chain
    int samples_per_step = 100;  // t
    double delta = 1e-3;      // adaptive stopping precision
    long ell_max = 0;         // adaptive iteration cap; 0 means 4 n^3
    int threads = 1;          // 0 means hardware concurrency
    InitMode init = InitMode::kRandom;
    // Algorithm-variant switches, all off for the faithful defaults:
    bool literal_alg3_order = false;  // increment beta before sampling
    bool warm_start = false;          // carry chain states across schedule steps
    bool reuse_chain = false;         // thin one chain per step instead of restarts
};

struct EstimateResult {
    double log2_estimate = 0.0;  // log2 of Z-hat; the canonical value
    double rate = 0.0;           // log2_estimate / n
    std::vector<double> ratio_trace;  // per-step sample means Y_i, each in [1/e, 1]
    long steps_used = 0;
    int samples_per_step = 0;
    long tau = 0;
    std::uint64_t seed = 0;
    double beta_final = 0.0;
    double terminal_mean_energy = 0.0;  // mean energy in the last step's sample
    long first_all_zero_step = -1;      // first step where every sample had E = 0
    bool converged = true;              // adaptive only: stopping test fired

    double zhat() const;  // exp2(log2_estimate); +inf when out of double range
};

// Telescoping product estimator over a fixed schedule: at step i, t chains
// are run at beta_{i-1} and Y_i = mean of exp((beta_{i-1} - beta_i) E).
// log2 Z-hat = k + sum_i log2 Y_i. Chains restart fresh per sample per step
// with streams derived from (seed, step, sample), so results are independent
// of thread count.
EstimateResult estimate_fixed_schedule(const RmCode& code, const Constraint& constraint,
                                       double beta_star, const EstimatorOptions& opts,
                                       std::uint64_t seed);

// Adaptive variant: no schedule length chosen in advance. Each iteration
// samples at the current beta, multiplies the running estimate by Y, then
// advances beta by 1/n, stopping once |curr - prev| = curr_prev (1 - Y) <= delta
// (evaluated in log space, so huge estimates cannot overflow the test).
// Iterations are capped at ell_max; hitting the cap flags the result as
// non-converged but still returns it.
EstimateResult estimate_adaptive(const RmCode& code, const Constraint& constraint,
                                 const EstimatorOptions& opts, std::uint64_t seed);

// Sample budget t* = ceil(16 B ell / epsilon^2) with B = e^2, the bound on
// E[X^2]/E[X]^2 for per-step factors X in [1/e, 1]. With Y_i averaged over t*
// samples, Z-hat lands within (1 +- epsilon) Z_beta* with probability >= 3/4.
struct SampleBudget {
    long ell = 0;
    double epsilon = 0.0;
    double b_constant = 0.0;
    long t_star = 0;
};
SampleBudget sample_budget(long ell, double epsilon);

// Median of T independent estimates (disjoint stream ids), computed on the
// log2 values; boosts the 3/4 success probability towards 1.
struct MedianResult {
    double log2_median = 0.0;
    double rate = 0.0;
    std::vector<EstimateResult> replicas;
};
MedianResult median_amplify(const RmCode& code, const Constraint& constraint,
                            std::optional<double> beta_star, const EstimatorOptions& opts,
                            int replicas, std::uint64_t seed);

// Analytical rate lower bound for (1,inf)-RLL subcodes of RM(m, r):
//   max( log2(C(m-1, <= r-1)) / 2^m , k/2^m - 3/8 - 1/2^{m+1} ).
// Published tables are inconsistent about whether the first branch carries
// the log2; log2_first_branch = false selects the alternate reading.
double rll_rate_lower_bound(int m, int r, bool log2_first_branch = true);

}  // namespace rmcount
