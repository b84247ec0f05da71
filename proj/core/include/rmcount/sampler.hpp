#pragma once

#include <cstdint>
#include <vector>

#include "rmcount/constraint.hpp"
#include "rmcount/rm_code.hpp"
#include "rmcount/rng.hpp"

namespace rmcount {

// Target Gibbs distribution p_beta(c) proportional to exp(-beta * E(c)) over
// the codewords of an RM code.
struct GibbsParams {
    double beta = 0.0;
    Constraint constraint;
};

struct ChainState {
    BitVector codeword;
    int energy = 0;
    int weight = 0;
};

enum class InitMode { kZero, kRandom };

// min(1, exp(-beta * delta_energy)).
double metropolis_acceptance(double beta, int delta_energy);

// Nearest-neighbour Metropolis chain: the proposal adds a uniformly random
// minimum-weight codeword to the current codeword, which keeps every state
// inside the code; acceptance follows the usual min(1, exp(-beta dE)) rule.
// The proposal distribution is symmetric, so p_beta is stationary.
//
// One step consumes exactly one minimum-weight draw and at most one uniform
// variate (none when dE <= 0). A sampler instance owns scratch buffers and an
// acceptance table for its fixed beta; it is cheap to construct and must not
// be shared across threads.
class MetropolisSampler {
public:
    MetropolisSampler(const RmCode& code, GibbsParams params);

    ChainState make_state(BitVector init) const;

    void step(ChainState& state, RngStream& rng);

    // tau steps from init; returns the terminal state.
    ChainState run(long tau, BitVector init, RngStream& rng);

private:
    const RmCode* code_;
    GibbsParams params_;
    std::vector<double> accept_;  // accept_[dE] = exp(-beta * dE)
    std::vector<std::uint32_t> support_;
    BitVector proposal_;
};

// Single-step and whole-chain conveniences matching the class behaviour.
ChainState metropolis_step(const ChainState& state, const RmCode& code,
                           const GibbsParams& params, RngStream& rng);
ChainState run_chain(const RmCode& code, const GibbsParams& params, long tau,
                     BitVector init, RngStream& rng);

// kZero: the all-zero codeword (satisfies every RLL constraint).
// kRandom: encode of a uniform message, i.e. a uniform codeword.
BitVector default_init(const RmCode& code, InitMode mode, RngStream& rng);

}  // namespace rmcount
