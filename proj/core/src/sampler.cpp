#include "rmcount/sampler.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace rmcount {

namespace {
int checked_energy(const Constraint& constraint, const BitVector& x) {
    const int e = constraint.energy(x);
    if (e < 0 || static_cast<std::size_t>(e) > x.length()) {
        throw std::logic_error("constraint energy " + std::to_string(e) +
                               " outside [0, n]; the estimator guarantees require E <= n");
    }
    return e;
}
}  // namespace

double metropolis_acceptance(double beta, int delta_energy) {
    if (delta_energy <= 0) return 1.0;
    return std::exp(-beta * static_cast<double>(delta_energy));
}

MetropolisSampler::MetropolisSampler(const RmCode& code, GibbsParams params)
    : code_(&code), params_(std::move(params)), proposal_(static_cast<std::size_t>(code.n())) {
    if (params_.beta < 0) {
        throw std::invalid_argument("MetropolisSampler: beta must be >= 0");
    }
    accept_.resize(static_cast<std::size_t>(code.n()) + 1);
    for (std::size_t e = 0; e < accept_.size(); ++e) {
        accept_[e] = std::exp(-params_.beta * static_cast<double>(e));
    }
    support_.reserve(static_cast<std::size_t>(code.min_weight()));
}

ChainState MetropolisSampler::make_state(BitVector init) const {
    if (init.length() != static_cast<std::size_t>(code_->n())) {
        throw std::invalid_argument("MetropolisSampler: init length does not match code length");
    }
    ChainState state;
    state.energy = checked_energy(params_.constraint, init);
    state.weight = static_cast<int>(init.popcount());
    state.codeword = std::move(init);
    return state;
}

void MetropolisSampler::step(ChainState& state, RngStream& rng) {
    code_->sample_min_weight_support(rng, support_);

    proposal_ = state.codeword;
    auto words = proposal_.words();
    int weight_delta = 0;
    for (std::uint32_t z : support_) {
        const std::uint64_t mask = 1ull << (z % 64);
        weight_delta += (words[z / 64] & mask) ? -1 : 1;
        words[z / 64] ^= mask;
    }
    const int new_weight = state.weight + weight_delta;

    int new_energy;
    switch (params_.constraint.kind()) {
        case ConstraintKind::kRll:
            new_energy = rll_energy(proposal_, params_.constraint.rll_gap());
            break;
        case ConstraintKind::kConstantWeight:
            new_energy = std::abs(new_weight - params_.constraint.target_weight());
            break;
        default:
            new_energy = checked_energy(params_.constraint, proposal_);
            break;
    }

    const int delta = new_energy - state.energy;
    if (delta > 0) {
        if (rng.next_double() >= accept_[static_cast<std::size_t>(delta)]) {
            return;  // rejected; state unchanged
        }
    }
    std::swap(state.codeword, proposal_);
    state.energy = new_energy;
    state.weight = new_weight;
}

ChainState MetropolisSampler::run(long tau, BitVector init, RngStream& rng) {
    if (tau < 0) {
        throw std::invalid_argument("MetropolisSampler::run: tau must be >= 0");
    }
    ChainState state = make_state(std::move(init));
    for (long i = 0; i < tau; ++i) step(state, rng);
    return state;
}

ChainState metropolis_step(const ChainState& state, const RmCode& code,
                           const GibbsParams& params, RngStream& rng) {
    MetropolisSampler sampler(code, params);
    ChainState next = state;
    sampler.step(next, rng);
    return next;
}

ChainState run_chain(const RmCode& code, const GibbsParams& params, long tau,
                     BitVector init, RngStream& rng) {
    return MetropolisSampler(code, params).run(tau, std::move(init), rng);
}

BitVector default_init(const RmCode& code, InitMode mode, RngStream& rng) {
    if (mode == InitMode::kZero) {
        return BitVector(static_cast<std::size_t>(code.n()));
    }
    BitVector message(static_cast<std::size_t>(code.k()));
    rng.fill_bits(message);
    return code.encode(message);
}

}  // namespace rmcount
