#include "rmcount/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rmcount/parallel.hpp"

namespace rmcount {

namespace {

// Derivation phases keeping fixed-schedule, adaptive, and median-replica
// streams disjoint for any one seed.
constexpr std::uint64_t kPhaseFixed = 1;
constexpr std::uint64_t kPhaseAdaptive = 2;
constexpr std::uint64_t kPhaseMedian = 3;

void check_common(const EstimatorOptions& opts) {
    if (opts.tau < 1) throw std::invalid_argument("estimator: tau must be >= 1");
    if (opts.samples_per_step < 1) throw std::invalid_argument("estimator: t must be >= 1");
}

// Draws the step's t sample energies from p_beta. Default mode runs one fresh
// chain per sample (stream = base.derive(sample index)); warm_start reuses the
// previous step's terminal states as inits; reuse_chain thins a single chain.
void draw_step_samples(const RmCode& code, const Constraint& constraint, double beta,
                       const EstimatorOptions& opts, const RngStream& step_base,
                       std::vector<ChainState>& carried, std::vector<int>& energies) {
    const int t = opts.samples_per_step;
    energies.assign(static_cast<std::size_t>(t), 0);

    if (opts.reuse_chain) {
        RngStream rng = step_base.derive(0);
        MetropolisSampler sampler(code, {beta, constraint});
        ChainState state =
            (opts.warm_start && !carried.empty())
                ? sampler.make_state(std::move(carried[0].codeword))
                : sampler.make_state(default_init(code, opts.init, rng));
        for (long i = 0; i < opts.tau; ++i) sampler.step(state, rng);
        const long thin = std::max<long>(1, opts.tau / t);
        for (int j = 0; j < t; ++j) {
            for (long i = 0; i < thin; ++i) sampler.step(state, rng);
            energies[static_cast<std::size_t>(j)] = state.energy;
        }
        carried.assign(1, std::move(state));
        return;
    }

    const bool warm = opts.warm_start && !carried.empty();
    std::vector<ChainState> terminal(static_cast<std::size_t>(t));
    parallel_for(static_cast<std::size_t>(t), opts.threads, [&](std::size_t j) {
        RngStream rng = step_base.derive(j);
        MetropolisSampler sampler(code, {beta, constraint});
        BitVector init = warm ? carried[j].codeword : default_init(code, opts.init, rng);
        ChainState state = sampler.make_state(std::move(init));
        for (long i = 0; i < opts.tau; ++i) sampler.step(state, rng);
        energies[j] = state.energy;
        terminal[j] = std::move(state);
    });
    if (opts.warm_start) carried = std::move(terminal);
}

// Sample mean of exp(step_delta * E); step_delta <= 0.
double step_ratio(const std::vector<int>& energies, double step_delta) {
    double sum = 0.0;
    for (int e : energies) sum += std::exp(step_delta * static_cast<double>(e));
    const double y = sum / static_cast<double>(energies.size());
    // E in [0, n] and a schedule step of at most 1/n keep each factor, and
    // hence the mean, inside [1/e, 1].
    if (!(y >= std::exp(-1.0) - 1e-12) || y > 1.0) {
        throw std::logic_error("estimator: step ratio outside [1/e, 1]");
    }
    return y;
}

bool all_zero(const std::vector<int>& energies) {
    return std::all_of(energies.begin(), energies.end(), [](int e) { return e == 0; });
}

double mean_energy(const std::vector<int>& energies) {
    double s = 0.0;
    for (int e : energies) s += e;
    return s / static_cast<double>(energies.size());
}

EstimateResult estimate_fixed_impl(const RmCode& code, const Constraint& constraint,
                                   double beta_star, const EstimatorOptions& opts,
                                   const RngStream& base, std::uint64_t seed) {
    check_common(opts);
    const CoolingSchedule sched = CoolingSchedule::make(code.n(), beta_star);

    EstimateResult result;
    result.samples_per_step = opts.samples_per_step;
    result.tau = opts.tau;
    result.seed = seed;
    result.log2_estimate = static_cast<double>(code.k());
    result.ratio_trace.reserve(static_cast<std::size_t>(sched.length));

    std::vector<ChainState> carried;
    std::vector<int> energies;
    for (int i = 1; i <= sched.length; ++i) {
        const double beta_prev = sched.beta(i - 1);
        const double beta_i = sched.beta(i);
        draw_step_samples(code, constraint, beta_prev, opts,
                          base.derive(static_cast<std::uint64_t>(i)), carried, energies);
        const double y = step_ratio(energies, beta_prev - beta_i);
        result.ratio_trace.push_back(y);
        result.log2_estimate += std::log2(y);
        if (result.first_all_zero_step < 0 && all_zero(energies)) {
            result.first_all_zero_step = i;
        }
        if (i == sched.length) result.terminal_mean_energy = mean_energy(energies);
    }
    result.steps_used = sched.length;
    result.beta_final = beta_star;
    result.rate = result.log2_estimate / static_cast<double>(code.n());
    result.converged = true;
    return result;
}

EstimateResult estimate_adaptive_impl(const RmCode& code, const Constraint& constraint,
                                      const EstimatorOptions& opts, const RngStream& base,
                                      std::uint64_t seed) {
    check_common(opts);
    if (!(opts.delta > 0.0)) throw std::invalid_argument("estimator: delta must be > 0");
    const double n = static_cast<double>(code.n());
    const long ell_max = opts.ell_max > 0
                             ? opts.ell_max
                             : 4L * code.n() * static_cast<long>(code.n()) * code.n();
    const double log2_delta = std::log2(opts.delta);

    EstimateResult result;
    result.samples_per_step = opts.samples_per_step;
    result.tau = opts.tau;
    result.seed = seed;
    result.log2_estimate = static_cast<double>(code.k());
    result.converged = false;

    double beta = 0.0;
    std::vector<ChainState> carried;
    std::vector<int> energies;
    long step = 0;
    while (step < ell_max) {
        ++step;
        if (opts.literal_alg3_order) beta += 1.0 / n;
        draw_step_samples(code, constraint, beta, opts,
                          base.derive(static_cast<std::uint64_t>(step)), carried, energies);
        if (!opts.literal_alg3_order) beta += 1.0 / n;

        const double y = step_ratio(energies, -1.0 / n);
        const double prev_log2 = result.log2_estimate;
        result.ratio_trace.push_back(y);
        result.log2_estimate += std::log2(y);
        result.terminal_mean_energy = mean_energy(energies);
        if (result.first_all_zero_step < 0 && all_zero(energies)) {
            result.first_all_zero_step = step;
        }

        // Stopping test |curr - prev| <= delta, i.e. prev * (1 - Y) <= delta,
        // evaluated as log2(prev) + log2(1 - Y) <= log2(delta) so astronomically
        // large running estimates cannot overflow.
        if (y == 1.0 || prev_log2 + std::log2(1.0 - y) <= log2_delta) {
            result.converged = true;
            break;
        }
    }
    result.steps_used = step;
    result.beta_final = beta;
    result.rate = result.log2_estimate / n;
    return result;
}

}  // namespace

CoolingSchedule CoolingSchedule::make(int n, double beta_star) {
    if (n < 1) throw std::invalid_argument("CoolingSchedule: n must be >= 1");
    if (!(beta_star > 0.0)) throw std::invalid_argument("CoolingSchedule: beta_star must be > 0");
    CoolingSchedule s;
    s.n = n;
    s.beta_star = beta_star;
    // Nudge below the ceiling so an exactly representable beta_star * n does
    // not gain a spurious extra step from rounding.
    s.length = static_cast<int>(std::ceil(beta_star * n - 1e-9));
    s.length = std::max(s.length, 1);
    return s;
}

double CoolingSchedule::beta(int i) const {
    if (i < 0 || i > length) throw std::out_of_range("CoolingSchedule::beta: bad index");
    return std::min(static_cast<double>(i) / static_cast<double>(n), beta_star);
}

double EstimateResult::zhat() const { return std::exp2(log2_estimate); }

EstimateResult estimate_fixed_schedule(const RmCode& code, const Constraint& constraint,
                                       double beta_star, const EstimatorOptions& opts,
                                       std::uint64_t seed) {
    return estimate_fixed_impl(code, constraint, beta_star, opts,
                               RngStream(seed).derive(kPhaseFixed), seed);
}

EstimateResult estimate_adaptive(const RmCode& code, const Constraint& constraint,
                                 const EstimatorOptions& opts, std::uint64_t seed) {
    return estimate_adaptive_impl(code, constraint, opts,
                                  RngStream(seed).derive(kPhaseAdaptive), seed);
}

SampleBudget sample_budget(long ell, double epsilon) {
    if (ell < 1) throw std::invalid_argument("sample_budget: ell must be >= 1");
    if (!(epsilon > 0.0) || epsilon > 1.0) {
        throw std::invalid_argument("sample_budget: epsilon must be in (0, 1]");
    }
    SampleBudget b;
    b.ell = ell;
    b.epsilon = epsilon;
    b.b_constant = std::exp(2.0);
    b.t_star = static_cast<long>(
        std::ceil(16.0 * b.b_constant * static_cast<double>(ell) / (epsilon * epsilon)));
    return b;
}

MedianResult median_amplify(const RmCode& code, const Constraint& constraint,
                            std::optional<double> beta_star, const EstimatorOptions& opts,
                            int replicas, std::uint64_t seed) {
    if (replicas < 1) throw std::invalid_argument("median_amplify: replicas must be >= 1");
    MedianResult result;
    result.replicas.reserve(static_cast<std::size_t>(replicas));
    const RngStream root =
        RngStream(seed).derive(kPhaseMedian).derive(beta_star ? kPhaseFixed : kPhaseAdaptive);
    for (int rep = 0; rep < replicas; ++rep) {
        const RngStream base = root.derive(static_cast<std::uint64_t>(rep));
        result.replicas.push_back(
            beta_star ? estimate_fixed_impl(code, constraint, *beta_star, opts, base, seed)
                      : estimate_adaptive_impl(code, constraint, opts, base, seed));
    }
    std::vector<double> values;
    values.reserve(result.replicas.size());
    for (const auto& r : result.replicas) values.push_back(r.log2_estimate);
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    result.log2_median = (values.size() % 2 == 1)
                             ? values[mid]
                             : 0.5 * (values[mid - 1] + values[mid]);
    result.rate = result.log2_median / static_cast<double>(code.n());
    return result;
}

double rll_rate_lower_bound(int m, int r, bool log2_first_branch) {
    if (m < 1 || r < 1 || r > m) {
        throw std::invalid_argument("rll_rate_lower_bound: need 1 <= r <= m");
    }
    const double n = std::exp2(m);
    // C(m-1, <= r-1); fits in 64 bits for every m this library accepts.
    std::uint64_t c = 0;
    std::uint64_t term = 1;
    for (int i = 0; i <= r - 1; ++i) {
        c += term;
        term = term * static_cast<std::uint64_t>(m - 1 - i) / static_cast<std::uint64_t>(i + 1);
    }
    const double branch1 =
        (log2_first_branch ? std::log2(static_cast<double>(c)) : static_cast<double>(c)) / n;
    const double rate = static_cast<double>(rm_dimension(m, r)) / n;
    const double branch2 = rate - 3.0 / 8.0 - std::exp2(-(m + 1));
    return std::max(branch1, branch2);
}

}  // namespace rmcount
