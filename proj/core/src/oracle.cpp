#include "rmcount/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "rmcount/parallel.hpp"

namespace rmcount {

namespace {

void check_exhaustive_bound(const RmCode& code, bool allow_k29) {
    const int bound = allow_k29 ? kMaxExhaustiveK : kDefaultExhaustiveK;
    if (code.k() > bound) {
        throw std::runtime_error(
            "exhaustive oracle: k = " + std::to_string(code.k()) + " exceeds bound " +
            std::to_string(bound) +
            (allow_k29 ? "" : " (k in (26, 29] requires the allow-k29 override)"));
    }
}

std::uint64_t gray(std::uint64_t t) { return t ^ (t >> 1); }

struct Histograms {
    std::vector<std::uint64_t> weight;
    std::vector<std::uint64_t> energy;
};

// One pass over all codewords, accumulating whichever histograms are wanted.
Histograms scan(const RmCode& code, const Constraint* constraint, bool want_weights,
                int threads, bool allow_k29) {
    check_exhaustive_bound(code, allow_k29);
    const std::size_t levels = static_cast<std::size_t>(code.n()) + 1;
    const std::uint64_t total = 1ull << code.k();
    threads = resolve_threads(threads);
    const std::uint64_t segments =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total);

    std::vector<Histograms> partial(segments);
    parallel_for(segments, static_cast<int>(segments), [&](std::size_t s) {
        Histograms& h = partial[s];
        if (want_weights) h.weight.assign(levels, 0);
        if (constraint != nullptr) h.energy.assign(levels, 0);

        const std::uint64_t begin = total / segments * s + std::min<std::uint64_t>(s, total % segments);
        const std::uint64_t end =
            total / segments * (s + 1) + std::min<std::uint64_t>(s + 1, total % segments);

        BitVector message(static_cast<std::size_t>(code.k()));
        const std::uint64_t g = gray(begin);
        for (int b = 0; b < code.k(); ++b) {
            if ((g >> b) & 1ull) message.set(static_cast<std::size_t>(b), true);
        }
        BitVector current = code.encode(message);

        for (std::uint64_t t = begin; t < end; ++t) {
            if (want_weights) {
                ++h.weight[current.popcount()];
            }
            if (constraint != nullptr) {
                const int e = constraint->energy(current);
                if (e < 0 || static_cast<std::size_t>(e) >= levels) {
                    throw std::logic_error("oracle scan: energy outside [0, n]");
                }
                ++h.energy[static_cast<std::size_t>(e)];
            }
            if (t + 1 < end) {
                current ^= code.generator().row(
                    static_cast<std::size_t>(std::countr_zero(t + 1)));
            }
        }
    });

    Histograms result = std::move(partial[0]);
    for (std::size_t s = 1; s < segments; ++s) {
        for (std::size_t i = 0; i < result.weight.size(); ++i) {
            result.weight[i] += partial[s].weight[i];
        }
        for (std::size_t i = 0; i < result.energy.size(); ++i) {
            result.energy[i] += partial[s].energy[i];
        }
    }
    return result;
}

}  // namespace

std::vector<std::uint64_t> weight_enumerator(const RmCode& code, int threads, bool allow_k29) {
    return scan(code, nullptr, true, threads, allow_k29).weight;
}

std::vector<std::uint64_t> energy_histogram(const RmCode& code, const Constraint& constraint,
                                            int threads, bool allow_k29) {
    return scan(code, &constraint, false, threads, allow_k29).energy;
}

std::uint64_t exact_constrained_count(const RmCode& code, const Constraint& constraint,
                                      int threads, bool allow_k29) {
    return energy_histogram(code, constraint, threads, allow_k29)[0];
}

double partition_function(const std::vector<std::uint64_t>& energy_hist, double beta) {
    double z = 0.0;
    for (std::size_t e = 0; e < energy_hist.size(); ++e) {
        if (energy_hist[e] != 0) {
            z += static_cast<double>(energy_hist[e]) * std::exp(-beta * static_cast<double>(e));
        }
    }
    return z;
}

double exact_partition_function(const RmCode& code, const Constraint& constraint, double beta,
                                int threads, bool allow_k29) {
    return partition_function(energy_histogram(code, constraint, threads, allow_k29), beta);
}

GibbsTable exact_gibbs_distribution(const RmCode& code, const Constraint& constraint,
                                    double beta) {
    if (code.k() > 16) {
        throw std::runtime_error("exact_gibbs_distribution: k = " + std::to_string(code.k()) +
                                 " exceeds the materialization bound 16");
    }
    GibbsTable table;
    table.beta = beta;
    const std::uint64_t total = 1ull << code.k();
    table.codewords.reserve(total);
    table.energies.reserve(total);

    BitVector current(static_cast<std::size_t>(code.n()));
    for (std::uint64_t t = 0;;) {
        const int e = constraint.energy(current);
        table.codewords.push_back(current);
        table.energies.push_back(e);
        if (++t == total) break;
        current ^= code.generator().row(static_cast<std::size_t>(std::countr_zero(t)));
    }

    table.probabilities.resize(total);
    double z = 0.0;
    for (std::uint64_t i = 0; i < total; ++i) {
        z += std::exp(-beta * static_cast<double>(table.energies[i]));
    }
    table.z_beta = z;
    for (std::uint64_t i = 0; i < total; ++i) {
        table.probabilities[i] = std::exp(-beta * static_cast<double>(table.energies[i])) / z;
    }
    return table;
}

}  // namespace rmcount
