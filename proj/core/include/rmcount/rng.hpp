#pragma once

#include <cstdint>

#include "rmcount/bitvec.hpp"

namespace rmcount {

// Counter-based splittable random stream (splitmix64-style output function).
//
// A stream is identified by a 64-bit key derived from the seed and the
// derivation path: root(seed).derive(a).derive(b)... encodes the hierarchical
// stream id (phase, schedule index, sample index, ...). Two streams built from
// the same seed along the same path produce bit-identical sequences regardless
// of scheduling; sibling streams are statistically independent.
//
// derive() depends only on the key, not on how many values were consumed, so
// child streams can be handed to concurrent tasks before or after the parent
// is used.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : key_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

    RngStream derive(std::uint64_t component) const {
        RngStream child(*this);
        child.key_ = mix(key_ ^ mix(component ^ 0xd1b54a32d192ed03ull));
        child.counter_ = 0;
        return child;
    }

    std::uint64_t next_u64() {
        ++counter_;
        return mix(key_ + 0x9e3779b97f4a7c15ull * counter_);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound); unbiased via rejection.
    std::uint64_t next_below(std::uint64_t bound);

    // Every coordinate iid Bernoulli(1/2); consumes exactly word_count() draws.
    void fill_bits(BitVector& v);

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace rmcount
