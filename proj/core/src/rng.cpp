#include "rmcount/rng.hpp"

#include <stdexcept>

namespace rmcount {

std::uint64_t RngStream::next_below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("RngStream::next_below: bound must be positive");
    }
    // Reject the short final partial block of the 2^64 range.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = next_u64();
        if (x >= threshold) return x % bound;
    }
}

void RngStream::fill_bits(BitVector& v) {
    auto words = v.words();
    for (auto& w : words) w = next_u64();
    if (v.length() % 64 != 0 && !words.empty()) {
        words.back() &= (1ull << (v.length() % 64)) - 1;
    }
}

}  // namespace rmcount
