#pragma once

// MacWilliams transform over GF(2): derives a code's weight enumerator from
// its dual's. Exact signed 128-bit arithmetic; n <= 64 keeps every
// intermediate far below the overflow line.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace testmw {

inline std::vector<std::uint64_t> macwilliams_transform(
    const std::vector<std::uint64_t>& dual_enum, int n, int dual_k) {
    if (n > 64) throw std::invalid_argument("macwilliams_transform: n > 64");
    // Pascal's triangle in 128-bit; C(64, 32) still fits in 63 bits.
    std::vector<std::vector<__int128>> choose(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        choose[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j) {
            choose[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                choose[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                choose[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        }
    }
    auto binom = [&](int a, int b) -> __int128 {
        if (b < 0 || b > a || a < 0) return 0;
        return choose[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    };

    std::vector<std::uint64_t> result(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 0; j <= n; ++j) {
        __int128 total = 0;
        for (int i = 0; i <= n; ++i) {
            const auto count = dual_enum[static_cast<std::size_t>(i)];
            if (count == 0) continue;
            __int128 krawtchouk = 0;
            for (int s = 0; s <= j && s <= i; ++s) {
                const __int128 term = binom(i, s) * binom(n - i, j - s);
                krawtchouk += (s % 2 == 0) ? term : -term;
            }
            total += static_cast<__int128>(count) * krawtchouk;
        }
        const __int128 denom = static_cast<__int128>(1) << dual_k;
        if (total % denom != 0 || total < 0) {
            throw std::logic_error("macwilliams_transform: non-integral enumerator entry");
        }
        result[static_cast<std::size_t>(j)] = static_cast<std::uint64_t>(total / denom);
    }
    return result;
}

}  // namespace testmw
