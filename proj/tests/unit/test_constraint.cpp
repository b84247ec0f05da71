#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "rmcount/constraint.hpp"
#include "rmcount/rng.hpp"

using rmcount::BitVector;
using rmcount::Constraint;
using rmcount::RngStream;

namespace {

// Direct membership predicate: at least d zeros between successive ones.
bool rll_member(const BitVector& x, int d) {
    long prev = -1;
    for (std::size_t i = 0; i < x.length(); ++i) {
        if (!x.get(i)) continue;
        if (prev >= 0 && static_cast<long>(i) - prev <= d) return false;
        prev = static_cast<long>(i);
    }
    return true;
}

// Per-bit reference for the violation count.
int rll_energy_reference(const BitVector& x, int d) {
    const long n = static_cast<long>(x.length());
    int energy = 0;
    for (long j = 0; j + 1 < n; ++j) {
        if (!x.get(static_cast<std::size_t>(j))) continue;
        for (long i = 1; i <= d && j + i < n; ++i) {
            if (x.get(static_cast<std::size_t>(j + i))) {
                ++energy;
                break;
            }
        }
    }
    return energy;
}

BitVector from_index(std::uint32_t bits, std::size_t n) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
        if ((bits >> i) & 1u) v.set(i, true);
    }
    return v;
}

}  // namespace

TEST_CASE("rll energy examples") {
    BitVector alternating(12);
    for (std::size_t i = 1; i < 12; i += 2) alternating.set(i, true);
    CHECK(rmcount::rll_energy(alternating, 1) == 0);

    CHECK(rmcount::rll_energy(BitVector::from_string("11000000"), 1) == 1);

    for (std::size_t n : {4u, 16u, 130u}) {
        CHECK(rmcount::rll_energy(BitVector::ones(n), 1) == static_cast<int>(n) - 1);
    }

    // A trailing pair still violates when its first index is past n - d.
    CHECK(rmcount::rll_energy(BitVector::from_string("0011"), 2) == 1);

    CHECK_THROWS_AS(rmcount::rll_energy(BitVector::zeros(4), 0), std::invalid_argument);
}

TEST_CASE("constant-weight energy examples") {
    BitVector w4(16);
    for (std::size_t i = 0; i < 4; ++i) w4.set(4 * i, true);
    CHECK(rmcount::constant_weight_energy(w4, 4) == 0);
    CHECK(rmcount::constant_weight_energy(BitVector::zeros(16), 4) == 4);
    CHECK(rmcount::constant_weight_energy(BitVector::ones(16), 6) == 10);
    CHECK_THROWS_AS(rmcount::constant_weight_energy(BitVector::zeros(8), 9),
                    std::invalid_argument);
    CHECK_THROWS_AS(rmcount::constant_weight_energy(BitVector::zeros(8), -1),
                    std::invalid_argument);
}

TEST_CASE("is_satisfied") {
    const auto rll1 = Constraint::rll(1);
    CHECK(rll1.is_satisfied(BitVector::from_string("0101")));
    CHECK_FALSE(rll1.is_satisfied(BitVector::from_string("0110")));

    const auto weight8 = Constraint::constant_weight(8);
    BitVector v(32);
    for (std::size_t i = 0; i < 8; ++i) v.set(3 * i, true);
    CHECK(weight8.is_satisfied(v));
}

TEST_CASE("zero-set equivalence, exhaustive over short strings") {
    for (int d = 1; d <= 3; ++d) {
        for (std::size_t n = 1; n <= 14; ++n) {
            for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
                const BitVector x = from_index(bits, n);
                const int e = rmcount::rll_energy(x, d);
                CHECK(e == rll_energy_reference(x, d));
                CHECK((e == 0) == rll_member(x, d));
            }
        }
    }
}

TEST_CASE("word-parallel path matches reference on long random strings") {
    RngStream rng(77);
    for (int d : {1, 2, 3, 5, 17, 63, 64, 70}) {
        for (int trial = 0; trial < 40; ++trial) {
            BitVector x(300);
            rng.fill_bits(x);
            CHECK(rmcount::rll_energy(x, d) == rll_energy_reference(x, d));
        }
    }
}

TEST_CASE("clearing a one never increases rll energy") {
    RngStream rng(100);
    for (int trial = 0; trial < 100; ++trial) {
        BitVector x(90);
        rng.fill_bits(x);
        const int base = rmcount::rll_energy(x, 2);
        for (std::size_t i = 0; i < 90; ++i) {
            if (!x.get(i)) continue;
            BitVector y = x;
            y.set(i, false);
            CHECK(rmcount::rll_energy(y, 2) <= base);
        }
    }
}

TEST_CASE("complement symmetry and bounds") {
    RngStream rng(101);
    const int n = 64;
    for (int trial = 0; trial < 100; ++trial) {
        BitVector x(n);
        rng.fill_bits(x);
        const BitVector complement = x ^ BitVector::ones(n);
        const int w = static_cast<int>(x.popcount());
        for (int omega : {0, 5, 32, 64}) {
            CHECK(rmcount::constant_weight_energy(complement, omega) == std::abs(n - w - omega));
            CHECK(rmcount::constant_weight_energy(x, omega) <= std::max(omega, n - omega));
        }
        CHECK(rmcount::rll_energy(x, 2) <= n - 1);
    }
}

TEST_CASE("constraint parsing") {
    CHECK(Constraint::parse("rll:2").rll_gap() == 2);
    CHECK(Constraint::parse("weight:80").target_weight() == 80);
    CHECK(Constraint::parse("rll:1").name() == "rll:1");
    for (const char* bad : {"rll", "rll:", "rll:x", "weight:", "foo:3", "weight:-2", "rll:0", ""}) {
        CHECK_THROWS_AS(Constraint::parse(bad), std::invalid_argument);
    }
}

TEST_CASE("custom constraints plug in") {
    const auto even = Constraint::custom(
        "even-weight", [](const BitVector& x) { return static_cast<int>(x.popcount() % 2); });
    CHECK(even.kind() == rmcount::ConstraintKind::kCustom);
    CHECK(even.is_satisfied(BitVector::from_string("0110")));
    CHECK_FALSE(even.is_satisfied(BitVector::from_string("0111")));
    CHECK_THROWS_AS(even.rll_gap(), std::logic_error);
}
