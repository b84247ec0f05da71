#include "rmcount/constraint.hpp"

#include <bit>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace rmcount {

int rll_energy(const BitVector& x, int d) {
    if (d < 1) {
        throw std::invalid_argument("rll_energy: d must be >= 1, got " + std::to_string(d));
    }
    const auto words = x.words();
    const std::size_t nw = words.size();
    if (nw == 0) return 0;

    if (d < 64) {
        // Word-parallel: a set bit at j violates iff (x >> 1 | ... | x >> d)
        // also has a 1 at j. Tail bits are zero, so no end masking is needed.
        int energy = 0;
        for (std::size_t q = 0; q < nw; ++q) {
            const std::uint64_t hi = (q + 1 < nw) ? words[q + 1] : 0;
            std::uint64_t within = 0;
            for (int i = 1; i <= d; ++i) {
                within |= (words[q] >> i) | (hi << (64 - i));
            }
            energy += std::popcount(words[q] & within);
        }
        return energy;
    }

    // Wide-gap fallback: count consecutive set bits closer than d + 1 apart.
    int energy = 0;
    std::ptrdiff_t prev = -1;
    for (std::size_t q = 0; q < nw; ++q) {
        std::uint64_t w = words[q];
        while (w != 0) {
            const std::ptrdiff_t pos =
                static_cast<std::ptrdiff_t>(q) * 64 + std::countr_zero(w);
            if (prev >= 0 && pos - prev <= d) ++energy;
            prev = pos;
            w &= w - 1;
        }
    }
    return energy;
}

int constant_weight_energy(const BitVector& x, int omega) {
    if (omega < 0 || static_cast<std::size_t>(omega) > x.length()) {
        throw std::invalid_argument("constant_weight_energy: omega " + std::to_string(omega) +
                                    " outside [0, " + std::to_string(x.length()) + "]");
    }
    return std::abs(static_cast<int>(x.popcount()) - omega);
}

Constraint Constraint::rll(int d) {
    if (d < 1) {
        throw std::invalid_argument("Constraint::rll: d must be >= 1, got " + std::to_string(d));
    }
    return Constraint(ConstraintKind::kRll, d, "rll:" + std::to_string(d));
}

Constraint Constraint::constant_weight(int omega) {
    if (omega < 0) {
        throw std::invalid_argument("Constraint::constant_weight: omega must be >= 0, got " +
                                    std::to_string(omega));
    }
    return Constraint(ConstraintKind::kConstantWeight, omega, "weight:" + std::to_string(omega));
}

Constraint Constraint::custom(std::string name, std::function<int(const BitVector&)> energy) {
    Constraint c(ConstraintKind::kCustom, 0, std::move(name));
    c.custom_ = std::move(energy);
    return c;
}

Constraint Constraint::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon != std::string_view::npos) {
        const std::string_view head = text.substr(0, colon);
        const std::string_view tail = text.substr(colon + 1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), value);
        if (ec == std::errc{} && ptr == tail.data() + tail.size()) {
            if (head == "rll") return rll(value);
            if (head == "weight") return constant_weight(value);
        }
    }
    throw std::invalid_argument("Constraint::parse: bad constraint '" + std::string(text) +
                                "'; expected rll:<d> or weight:<omega>");
}

int Constraint::rll_gap() const {
    if (kind_ != ConstraintKind::kRll) {
        throw std::logic_error("Constraint::rll_gap: not an RLL constraint");
    }
    return param_;
}

int Constraint::target_weight() const {
    if (kind_ != ConstraintKind::kConstantWeight) {
        throw std::logic_error("Constraint::target_weight: not a constant-weight constraint");
    }
    return param_;
}

int Constraint::energy(const BitVector& x) const {
    switch (kind_) {
        case ConstraintKind::kRll:
            return rll_energy(x, param_);
        case ConstraintKind::kConstantWeight:
            return constant_weight_energy(x, param_);
        case ConstraintKind::kCustom:
            return custom_(x);
    }
    return 0;
}

}  // namespace rmcount
