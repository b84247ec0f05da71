#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rmcount {

// Bit-packed vector over GF(2). Coordinate i lives at bit (i % 64) of word
// i / 64. Bits at positions >= length() are always zero, so word-level
// operations (xor, popcount, shifts) need no per-call boundary handling.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length)
        : len_(length), words_((length + 63) / 64, 0) {}

    static BitVector zeros(std::size_t length) { return BitVector(length); }
    static BitVector ones(std::size_t length);
    // Parses "0101..."; character position i becomes coordinate i.
    static BitVector from_string(std::string_view bits);

    std::size_t length() const noexcept { return len_; }
    std::size_t word_count() const noexcept { return words_.size(); }

    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    void flip(std::size_t i);
    void clear() noexcept;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    std::size_t popcount() const noexcept;
    bool is_zero() const noexcept;

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    // Mutable word access for hot loops; callers must keep tail bits zero.
    std::span<std::uint64_t> words() noexcept { return words_; }

    std::string to_string() const;

    bool operator==(const BitVector&) const = default;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

inline std::size_t hamming_weight(const BitVector& v) noexcept { return v.popcount(); }

}  // namespace rmcount

template <>
struct std::hash<rmcount::BitVector> {
    std::size_t operator()(const rmcount::BitVector& v) const noexcept {
        // FNV-1a over the packed words.
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (std::uint64_t w : v.words()) {
            h = (h ^ w) * 0x100000001b3ull;
        }
        h = (h ^ v.length()) * 0x100000001b3ull;
        return static_cast<std::size_t>(h);
    }
};
