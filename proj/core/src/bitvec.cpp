#include "rmcount/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace rmcount {

namespace {
void check_index(std::size_t i, std::size_t len) {
    if (i >= len) {
        throw std::out_of_range("BitVector: index " + std::to_string(i) +
                                " out of range for length " + std::to_string(len));
    }
}
}  // namespace

BitVector BitVector::ones(std::size_t length) {
    BitVector v(length);
    for (auto& w : v.words_) w = ~0ull;
    // Re-establish the tail invariant on the last word.
    if (length % 64 != 0) {
        v.words_.back() &= (1ull << (length % 64)) - 1;
    }
    return v;
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.words_[i / 64] |= 1ull << (i % 64);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("BitVector::from_string: expected only '0'/'1'");
        }
    }
    return v;
}

bool BitVector::get(std::size_t i) const {
    check_index(i, len_);
    return (words_[i / 64] >> (i % 64)) & 1ull;
}

void BitVector::set(std::size_t i, bool value) {
    check_index(i, len_);
    const std::uint64_t mask = 1ull << (i % 64);
    if (value) {
        words_[i / 64] |= mask;
    } else {
        words_[i / 64] &= ~mask;
    }
}

void BitVector::flip(std::size_t i) {
    check_index(i, len_);
    words_[i / 64] ^= 1ull << (i % 64);
}

void BitVector::clear() noexcept {
    for (auto& w : words_) w = 0;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (len_ != other.len_) {
        throw std::invalid_argument("BitVector xor: length mismatch (" + std::to_string(len_) +
                                    " vs " + std::to_string(other.len_) + ")");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

std::size_t BitVector::popcount() const noexcept {
    std::size_t count = 0;
    for (std::uint64_t w : words_) count += static_cast<std::size_t>(std::popcount(w));
    return count;
}

bool BitVector::is_zero() const noexcept {
    for (std::uint64_t w : words_) {
        if (w != 0) return false;
    }
    return true;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
        if ((words_[i / 64] >> (i % 64)) & 1ull) s[i] = '1';
    }
    return s;
}

}  // namespace rmcount
