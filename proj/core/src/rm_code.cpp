#include "rmcount/rm_code.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace rmcount {

namespace {

// Rank of a small GF(2) matrix whose rows are packed into single words.
int packed_rank(std::uint32_t* rows, int count) {
    int rank = 0;
    for (int i = 0; i < count; ++i) {
        std::uint32_t row = rows[i];
        for (int j = 0; j < rank; ++j) {
            std::uint32_t pivot = rows[j];
            if (row & (pivot & (~pivot + 1))) row ^= pivot;
        }
        if (row != 0) {
            // Keep reduced rows in the prefix; pivot bit = lowest set bit.
            rows[rank] = row;
            ++rank;
        }
    }
    return rank;
}

void check_params(int m, int r) {
    if (m < 1 || m > 24) {
        throw std::invalid_argument("RmCode: m must be in [1, 24], got " + std::to_string(m));
    }
    if (r < 0 || r > m) {
        throw std::invalid_argument("RmCode: r must be in [0, m], got r=" + std::to_string(r) +
                                    " with m=" + std::to_string(m));
    }
}

}  // namespace

std::int64_t rm_dimension(int m, int r) {
    check_params(m, r);
    std::int64_t k = 0;
    std::int64_t c = 1;
    for (int i = 0; i <= r; ++i) {
        k += c;
        c = c * (m - i) / (i + 1);
    }
    return k;
}

RmCode::RmCode(int m, int r) : m_(m), r_(r) {
    check_params(m, r);
    n_ = 1 << m;
    k_ = static_cast<int>(rm_dimension(m, r));

    // Monomials by degree, then lexicographic on the variable tuple.
    // Variable x_i maps to bit (m - i) of the evaluation point index.
    monomials_.reserve(static_cast<std::size_t>(k_));
    std::vector<int> vars;
    for (int d = 0; d <= r; ++d) {
        vars.assign(static_cast<std::size_t>(d), 0);
        for (int i = 0; i < d; ++i) vars[static_cast<std::size_t>(i)] = i + 1;
        for (;;) {
            std::uint32_t mask = 0;
            for (int v : vars) mask |= 1u << (m - v);
            monomials_.push_back(mask);
            if (d == 0) break;
            // Next d-combination of {1..m} in lexicographic order.
            int i = d - 1;
            while (i >= 0 && vars[static_cast<std::size_t>(i)] == m - (d - 1 - i)) --i;
            if (i < 0) break;
            ++vars[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < d; ++j) {
                vars[static_cast<std::size_t>(j)] = vars[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }

    std::vector<BitVector> rows;
    rows.reserve(monomials_.size());
    for (std::uint32_t mask : monomials_) {
        BitVector row(static_cast<std::size_t>(n_));
        auto words = row.words();
        for (int j = 0; j < n_; ++j) {
            if ((static_cast<std::uint32_t>(j) & mask) == mask) {
                words[static_cast<std::size_t>(j) / 64] |= 1ull << (j % 64);
            }
        }
        rows.push_back(std::move(row));
    }
    generator_ = BitMatrix(std::move(rows));
}

BitVector RmCode::encode(const BitVector& message) const {
    if (message.length() != static_cast<std::size_t>(k_)) {
        throw std::invalid_argument("RmCode::encode: message length " +
                                    std::to_string(message.length()) + " != k " +
                                    std::to_string(k_));
    }
    return mat_vec_mul(message, generator_);
}

void RmCode::sample_min_weight_support(RngStream& rng, std::vector<std::uint32_t>& out) const {
    const int rows = m_ - r_;
    const std::uint32_t mask = static_cast<std::uint32_t>(n_ - 1);

    std::uint32_t a[32];
    std::uint32_t scratch[32];
    if (rows > 0) {
        // Rejection sampling: redraw until the (m-r) x m matrix is full-rank.
        for (;;) {
            for (int i = 0; i < rows; ++i) {
                a[i] = static_cast<std::uint32_t>(rng.next_u64()) & mask;
                scratch[i] = a[i];
            }
            if (packed_rank(scratch, rows) == rows) break;
        }
    }
    const std::uint32_t b = static_cast<std::uint32_t>(rng.next_u64()) & mask;

    // Walk the subspace {x A + b} in Gray-code order over x: one row xor per
    // point. Full-rank A makes the 2^{m-r} points distinct.
    const std::uint32_t count = 1u << rows;
    out.resize(count);
    std::uint32_t z = b;
    out[0] = z;
    for (std::uint32_t t = 1; t < count; ++t) {
        z ^= a[std::countr_zero(t)];
        out[t] = z;
    }
}

BitVector RmCode::sample_min_weight_codeword(RngStream& rng) const {
    std::vector<std::uint32_t> support;
    sample_min_weight_support(rng, support);
    BitVector v(static_cast<std::size_t>(n_));
    auto words = v.words();
    for (std::uint32_t z : support) words[z / 64] |= 1ull << (z % 64);
    return v;
}

std::vector<BitVector> RmCode::enumerate_min_weight_codewords(bool allow_k29) const {
    const int bound = allow_k29 ? kMaxExhaustiveK : kDefaultExhaustiveK;
    if (k_ > bound) {
        throw std::runtime_error("enumerate_min_weight_codewords: k = " + std::to_string(k_) +
                                 " exceeds exhaustive bound " + std::to_string(bound));
    }
    const std::size_t target = static_cast<std::size_t>(min_weight());
    std::vector<BitVector> result;
    BitVector current(static_cast<std::size_t>(n_));
    const std::uint64_t total = 1ull << k_;
    for (std::uint64_t t = 0;;) {
        if (current.popcount() == target) result.push_back(current);
        if (++t == total) break;
        current ^= generator_.row(static_cast<std::size_t>(std::countr_zero(t)));
    }
    return result;
}

bool RmCode::contains(const BitVector& word) const {
    if (word.length() != static_cast<std::size_t>(n_)) return false;
    std::vector<BitVector> rows;
    rows.reserve(static_cast<std::size_t>(k_) + 1);
    for (std::size_t i = 0; i < generator_.rows(); ++i) rows.push_back(generator_.row(i));
    rows.push_back(word);
    return BitMatrix(std::move(rows)).rank() == static_cast<std::size_t>(k_);
}

}  // namespace rmcount
