#pragma once

#include <cstddef>
#include <vector>

#include "rmcount/bitvec.hpp"
#include "rmcount/rng.hpp"

namespace rmcount {

// Row-major matrix over GF(2); each row is a BitVector of the same length.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows, BitVector(cols)), cols_(cols) {}
    explicit BitMatrix(std::vector<BitVector> rows);

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    const BitVector& row(std::size_t i) const { return rows_.at(i); }
    BitVector& row(std::size_t i) { return rows_.at(i); }

    bool get(std::size_t r, std::size_t c) const { return rows_.at(r).get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_.at(r).set(c, v); }

    // GF(2) row rank by elimination on a scratch copy; never mutates *this.
    std::size_t rank() const;

    // The empty (0 x m) matrix counts as full-rank.
    bool is_full_rank() const { return rank() == rows(); }

    bool operator==(const BitMatrix&) const = default;

private:
    std::vector<BitVector> rows_;
    std::size_t cols_ = 0;
};

// Row-vector times matrix: result = sum of rows i of M with x[i] = 1.
// Requires x.length() == M.rows(); result has length M.cols().
BitVector mat_vec_mul(const BitVector& x, const BitMatrix& m);

// Uniform over all full-rank rows x cols matrices, by rejection on iid
// Bernoulli(1/2) fills. rows == 0 returns the empty matrix without consuming
// randomness; rows > cols is a dimension error.
BitMatrix sample_full_rank_matrix(std::size_t rows, std::size_t cols, RngStream& rng);

// Exact probability that an iid Bernoulli(1/2) rows x cols matrix has full row
// rank: prod_{i=0}^{rows-1} (1 - 2^{i-cols}).
double full_rank_probability(std::size_t rows, std::size_t cols);

// Square-matrix invertibility product prod_{i=1}^{k} (1 - 2^{-i}). Decreases
// to about 0.2887880951 as k grows.
double square_full_rank_probability(std::size_t k);
double square_full_rank_probability_limit();

}  // namespace rmcount
