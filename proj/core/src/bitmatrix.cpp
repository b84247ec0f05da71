#include "rmcount/bitmatrix.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace rmcount {

BitMatrix::BitMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
    if (!rows_.empty()) {
        cols_ = rows_[0].length();
        for (const auto& r : rows_) {
            if (r.length() != cols_) {
                throw std::invalid_argument("BitMatrix: rows of unequal length");
            }
        }
    }
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].set(i, true);
    return m;
}

std::size_t BitMatrix::rank() const {
    std::vector<BitVector> work = rows_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < work.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < work.size() && !work[pivot].get(c)) ++pivot;
        if (pivot == work.size()) continue;
        std::swap(work[rank], work[pivot]);
        for (std::size_t i = rank + 1; i < work.size(); ++i) {
            if (work[i].get(c)) work[i] ^= work[rank];
        }
        ++rank;
    }
    return rank;
}

BitVector mat_vec_mul(const BitVector& x, const BitMatrix& m) {
    if (x.length() != m.rows()) {
        throw std::invalid_argument("mat_vec_mul: vector length " + std::to_string(x.length()) +
                                    " does not match row count " + std::to_string(m.rows()));
    }
    BitVector result(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x.get(i)) result ^= m.row(i);
    }
    return result;
}

BitMatrix sample_full_rank_matrix(std::size_t rows, std::size_t cols, RngStream& rng) {
    if (rows > cols) {
        throw std::invalid_argument("sample_full_rank_matrix: rows " + std::to_string(rows) +
                                    " > cols " + std::to_string(cols) +
                                    ", full rank impossible");
    }
    BitMatrix m(rows, cols);
    if (rows == 0) return m;
    for (;;) {
        for (std::size_t i = 0; i < rows; ++i) rng.fill_bits(m.row(i));
        if (m.rank() == rows) return m;
    }
}

double full_rank_probability(std::size_t rows, std::size_t cols) {
    if (rows > cols) return 0.0;
    double p = 1.0;
    for (std::size_t i = 0; i < rows; ++i) {
        p *= 1.0 - std::exp2(static_cast<double>(i) - static_cast<double>(cols));
    }
    return p;
}

double square_full_rank_probability(std::size_t k) {
    double p = 1.0;
    for (std::size_t i = 1; i <= k; ++i) p *= 1.0 - std::exp2(-static_cast<double>(i));
    return p;
}

double square_full_rank_probability_limit() {
    // The product has converged to double precision long before i = 80.
    return square_full_rank_probability(80);
}

}  // namespace rmcount
