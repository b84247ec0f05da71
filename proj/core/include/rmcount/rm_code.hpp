#pragma once

#include <cstdint>
#include <vector>

#include "rmcount/bitmatrix.hpp"
#include "rmcount/bitvec.hpp"
#include "rmcount/rng.hpp"

namespace rmcount {

// Exhaustive enumeration is allowed up to 2^26 codewords by default; callers
// may opt in to 2^29 (about half a billion) explicitly.
inline constexpr int kDefaultExhaustiveK = 26;
inline constexpr int kMaxExhaustiveK = 29;

std::int64_t rm_dimension(int m, int r);

// Binary Reed-Muller code RM(m, r): length n = 2^m, dimension
// k = sum_{i<=r} C(m, i). Generator rows are evaluation vectors of the
// monomials of degree <= r over F_2^m.
//
// Coordinate convention: evaluation point index j in [0, 2^m) has binary
// expansion z_1 z_2 ... z_m with z_1 the most significant bit, i.e. points
// are visited in lexicographic order and z_m toggles fastest. Monomial rows
// are ordered by degree, then lexicographically on the variable set, so
// generator matrices are bit-reproducible across runs and platforms.
class RmCode {
public:
    RmCode(int m, int r);

    int m() const noexcept { return m_; }
    int r() const noexcept { return r_; }
    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }

    const BitMatrix& generator() const noexcept { return generator_; }

    // Monomial variable sets in row order, packed in point-index bit space:
    // variable x_i occupies bit (m - i), matching the column convention.
    const std::vector<std::uint32_t>& monomial_masks() const noexcept { return monomials_; }

    int min_weight() const noexcept { return 1 << (m_ - r_); }

    // message * generator over GF(2); message.length() must equal k.
    BitVector encode(const BitVector& message) const;

    // Uniformly random minimum-weight codeword: the characteristic vector of
    // a random (m-r)-dimensional affine subspace {x A + b}, with A a uniform
    // full-rank (m-r) x m matrix and b uniform on F_2^m.
    BitVector sample_min_weight_codeword(RngStream& rng) const;

    // Same draw, but emits the 2^{m-r} support point indices instead of
    // materializing the vector. Consumes the identical rng sequence.
    void sample_min_weight_support(RngStream& rng, std::vector<std::uint32_t>& out) const;

    // All codewords of weight exactly 2^{m-r}, by full enumeration.
    std::vector<BitVector> enumerate_min_weight_codewords(bool allow_k29 = false) const;

    // Row-space membership test (elimination); intended for tests and checks.
    bool contains(const BitVector& word) const;

private:
    int m_, r_, n_, k_;
    BitMatrix generator_;
    std::vector<std::uint32_t> monomials_;
};

}  // namespace rmcount
