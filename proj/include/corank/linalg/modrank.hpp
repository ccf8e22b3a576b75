#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "corank/linalg/matrix.hpp"
#include "corank/linalg/simd/row_kernels.hpp"

namespace corank::linalg {

/// Largest primes below 2^26, descending. Deterministic.
const std::vector<std::uint32_t>& modular_primes(std::size_t count);

/// Rank of m reduced modulo p (m is first scaled column-wise to an integer matrix).
std::size_t rank_mod_p(const Matrix& m, std::uint32_t p, const simd::RowKernels& kernels);

struct CertifiedRank {
    std::size_t rank = 0;
    std::size_t primes_used = 0;
    /// Bits of the Hadamard bound on any minor of the integer-scaled matrix.
    std::size_t minor_bound_bits = 0;
};

/// Exact rank over Q from ranks modulo several primes. Each rank mod p is at most the rational
/// rank; a nonzero minor of maximal size is below the Hadamard bound, so once the product of the
/// primes exceeds that bound some prime keeps it nonzero and the maximum is exact.
CertifiedRank rank_certified(const Matrix& m, const simd::RowKernels& kernels);
std::size_t rank_certified(const Matrix& m);

}  // namespace corank::linalg
