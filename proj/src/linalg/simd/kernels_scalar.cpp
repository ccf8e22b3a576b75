#include <cstdint>

#include "corank/linalg/simd/row_kernels.hpp"

namespace corank::linalg::simd::scalar {

// Reference kernels: plain 64-bit integer arithmetic.

void axpy_mod(double* dst, const double* src, double factor, ModPrime mp, std::size_t n) {
    const auto p = static_cast<std::uint64_t>(mp.p);
    const auto f = static_cast<std::uint64_t>(factor);
    for (std::size_t j = 0; j < n; ++j) {
        const auto a = static_cast<std::uint64_t>(dst[j]);
        const auto b = static_cast<std::uint64_t>(src[j]);
        dst[j] = static_cast<double>((a + p - (f * b) % p) % p);
    }
}

void scale_mod(double* row, double factor, ModPrime mp, std::size_t n) {
    const auto p = static_cast<std::uint64_t>(mp.p);
    const auto f = static_cast<std::uint64_t>(factor);
    for (std::size_t j = 0; j < n; ++j) row[j] = static_cast<double>((static_cast<std::uint64_t>(row[j]) * f) % p);
}

}  // namespace corank::linalg::simd::scalar
