#pragma once

// Row-update kernels for elimination over Z/p.
//
// Residues are stored as doubles holding integers in [0, p) with p < 2^26, so a product of two
// residues is below 2^52 and exact in binary64. Every variant must return bit-identical rows.

#include <cstddef>
#include <string_view>

namespace corank::linalg::simd {

enum class Isa { Scalar, Avx2 };

struct ModPrime {
    double p;
    double inv_p;  // 1.0 / p, used only for quotient estimates
};

ModPrime make_prime(unsigned long p);

/// dst[j] = (dst[j] - factor * src[j]) mod p
using AxpyModFn = void (*)(double* dst, const double* src, double factor, ModPrime mp, std::size_t n);
/// row[j] = (row[j] * factor) mod p
using ScaleModFn = void (*)(double* row, double factor, ModPrime mp, std::size_t n);

struct RowKernels {
    Isa isa;
    AxpyModFn axpy_mod;
    ScaleModFn scale_mod;
};

namespace scalar {
void axpy_mod(double* dst, const double* src, double factor, ModPrime mp, std::size_t n);
void scale_mod(double* row, double factor, ModPrime mp, std::size_t n);
}  // namespace scalar

#if defined(CORANK_HAVE_AVX2_KERNELS)
namespace avx2 {
void axpy_mod(double* dst, const double* src, double factor, ModPrime mp, std::size_t n);
void scale_mod(double* row, double factor, ModPrime mp, std::size_t n);
}  // namespace avx2
#endif

std::string_view isa_name(Isa isa);
/// True when the kernels for `isa` were compiled in and the running CPU supports them.
bool isa_supported(Isa isa);
/// Kernels for `isa`; falls back to scalar when unsupported.
RowKernels kernels_for(Isa isa);
/// Best supported kernels, unless CORANK_SS_SIMD=scalar is set in the environment.
const RowKernels& active_kernels();

}  // namespace corank::linalg::simd
