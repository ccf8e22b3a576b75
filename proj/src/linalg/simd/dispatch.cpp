#include <cstdlib>
#include <string>

#include "corank/linalg/simd/row_kernels.hpp"

namespace corank::linalg::simd {

ModPrime make_prime(unsigned long p) { return ModPrime{static_cast<double>(p), 1.0 / static_cast<double>(p)}; }

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(CORANK_HAVE_AVX2_KERNELS)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
    }
    return false;
}

RowKernels kernels_for(Isa isa) {
#if defined(CORANK_HAVE_AVX2_KERNELS)
    if (isa == Isa::Avx2 && isa_supported(Isa::Avx2)) return {Isa::Avx2, &avx2::axpy_mod, &avx2::scale_mod};
#endif
    (void)isa;
    return {Isa::Scalar, &scalar::axpy_mod, &scalar::scale_mod};
}

const RowKernels& active_kernels() {
    static const RowKernels k = [] {
        const char* env = std::getenv("CORANK_SS_SIMD");
        if (env != nullptr && std::string(env) == "scalar") return kernels_for(Isa::Scalar);
        return kernels_for(Isa::Avx2);
    }();
    return k;
}

}  // namespace corank::linalg::simd
