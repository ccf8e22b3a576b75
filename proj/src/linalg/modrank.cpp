#include "corank/linalg/modrank.hpp"

#include <algorithm>
#include <mutex>

namespace corank::linalg {

namespace {

constexpr std::uint32_t kPrimeCeiling = 1u << 26;
constexpr std::size_t kBitsPerPrime = 25;  // every prime used is above 2^25

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    // a^(p-2) mod p
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

// Column-scaled integer version of m, stored as (row, col, value) per column.
std::vector<std::vector<std::pair<std::size_t, mpz_class>>> integer_columns(const Matrix& m) {
    std::vector<std::vector<std::pair<std::size_t, mpz_class>>> cols(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        mpz_class l = 1;
        for (const auto& e : m.column(j)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.value.get_den_mpz_t());
        for (const auto& e : m.column(j)) cols[j].emplace_back(e.row, mpz_class(e.value.get_num() * (l / e.value.get_den())));
    }
    return cols;
}

std::size_t rank_mod_p_impl(const std::vector<std::vector<std::pair<std::size_t, mpz_class>>>& cols,
                            std::size_t rows, std::uint32_t p, const simd::RowKernels& k) {
    const std::size_t ncols = cols.size();
    if (rows == 0 || ncols == 0) return 0;
    // Eliminate along the shorter dimension: store the matrix so that rows are the longer side.
    const bool transpose = ncols > rows;
    const std::size_t R = transpose ? ncols : rows;
    const std::size_t C = transpose ? rows : ncols;
    std::vector<double> a(R * C, 0.0);
    for (std::size_t j = 0; j < ncols; ++j)
        for (const auto& [i, v] : cols[j]) {
            double r = static_cast<double>(mpz_fdiv_ui(v.get_mpz_t(), p));
            if (transpose)
                a[j * C + i] = r;
            else
                a[i * C + j] = r;
        }
    const simd::ModPrime mp = simd::make_prime(p);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < C && rank < R; ++c) {
        std::size_t piv = rank;
        while (piv < R && a[piv * C + c] == 0.0) ++piv;
        if (piv == R) continue;
        if (piv != rank) std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * C),
                                          a.begin() + static_cast<std::ptrdiff_t>(piv * C + C),
                                          a.begin() + static_cast<std::ptrdiff_t>(rank * C));
        double* prow = &a[rank * C];
        const auto inv = inverse_mod(static_cast<std::uint64_t>(prow[c]), p);
        k.scale_mod(prow + c, static_cast<double>(inv), mp, C - c);
        for (std::size_t i = rank + 1; i < R; ++i) {
            double* row = &a[i * C];
            if (row[c] != 0.0) k.axpy_mod(row + c, prow + c, row[c], mp, C - c);
        }
        ++rank;
    }
    return rank;
}

std::size_t hadamard_bits(const std::vector<std::vector<std::pair<std::size_t, mpz_class>>>& cols, std::size_t rows) {
    mpz_class col_prod = 1;
    std::vector<mpz_class> row_sq(rows, 0);
    for (const auto& col : cols) {
        mpz_class sq = 0;
        for (const auto& [i, v] : col) {
            mpz_class v2 = v * v;
            sq += v2;
            row_sq[i] += v2;
        }
        if (sq != 0) col_prod *= sq;
    }
    mpz_class row_prod = 1;
    for (const auto& s : row_sq)
        if (s != 0) row_prod *= s;
    const mpz_class& best = cmp(col_prod, row_prod) < 0 ? col_prod : row_prod;
    const std::size_t bits_sq = mpz_sizeinbase(best.get_mpz_t(), 2);
    return (bits_sq + 1) / 2 + 1;
}

}  // namespace

const std::vector<std::uint32_t>& modular_primes(std::size_t count) {
    static std::mutex mu;
    static std::vector<std::uint32_t> primes;
    std::lock_guard<std::mutex> lock(mu);
    std::uint32_t next = primes.empty() ? kPrimeCeiling - 1 : primes.back() - 2;
    if (next % 2 == 0) --next;
    while (primes.size() < count) {
        if (is_prime(next)) primes.push_back(next);
        next -= 2;
    }
    return primes;
}

std::size_t rank_mod_p(const Matrix& m, std::uint32_t p, const simd::RowKernels& kernels) {
    return rank_mod_p_impl(integer_columns(m), m.rows(), p, kernels);
}

CertifiedRank rank_certified(const Matrix& m, const simd::RowKernels& kernels) {
    CertifiedRank out;
    if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return out;
    auto cols = integer_columns(m);
    out.minor_bound_bits = hadamard_bits(cols, m.rows());
    const std::size_t needed = out.minor_bound_bits / kBitsPerPrime + 1;
    const std::size_t full = std::min(m.rows(), m.cols());
    const auto& primes = modular_primes(needed);
    for (std::size_t k = 0; k < needed; ++k) {
        out.rank = std::max(out.rank, rank_mod_p_impl(cols, m.rows(), primes[k], kernels));
        out.primes_used = k + 1;
        if (out.rank == full) break;
    }
    return out;
}

std::size_t rank_certified(const Matrix& m) { return rank_certified(m, simd::active_kernels()).rank; }

}  // namespace corank::linalg
