#pragma once

// E^1 and E^∞ of a cell filtration straight from ranks of dense submatrices.

#include <map>
#include <utility>
#include <vector>

#include "corank/sheaf/cosheaf.hpp"
#include "corank/topo/delta_complex.hpp"
#include "oracle.hpp"

namespace oracle {

using PNKey = std::pair<long, std::size_t>;

/// Basis positions of degree-k chains whose cell satisfies `pred`.
template <class Pred>
std::vector<std::size_t> positions(const corank::sheaf::ChainComplex& c, std::size_t k, Pred pred) {
    std::vector<std::size_t> out;
    const auto& cells = c.cells[k];
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::size_t lo = c.offsets[k][i];
        const std::size_t hi = i + 1 < cells.size() ? c.offsets[k][i + 1] : c.dims[k];
        if (pred(cells[i]))
            for (std::size_t x = lo; x < hi; ++x) out.push_back(x);
    }
    return out;
}

inline Dense submatrix(const Dense& full, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    Dense out(rows.size(), std::vector<Q>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) out[r][c] = full[rows[r]][cols[c]];
    return out;
}

inline std::size_t rank_of(const Dense& m, std::size_t cols) { return m.empty() || cols == 0 ? 0 : rank(m); }

/// Nonzero dims of E^1 keyed (p, n) for masks F_0 ⊆ ... ⊆ F_L.
inline std::map<PNKey, std::size_t> e1_dims(const corank::sheaf::ChainComplex& c, const std::vector<corank::topo::SubcomplexMask>& f) {
    std::map<PNKey, std::size_t> out;
    const std::size_t deg = c.num_degrees();
    std::vector<Dense> d(deg);
    for (std::size_t k = 0; k < deg; ++k) d[k] = dense(c.differential[k]);
    for (std::size_t p = 0; p < f.size(); ++p) {
        auto in_piece = [&](std::size_t cell) { return f[p].contains(cell) && (p == 0 || !f[p - 1].contains(cell)); };
        for (std::size_t n = 0; n < deg; ++n) {
            auto cols = positions(c, n, in_piece);
            std::size_t rk_out = 0, rk_in = 0;
            if (n > 0) rk_out = rank_of(submatrix(d[n], positions(c, n - 1, in_piece), cols), cols.size());
            if (n + 1 < deg) {
                auto up = positions(c, n + 1, in_piece);
                rk_in = rank_of(submatrix(d[n + 1], cols, up), up.size());
            }
            if (const std::size_t h = cols.size() - rk_out - rk_in) out[{static_cast<long>(p), n}] = h;
        }
    }
    return out;
}

/// Nonzero dims of E^∞: dim((Z ∩ F_p) + B) - dim((Z ∩ F_{p-1}) + B).
inline std::map<PNKey, std::size_t> einf_dims(const corank::sheaf::ChainComplex& c, const std::vector<corank::topo::SubcomplexMask>& f) {
    std::map<PNKey, std::size_t> out;
    const std::size_t deg = c.num_degrees();
    for (std::size_t n = 0; n < deg; ++n) {
        const Dense dn = dense(c.differential[n]);
        const std::size_t dim = c.dims[n];
        std::vector<std::vector<Q>> bvecs;
        if (n + 1 < deg) {
            const Dense up = dense(c.differential[n + 1]);
            for (std::size_t col = 0; col < c.dims[n + 1]; ++col) {
                std::vector<Q> v(dim);
                for (std::size_t r = 0; r < dim; ++r) v[r] = up[r][col];
                bvecs.push_back(std::move(v));
            }
        }
        std::size_t prev = span_dim(bvecs, dim);
        for (std::size_t p = 0; p < f.size(); ++p) {
            auto cols = positions(c, n, [&](std::size_t cell) { return f[p].contains(cell); });
            std::vector<std::vector<Q>> vecs = bvecs;
            if (!cols.empty()) {
                Dense sub(c.differential[n].rows(), std::vector<Q>(cols.size()));
                for (std::size_t r = 0; r < sub.size(); ++r)
                    for (std::size_t x = 0; x < cols.size(); ++x) sub[r][x] = dn[r][cols[x]];
                std::vector<std::vector<Q>> ker;
                if (sub.empty()) {
                    for (std::size_t x = 0; x < cols.size(); ++x) {
                        std::vector<Q> e(cols.size());
                        e[x] = 1;
                        ker.push_back(std::move(e));
                    }
                } else {
                    ker = kernel(sub, cols.size());
                }
                for (const auto& kv : ker) {
                    std::vector<Q> v(dim);
                    for (std::size_t x = 0; x < cols.size(); ++x) v[cols[x]] = kv[x];
                    vecs.push_back(std::move(v));
                }
            }
            const std::size_t now = span_dim(vecs, dim);
            if (now > prev) out[{static_cast<long>(p), n}] = now - prev;
            prev = now;
        }
    }
    return out;
}

}  // namespace oracle
