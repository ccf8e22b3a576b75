#pragma once

// Seeded random inputs shared by the unit and acceptance tests.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <random>
#include <set>
#include <vector>

#include "corank/linalg/matrix.hpp"
#include "corank/linalg/ops.hpp"
#include "corank/linalg/subspace.hpp"
#include "corank/sheaf/cosheaf.hpp"
#include "corank/topo/delta_complex.hpp"
#include "corank/topo/simplicial.hpp"

namespace gen {

using corank::linalg::Matrix;
using corank::linalg::Rational;
using corank::linalg::Subspace;
using corank::topo::Cell;
using corank::topo::DeltaComplex;
using corank::topo::Simplex;
using corank::topo::SimplicialComplex;
using corank::topo::SubcomplexMask;
using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo = -5, long hi = 5, double density = 1.0) {
    Matrix m(rows, cols);
    std::bernoulli_distribution keep(density);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (keep(rng)) m.set(r, c, Rational(uniform(rng, lo, hi)));
    return m;
}

/// Random rank-deficient matrix: product of two random factors of inner dimension k.
inline Matrix random_low_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t k) {
    return random_matrix(rng, rows, k, -2, 2) * random_matrix(rng, k, cols, -2, 2);
}

inline Subspace random_subspace(Rng& rng, std::size_t ambient, std::size_t generators) {
    return Subspace::span(random_matrix(rng, ambient, generators, -3, 3));
}

/// Simplicial complex on at most `max_vertices` vertices generated by a few random simplices of
/// dimension at most `max_dim`.
inline SimplicialComplex random_simplicial(Rng& rng, std::size_t max_vertices, std::size_t max_dim) {
    const std::size_t nv = static_cast<std::size_t>(uniform(rng, 2, static_cast<long>(max_vertices)));
    const std::size_t ngen = static_cast<std::size_t>(uniform(rng, 1, 4));
    std::vector<Simplex> gens;
    std::vector<std::size_t> verts(nv);
    for (std::size_t v = 0; v < nv; ++v) verts[v] = v;
    for (std::size_t g = 0; g < ngen; ++g) {
        const std::size_t dim = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(std::min(max_dim, nv - 1))));
        std::shuffle(verts.begin(), verts.end(), rng);
        Simplex s(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(dim + 1));
        std::sort(s.begin(), s.end());
        gens.push_back(s);
    }
    return SimplicialComplex(nv, gens);
}

/// Order of cell ids by decreasing dimension (ties by id).
inline std::vector<std::size_t> by_decreasing_dim(const DeltaComplex& d) {
    std::vector<std::size_t> ids(d.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    std::stable_sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) { return d.cell(a).dim > d.cell(b).dim; });
    return ids;
}

/// A cosheaf whose stalk at σ is the sum W_σ of random subspaces of Q^ambient attached to the
/// cells containing σ, in a random basis. Extension maps are the inclusions W_σ ⊆ W_τ written in
/// those bases, so every square commutes.
inline corank::sheaf::Cosheaf random_cosheaf(Rng& rng, std::shared_ptr<const DeltaComplex> base, std::size_t ambient = 3) {
    const DeltaComplex& d = *base;
    std::vector<Subspace> w(d.size());
    for (std::size_t id = 0; id < d.size(); ++id)
        w[id] = random_subspace(rng, ambient, static_cast<std::size_t>(uniform(rng, 0, 2)));
    for (auto id : by_decreasing_dim(d))
        for (auto f : d.cell(id).faces) w[f] = corank::linalg::sum(w[f], w[id]);
    std::vector<Matrix> basis(d.size());
    std::vector<std::size_t> dims(d.size());
    for (std::size_t id = 0; id < d.size(); ++id) {
        const std::size_t k = w[id].dim();
        Matrix g = Matrix::identity(k);
        for (std::size_t r = 0; r < k; ++r) {
            g.set(r, r, Rational(uniform(rng, 0, 1) ? 1 : -2));
            for (std::size_t c = r + 1; c < k; ++c) g.set(r, c, Rational(uniform(rng, -2, 2)));
        }
        basis[id] = w[id].basis() * g;
        dims[id] = k;
    }
    corank::sheaf::Cosheaf f(base, dims);
    for (std::size_t id = 0; id < d.size(); ++id)
        for (std::size_t i = 0; i < d.cell(id).faces.size(); ++i) {
            const auto face = d.cell(id).faces[i];
            auto coords = corank::linalg::coordinates(basis[face], basis[id]);
            f.set_ext(id, i, *coords);
        }
    return f;
}

inline SubcomplexMask random_closed_mask(Rng& rng, const DeltaComplex& d, double p = 0.3) {
    std::bernoulli_distribution pick(p);
    std::vector<std::size_t> ids;
    for (std::size_t id = 0; id < d.size(); ++id)
        if (pick(rng)) ids.push_back(id);
    return SubcomplexMask::closure(d, ids);
}

/// Increasing closed masks F_0 ⊆ ... ⊆ F_L with F_L everything.
inline std::vector<SubcomplexMask> random_filtration(Rng& rng, const DeltaComplex& d, std::size_t length) {
    std::vector<SubcomplexMask> levels(length + 1);
    levels[length] = SubcomplexMask::all(d.size());
    for (std::size_t k = length; k-- > 0;) {
        std::vector<std::size_t> ids;
        std::bernoulli_distribution keep(0.6);
        for (auto id : levels[k + 1].ids())
            if (keep(rng)) ids.push_back(id);
        // closure stays inside the next level because that level is closed
        levels[k] = SubcomplexMask::closure(d, ids);
    }
    return levels;
}

// Small Δ-complexes with known Betti numbers.

inline DeltaComplex interval() {
    return DeltaComplex({Cell{0, {0}, {}, ""}, Cell{0, {1}, {}, ""}, Cell{1, {0, 1}, {1, 0}, ""}});
}

/// One vertex and one loop.
inline DeltaComplex circle() { return DeltaComplex({Cell{0, {0}, {}, ""}, Cell{1, {0, 0}, {0, 0}, ""}}); }

/// Two triangles glued along their whole boundary.
inline DeltaComplex sphere() {
    return DeltaComplex({Cell{0, {0}, {}, ""}, Cell{0, {1}, {}, ""}, Cell{0, {2}, {}, ""}, Cell{1, {0, 1}, {1, 0}, ""},
                         Cell{1, {1, 2}, {2, 1}, ""}, Cell{1, {0, 2}, {2, 0}, ""}, Cell{2, {0, 1, 2}, {4, 5, 3}, ""},
                         Cell{2, {0, 1, 2}, {4, 5, 3}, ""}});
}

/// Square with opposite sides identified, cut along a diagonal.
inline DeltaComplex torus() {
    return DeltaComplex({Cell{0, {0}, {}, ""}, Cell{1, {0, 0}, {0, 0}, "a"}, Cell{1, {0, 0}, {0, 0}, "b"}, Cell{1, {0, 0}, {0, 0}, "c"},
                         Cell{2, {0, 0, 0}, {2, 3, 1}, ""}, Cell{2, {0, 0, 0}, {1, 3, 2}, ""}});
}

}  // namespace gen
