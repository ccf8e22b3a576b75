#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "corank/linalg/matrix.hpp"
#include "corank/report.hpp"
#include "corank/topo/delta_complex.hpp"

namespace corank::topo {

using linalg::Rational;
using Simplex = std::vector<std::size_t>;  // sorted vertex ids
using Point = std::vector<Rational>;

/// Finite simplicial complex on vertices 0..n-1 (the numbering is the id order). Simplices are
/// stored closed under faces and ordered by (dimension, lexicographic), which also fixes their ids.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Closes `generators` under taking faces. Vertices not used by any generator still appear as
    /// 0-simplices.
    SimplicialComplex(std::size_t num_vertices, const std::vector<Simplex>& generators,
                      std::vector<Point> coordinates = {});

    static SimplicialComplex standard_simplex(std::size_t d);

    std::size_t num_vertices() const noexcept { return num_vertices_; }
    std::size_t size() const noexcept { return simplices_.size(); }
    int top_dim() const noexcept;
    const Simplex& simplex(std::size_t id) const { return simplices_.at(id); }
    const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
    std::optional<std::size_t> find(const Simplex& s) const;
    std::size_t id_of(const Simplex& s) const;
    std::vector<std::size_t> maximal() const;
    /// Facet ids of a simplex, in deletion-position order.
    std::vector<std::size_t> facets(std::size_t id) const;

    bool has_coordinates() const noexcept { return !coordinates_.empty(); }
    const std::vector<Point>& coordinates() const noexcept { return coordinates_; }
    std::size_t ambient_dim() const noexcept { return coordinates_.empty() ? 0 : coordinates_[0].size(); }

    bool operator==(const SimplicialComplex& rhs) const {
        return num_vertices_ == rhs.num_vertices_ && simplices_ == rhs.simplices_ && coordinates_ == rhs.coordinates_;
    }

private:
    std::size_t num_vertices_ = 0;
    std::vector<Simplex> simplices_;
    std::map<Simplex, std::size_t> index_;
    std::vector<Point> coordinates_;
};

/// Coordinate dimension agreement and affine independence of every simplex.
Report validate(const SimplicialComplex& s);

/// Strictly increasing chain of simplex ids, each a proper face of the next.
struct Flag {
    std::vector<std::size_t> chain;
    bool operator==(const Flag&) const = default;
};

struct Subdivision {
    /// Vertex v of `complex` is the barycenter of simplex v of the input.
    SimplicialComplex complex;
    /// flag_index[c] is the flag of input simplices spanned by cell c of `complex`.
    std::vector<Flag> flag_index;
};

Subdivision barycentric_subdivide(const SimplicialComplex& s);

/// Per degree k, the matrix with rows = k-simplices of s (in id order among k-simplices) and
/// columns = k-cells of the subdivision, holding the sign with which each subdivided cell sits in
/// the simplex it subdivides. Its transpose is the subdivision chain map C_k(s) -> C_k(sd), so
/// the matrix itself carries cochains on the subdivision back to cochains on s and commutes with
/// coboundaries.
std::vector<linalg::Matrix> subdivision_chain_map(const SimplicialComplex& s, const Subdivision& sd);

/// Same cells and ids; vertex order is the numbering.
DeltaComplex as_delta(const SimplicialComplex& s);

/// Sign of the permutation that sorts `order`.
int permutation_sign(std::vector<std::size_t> order);

}  // namespace corank::topo
