#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "corank/linalg/matrix.hpp"
#include "corank/report.hpp"
#include "corank/sheaf/cosheaf.hpp"
#include "corank/topo/simplicial.hpp"

namespace corank::retraction {

using linalg::Matrix;
using linalg::Rational;
using topo::Point;
using topo::Simplex;
using topo::SimplicialComplex;
using topo::SubcomplexMask;
using topo::Subdivision;

enum class CellClass { Plus, Minus, BoundaryPlusClosed, Neither };
std::string_view to_string(CellClass c);

/// Classification of a subdivided cell by the vertex membership of the first member of its flag.
/// `flag` lists the members as vertex sets; delta0 and delta1 partition the vertices of the simplex.
CellClass classify_cell(const std::vector<Simplex>& flag, const Simplex& delta0, const Simplex& delta1);

/// Simplicial complex with a face-closed boundary subcomplex (mask over simplex ids).
struct FacePairInput {
    SimplicialComplex ambient;
    SubcomplexMask boundary;
};

/// σ ∩ ∂Δ as a vertex set.
Simplex delta0_of(const FacePairInput& in, std::size_t sigma);
/// Boundary closed under faces, coordinates affinely independent, and each σ ∩ ∂Δ a simplex of ∂Δ.
Report check_conditions(const FacePairInput& in);

struct RetractionPair {
    Subdivision subdivided;
    SubcomplexMask plus;           // Δ⁺
    SubcomplexMask boundary_plus;  // ∂Δ⁺
    SubcomplexMask minus;          // Δ⁻
    /// Largest number of cells of Δ⁺ containing one vertex; finite models are trivially locally
    /// finite, the number is reported for inspection.
    std::size_t max_vertex_star = 0;
};

/// Retraction of one simplex `sigma` of s with respect to the face with vertex set `delta0`,
/// as masks over the cells of sd (only cells subdividing sigma can be members).
RetractionPair local_retraction(const SimplicialComplex& s, const Subdivision& sd, std::size_t sigma, const Simplex& delta0);

/// Retraction of the standard d-simplex relative to the face `delta0` (possibly empty or whole).
RetractionPair retract_simplex(std::size_t d, const Simplex& delta0);
/// Per-simplex retractions of (σ, σ ∩ ∂Δ) glued over the common subdivision. Throws
/// Condition2Violated.
RetractionPair retract_complex(const FacePairInput& in);

/// Restricting the glued result to each simplex reproduces that simplex's own retraction.
Report restriction_check(const FacePairInput& in, const RetractionPair& pair);

/// For a single simplex: the boundary of Δ⁺ is ∂Δ⁺ together with the retractions of the facets,
/// and the latter is exactly Δ⁺ ∩ (subdivided boundary of Δ).
Report boundary_decomposition_check(const FacePairInput& in, const RetractionPair& pair);

/// Classification of a point by its barycentric coordinates: which face holds the largest one.
CellClass classify_point(const Point& lambda, const Simplex& delta0, const Simplex& delta1);
/// The t at which t x + (1-t) y crosses ∂Δ⁺, for x supported on delta0 and y on delta1
/// (barycentric coordinates). Throws DegenerateFace when a face is empty.
Rational crossing_parameter(const Point& x, const Point& y, const Simplex& delta0, const Simplex& delta1);

struct RetractionMap {
    sheaf::ChainComplex source;  // C^•(Δ⁺, ∂Δ⁺)
    sheaf::ChainComplex target;  // C^•(Δ, ∂Δ)
    std::vector<Matrix> r;       // r[k]: source^k -> target^k
};

RetractionMap retraction_cochain_map(const FacePairInput& in, const RetractionPair& pair);
/// R δ = δ R in every degree.
Report check_cochain_map(const RetractionMap& m);
/// Mapping cone of R is acyclic (certified ranks), and cohomology dimensions agree.
Report check_quasi_isomorphism(const RetractionMap& m);

/// Relative cochain cohomology of (Δ, ∂Δ) is Q in `expected_degree` and zero elsewhere; the same
/// holds for the retraction pair, and R is a quasi-isomorphism between them.
Report verify_acyclicity(const FacePairInput& in, std::size_t expected_degree);

/// Every check on the standard d-simplex with face delta0: partition of top cells, the four
/// characterisations of Δ⁺, the boundary criterion, codimension of ∂Δ⁺, boundary decomposition,
/// cochain-map identity and quasi-isomorphism.
Report verify_simplex(std::size_t d, const Simplex& delta0);

}  // namespace corank::retraction
