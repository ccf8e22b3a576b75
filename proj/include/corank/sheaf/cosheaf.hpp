#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "corank/linalg/matrix.hpp"
#include "corank/linalg/subspace.hpp"
#include "corank/report.hpp"
#include "corank/topo/delta_complex.hpp"
#include "corank/topo/simplicial.hpp"

namespace corank::sheaf {

using linalg::Matrix;
using linalg::Subspace;
using topo::DeltaComplex;
using topo::SubcomplexMask;

/// Stalk dimensions per cell and extension maps F(cell) -> F(face_i(cell)), keyed by the face
/// position so repeated faces of a Delta-complex keep separate maps. A missing entry is the zero map.
class Cosheaf {
public:
    Cosheaf() = default;
    Cosheaf(std::shared_ptr<const DeltaComplex> base, std::vector<std::size_t> dims);

    /// Stalk Q^dim on every cell, identity extensions.
    static Cosheaf constant(std::shared_ptr<const DeltaComplex> base, std::size_t dim = 1);

    const DeltaComplex& base() const { return *base_; }
    const std::shared_ptr<const DeltaComplex>& base_ptr() const { return base_; }
    std::size_t dim_at(std::size_t cell) const { return dims_.at(cell); }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }

    void set_ext(std::size_t cell, std::size_t face_index, Matrix m);
    /// The stored map, or a zero matrix of the right shape.
    Matrix ext(std::size_t cell, std::size_t face_index) const;
    bool has_ext(std::size_t cell, std::size_t face_index) const { return ext_.count({cell, face_index}) != 0; }
    const std::map<std::pair<std::size_t, std::size_t>, Matrix>& ext_entries() const noexcept { return ext_; }

    bool operator==(const Cosheaf& rhs) const { return *base_ == *rhs.base_ && dims_ == rhs.dims_ && ext_ == rhs.ext_; }

private:
    std::shared_ptr<const DeltaComplex> base_;
    std::vector<std::size_t> dims_;
    std::map<std::pair<std::size_t, std::size_t>, Matrix> ext_;
};

/// Shapes of all extension maps and commutativity of every square down to codimension two.
Report validate_cosheaf(const Cosheaf& f);

enum class Grading { Homological, Cohomological };

/// differential[k] is the map out of degree k: C_k -> C_{k-1} for homological grading (zero
/// columns-only matrix at k = 0), C^k -> C^{k+1} for cohomological grading.
struct ChainComplex {
    Grading grading = Grading::Homological;
    std::vector<std::size_t> dims;
    std::vector<Matrix> differential;
    /// For complexes built from cells: per degree, the cell ids in basis order with their offsets.
    std::vector<std::vector<std::size_t>> cells;
    std::vector<std::vector<std::size_t>> offsets;

    std::size_t num_degrees() const noexcept { return dims.size(); }
    /// The map into degree k (a zero matrix when there is none).
    Matrix incoming(std::size_t k) const;
    /// The map out of degree k.
    const Matrix& outgoing(std::size_t k) const { return differential.at(k); }
};

/// Composite of consecutive differentials vanishes in every degree.
Report check_complex(const ChainComplex& c);

/// C_k = direct sum of F(σ) over k-cells of the mask (all cells if none), boundary the
/// alternating sum of extension maps. Throws InvalidCosheaf.
ChainComplex chain_complex(const Cosheaf& f, const SubcomplexMask* mask = nullptr);
/// Quotient by the cells of `sub`. Throws MaskNotClosed.
ChainComplex relative_chain_complex(const Cosheaf& f, const SubcomplexMask& sub);
/// C(outer)/C(inner) for closed masks inner ⊆ outer. Throws MaskNotClosed or InvalidFiltration.
ChainComplex relative_chain_complex(const Cosheaf& f, const SubcomplexMask& outer, const SubcomplexMask& inner);

struct Homology {
    std::size_t dim = 0;
    Subspace cycles;
    Subspace boundaries;
    /// Representatives of a basis of cycles/boundaries.
    Matrix representatives;
};

/// Throws NotAComplex when the differentials around degree k do not compose to zero.
Homology homology(const ChainComplex& c, std::size_t k);
/// Dimensions in all degrees via certified ranks (no bases).
std::vector<std::size_t> homology_dims(const ChainComplex& c);

/// Exactness of the long exact sequence of the pair (Δ, sub) with the actual induced maps.
Report les_of_pair_check(const Cosheaf& f, const SubcomplexMask& sub);

/// Relative simplicial cochains C^•(s, boundary) with δ the transpose of the chain boundary.
ChainComplex compact_cochain_pair(const topo::SimplicialComplex& s, const SubcomplexMask& boundary_mask);
/// Relative cochains of (outer, inner) with constant coefficients on a Delta-complex.
ChainComplex relative_cochain_complex(const DeltaComplex& d, const SubcomplexMask& outer, const SubcomplexMask& inner);

}  // namespace corank::sheaf
