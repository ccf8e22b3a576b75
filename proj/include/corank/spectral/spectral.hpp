#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "corank/linalg/matrix.hpp"
#include "corank/linalg/subspace.hpp"
#include "corank/report.hpp"
#include "corank/sheaf/cosheaf.hpp"

namespace corank::spectral {

using linalg::Matrix;
using linalg::Subspace;
using sheaf::ChainComplex;

/// Homological chain complex with an increasing, boundary-stable filtration
/// F_0 ⊆ F_1 ⊆ ... ⊆ F_L = total, one subspace per level and degree. Levels below 0 are zero,
/// levels above L are the whole complex.
class FilteredComplex {
public:
    /// Throws InvalidFiltration when a level is not a subcomplex, levels decrease, or the last
    /// level is not the whole complex.
    FilteredComplex(ChainComplex total, std::vector<std::vector<Subspace>> levels);
    /// Cell masks over the cosheaf's base, one per level (the last must be everything).
    static FilteredComplex from_masks(const sheaf::Cosheaf& f, const std::vector<topo::SubcomplexMask>& masks);

    const ChainComplex& total() const noexcept { return total_; }
    std::size_t length() const noexcept { return levels_.size() - 1; }  // L
    std::size_t num_degrees() const noexcept { return total_.num_degrees(); }
    /// F_p C_n with the conventions above.
    const Subspace& level(long p, std::size_t n) const;

private:
    ChainComplex total_;
    std::vector<std::vector<Subspace>> levels_;
    std::vector<Subspace> zero_, full_;
};

/// One term E^r_{p,q}, stored under (p, n = p + q).
struct Term {
    long p = 0;
    long q = 0;
    std::size_t dim = 0;
    Subspace z;  // Z^r_{p,n}
    Subspace b;  // Z^{r-1}_{p-1,n} + ∂ Z^{r-1}_{p+r-1,n+1}
};

struct Page {
    std::size_t r = 1;
    /// key (p, n)
    std::map<std::pair<long, std::size_t>, Term> terms;
    /// d^r out of (p, n), into (p - r, n - 1); only present when both ends are nonzero.
    std::map<std::pair<long, std::size_t>, Matrix> diffs;

    std::size_t dim(long p, std::size_t n) const;
    /// Nonzero dims keyed by (p, n).
    std::map<std::pair<long, std::size_t>, std::size_t> dims() const;
    long euler() const;
};

/// Closed-form page from the Z/B formulas. r >= 1.
Page page(const FilteredComplex& fc, std::size_t r);
/// Page L+1, after which nothing changes.
Page infinity_page(const FilteredComplex& fc);
/// All pages 1..L+1.
std::vector<Page> all_pages(const FilteredComplex& fc);

/// Dimensions of E^{r+1} obtained as the homology of (E^r, d^r).
std::map<std::pair<long, std::size_t>, std::size_t> next_page_dims(const Page& pg);
/// d^r ∘ d^r = 0 in every position.
Report check_dd_zero(const Page& pg);
/// Dimensions of H_n(F_p / F_{p-1}) computed from the induced quotient complex.
std::map<std::pair<long, std::size_t>, std::size_t> graded_homology_dims(const FilteredComplex& fc);

/// χ(E^r) equal for every r up to stabilisation.
Report euler_invariance(const FilteredComplex& fc);
/// Smallest r with dim E^r = dim E^∞ termwise.
std::size_t degeneration_page(const FilteredComplex& fc);
std::size_t degeneration_page(const std::vector<Page>& pages);

}  // namespace corank::spectral
