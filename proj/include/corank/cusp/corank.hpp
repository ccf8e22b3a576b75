#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corank/linalg/matrix.hpp"
#include "corank/report.hpp"
#include "corank/sheaf/cosheaf.hpp"
#include "corank/spectral/spectral.hpp"
#include "corank/topo/delta_complex.hpp"

namespace corank::cusp {

using linalg::Matrix;
using linalg::Rational;
using topo::DeltaComplex;
using topo::SubcomplexMask;

/// Cosheaf data of one cusp at one level p, on the cusp's own quotient complex.
struct LevelData {
    std::vector<std::size_t> dims;
    std::map<std::pair<std::size_t, std::size_t>, Matrix> ext;
    /// Restriction of each 0-cell stalk to the ambient space (absent cells map to zero).
    std::map<std::size_t, Matrix> augmentation;

    bool operator==(const LevelData&) const = default;
};

struct Cusp {
    std::string label;
    std::size_t corank = 1;
    DeltaComplex complex;
    std::vector<std::size_t> boundary;  // closed set of cells glued to lower corank
    std::map<std::size_t, LevelData> levels;
    std::optional<Rational> chi_gamma;
    std::optional<Rational> chi_hol;

    bool operator==(const Cusp&) const = default;
};

/// Identifies a boundary cell of `cusp` with a cell of a cusp of strictly lower corank.
struct Gluing {
    std::string cusp;
    std::size_t cell = 0;
    std::string target_cusp;
    std::size_t target_cell = 0;

    bool operator==(const Gluing&) const = default;
};

struct CorankInput {
    std::size_t n = 0;
    std::size_t r = 0;
    std::vector<std::size_t> n_table;  // n_table[i] = n(i), n_table[0] = 0
    std::vector<Cusp> cusps;
    std::vector<Gluing> gluing;
    std::map<std::size_t, std::size_t> ambient_dims;  // level p -> dimension of the ambient space

    bool operator==(const CorankInput&) const = default;
};

/// Structural checks that do not need the gluing: table shape, coranks, labels, complexes, masks,
/// stalk data shapes. Gluing problems are raised by build_dual_complex.
Report validate_input(const CorankInput& in);

struct DualComplex {
    std::shared_ptr<const DeltaComplex> complex;
    std::vector<std::size_t> owner;       // global cell -> cusp index
    std::vector<std::size_t> local_cell;  // global cell -> cell of the owner's complex
    std::vector<std::vector<std::size_t>> global_of;  // [cusp][local cell] -> global cell
};

/// Interior cells of every cusp, in cusp order then local id, with boundary cells identified
/// through the gluing. Throws GluingInconsistent.
DualComplex build_dual_complex(const CorankInput& in);

/// Δ_0 = ∅ ⊆ Δ_1 ⊆ ... ⊆ Δ_r; Δ_i holds cells whose cusp has corank at most i. Throws NotFaceClosed.
std::vector<SubcomplexMask> corank_filtration(const CorankInput& in, const DualComplex& dual);

/// The level-p cosheaf on the glued complex. Throws MissingCosheaf, GluingInconsistent (stalk
/// dimensions disagree across a gluing) or InvalidCosheaf.
sheaf::Cosheaf total_cosheaf(const CorankInput& in, const DualComplex& dual, std::size_t p);

/// max i with n(i) <= n - p, 0 if none.
std::size_t d_of_p(const CorankInput& in, std::size_t p);

/// Key (i, j) in corank coordinates: E_{i,j} sits in total degree m = i + j and comes from the
/// homology of the filtered complex in degree m - 1.
using CorkKey = std::pair<long, long>;
using CorkDims = std::map<CorkKey, std::size_t>;

CorkKey to_cork(long p, std::size_t n);
CorkDims cork_dims(const spectral::Page& pg);
/// Total degree m -> dimension.
std::map<long, std::size_t> total_dims(const CorkDims& d);

struct CorankSS {
    std::size_t p = 0;
    std::vector<spectral::Page> pages;  // E^1 .. E^{r+1}; the last one is E^∞
    std::size_t degeneration_page = 1;
    std::vector<std::size_t> total_homology;  // H_k of the whole cosheaf complex
    Report spectral_checks;  // d∘d = 0, iterated route, E^1 = graded homology, χ invariance
};

CorankSS corank_ss(const CorankInput& in, const DualComplex& dual, std::size_t p);

struct CuspContribution {
    std::string cusp;
    std::size_t dim = 0;
};
using E1Table = std::map<CorkKey, std::vector<CuspContribution>>;

/// Relative homology of each cusp's own pair at level p, placed at (corank, m - corank + 1).
E1Table e1_by_cusp(const CorankInput& in, std::size_t p);
Report cross_check(const E1Table& table, const spectral::Page& e1);
/// Σ_i dim E^∞_{i, m-i} = dim H_{m-1}(total) for m >= 2.
Report convergence_check(const CorankSS& ss);

Report shape_check(const CorankInput& in, std::size_t p, const spectral::Page& e1);
Report degeneration_report(const CorankInput& in, std::size_t p, const std::vector<spectral::Page>& pages);

/// Rank of the stacked augmentations C_0 -> ambient. Throws MissingAugmentation.
std::size_t eis_dim(const CorankInput& in, const DualComplex& dual, std::size_t p);

struct EulerLevel {
    std::size_t p = 0;
    long chi_e1 = 0;
    long chi_inf = 0;
    std::optional<Rational> formula;  // Σ_F (-1)^{n(i)} χ(Γ_F)·h^{p,0}
    Report report;
};

struct EulerReport {
    std::vector<EulerLevel> levels;
    /// Alternating sum over p of χ(E^1), and the metadata side Σ_F (-1)^{n(i)} χ_hol·χ(Γ_F), when
    /// every level 0..n-1 was computed and all cusps carry both numbers.
    std::optional<std::pair<Rational, Rational>> aggregate;
    Report report;
};

EulerReport euler_identity(const CorankInput& in, const std::map<std::size_t, CorankSS>& results);

/// num_cusps corank-1 cusps on a circle of `period` edges, constant Q at p = 0. Throws BadPeriod.
CorankInput hilbert_example(std::size_t num_cusps, std::size_t period);

/// Everything computed for one level.
struct CorankResult {
    std::size_t p = 0;
    std::size_t d = 0;
    DualComplex dual;
    std::vector<SubcomplexMask> filtration;
    CorankSS ss;
    E1Table e1_table;
    std::optional<std::size_t> eis;
    Report cross;
    Report convergence;
    Report shape;
    Report degeneration;
    EulerLevel euler;

    bool ok() const {
        return ss.spectral_checks.ok && cross.ok && convergence.ok && shape.ok && degeneration.ok && euler.report.ok;
    }
};

CorankResult run_corank(const CorankInput& in, std::size_t p);

}  // namespace corank::cusp
