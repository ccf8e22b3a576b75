#include "corank/sheaf/cosheaf.hpp"

#include "corank/error.hpp"
#include "corank/linalg/modrank.hpp"
#include "corank/linalg/ops.hpp"

namespace corank::sheaf {

using linalg::Rational;

Cosheaf::Cosheaf(std::shared_ptr<const DeltaComplex> base, std::vector<std::size_t> dims)
    : base_(std::move(base)), dims_(std::move(dims)) {
    if (!base_) throw Error(ErrorKind::InvalidCosheaf, "cosheaf without a base complex");
    if (dims_.size() != base_->size())
        throw Error(ErrorKind::InvalidCosheaf, "stalk dimensions given for " + std::to_string(dims_.size()) +
                                                   " cells, complex has " + std::to_string(base_->size()));
}

Cosheaf Cosheaf::constant(std::shared_ptr<const DeltaComplex> base, std::size_t dim) {
    const std::size_t n = base ? base->size() : 0;
    Cosheaf f(std::move(base), std::vector<std::size_t>(n, dim));
    for (std::size_t id = 0; id < n; ++id)
        for (std::size_t i = 0; i < f.base().cell(id).faces.size(); ++i) f.set_ext(id, i, Matrix::identity(dim));
    return f;
}

void Cosheaf::set_ext(std::size_t cell, std::size_t face_index, Matrix m) {
    if (cell >= base_->size() || face_index >= base_->cell(cell).faces.size())
        throw Error(ErrorKind::InvalidCosheaf, "extension map for nonexistent face " + std::to_string(face_index) +
                                                   " of cell " + std::to_string(cell));
    ext_[{cell, face_index}] = std::move(m);
}

Matrix Cosheaf::ext(std::size_t cell, std::size_t face_index) const {
    auto it = ext_.find({cell, face_index});
    if (it != ext_.end()) return it->second;
    return Matrix(dims_.at(base_->cell(cell).faces.at(face_index)), dims_.at(cell));
}

Report validate_cosheaf(const Cosheaf& f) {
    Report rep;
    const DeltaComplex& d = f.base();
    for (const auto& [key, m] : f.ext_entries()) {
        const auto [cell, i] = key;
        const std::size_t face = d.cell(cell).faces.at(i);
        if (m.rows() != f.dim_at(face) || m.cols() != f.dim_at(cell))
            rep.fail("ext(" + std::to_string(cell) + "," + std::to_string(i) + "): shape " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", expected " + std::to_string(f.dim_at(face)) + "x" + std::to_string(f.dim_at(cell)));
    }
    if (!rep.ok) return rep;
    for (std::size_t cell = 0; cell < d.size(); ++cell) {
        const auto& faces = d.cell(cell).faces;
        if (faces.size() < 3) continue;  // 1-cells have no codimension-two faces
        for (std::size_t j = 1; j < faces.size(); ++j)
            for (std::size_t i = 0; i < j; ++i) {
                // face_i(face_j(τ)) = face_{j-1}(face_i(τ))
                Matrix lhs = f.ext(faces[j], i) * f.ext(cell, j);
                Matrix rhs = f.ext(faces[i], j - 1) * f.ext(cell, i);
                if (lhs != rhs)
                    rep.fail("cell " + std::to_string(cell) + ": extension square for faces (" + std::to_string(i) + "," +
                             std::to_string(j) + ") does not commute");
            }
    }
    return rep;
}

Matrix ChainComplex::incoming(std::size_t k) const {
    if (grading == Grading::Homological) {
        if (k + 1 < differential.size()) return differential[k + 1];
    } else if (k > 0) {
        return differential[k - 1];
    }
    return Matrix(dims.at(k), 0);
}

Report check_complex(const ChainComplex& c) {
    Report rep;
    for (std::size_t k = 0; k < c.num_degrees(); ++k) {
        Matrix in = c.incoming(k);
        if (in.cols() == 0 || in.rows() == 0) continue;
        if (!(c.outgoing(k) * in).is_zero())
            rep.fail("differentials into and out of degree " + std::to_string(k) + " do not compose to zero");
    }
    return rep;
}

namespace {

// Chain complex on the cells with include[id] set; components landing outside are dropped.
ChainComplex build_chain_complex(const Cosheaf& f, const std::vector<char>& include) {
    const DeltaComplex& d = f.base();
    const std::size_t degrees = d.top_dim() < 0 ? 0 : static_cast<std::size_t>(d.top_dim()) + 1;
    ChainComplex c;
    c.grading = Grading::Homological;
    c.dims.assign(degrees, 0);
    c.cells.resize(degrees);
    c.offsets.resize(degrees);
    std::vector<std::size_t> offset_of(d.size(), 0);
    for (std::size_t k = 0; k < degrees; ++k)
        for (auto id : d.cells_of_dim(k)) {
            if (!include[id]) continue;
            c.cells[k].push_back(id);
            c.offsets[k].push_back(c.dims[k]);
            offset_of[id] = c.dims[k];
            c.dims[k] += f.dim_at(id);
        }
    for (std::size_t k = 0; k < degrees; ++k) {
        if (k == 0) {
            c.differential.emplace_back(0, c.dims[0]);
            continue;
        }
        Matrix m(c.dims[k - 1], c.dims[k]);
        for (std::size_t pos = 0; pos < c.cells[k].size(); ++pos) {
            const std::size_t id = c.cells[k][pos];
            const auto& faces = d.cell(id).faces;
            for (std::size_t i = 0; i < faces.size(); ++i) {
                if (!include[faces[i]]) continue;
                const Matrix e = f.ext(id, i);
                const Rational sign = i % 2 == 0 ? 1 : -1;
                for (std::size_t col = 0; col < e.cols(); ++col)
                    for (const auto& entry : e.column(col))
                        m.add_to(offset_of[faces[i]] + entry.row, c.offsets[k][pos] + col, sign * entry.value);
            }
        }
        c.differential.push_back(std::move(m));
    }
    return c;
}

void require_valid(const Cosheaf& f) {
    Report rep = validate_cosheaf(f);
    if (!rep.ok) throw Error(ErrorKind::InvalidCosheaf, rep.violations.front());
}

void require_closed(const DeltaComplex& d, const SubcomplexMask& m, const char* what) {
    if (m.universe() != d.size()) throw Error(ErrorKind::MaskNotClosed, std::string(what) + " is over a different complex");
    auto bad = m.unclosed_members(d);
    if (!bad.empty())
        throw Error(ErrorKind::MaskNotClosed, std::string(what) + " is not closed under faces at cell " + std::to_string(bad.front()));
}

std::vector<char> membership(const SubcomplexMask* m, std::size_t n) {
    std::vector<char> inc(n, 1);
    if (m)
        for (std::size_t i = 0; i < n; ++i) inc[i] = m->contains(i) ? 1 : 0;
    return inc;
}

}  // namespace

ChainComplex chain_complex(const Cosheaf& f, const SubcomplexMask* mask) {
    require_valid(f);
    if (mask && mask->universe() != f.base().size()) throw Error(ErrorKind::AmbientMismatch, "mask over a different complex");
    return build_chain_complex(f, membership(mask, f.base().size()));
}

ChainComplex relative_chain_complex(const Cosheaf& f, const SubcomplexMask& sub) {
    return relative_chain_complex(f, SubcomplexMask::all(f.base().size()), sub);
}

ChainComplex relative_chain_complex(const Cosheaf& f, const SubcomplexMask& outer, const SubcomplexMask& inner) {
    require_valid(f);
    require_closed(f.base(), outer, "outer mask");
    require_closed(f.base(), inner, "subcomplex mask");
    if (!inner.subset_of(outer)) throw Error(ErrorKind::InvalidFiltration, "subcomplex is not contained in the outer complex");
    std::vector<char> inc(f.base().size(), 0);
    for (std::size_t i = 0; i < inc.size(); ++i) inc[i] = outer.contains(i) && !inner.contains(i);
    return build_chain_complex(f, inc);
}

Homology homology(const ChainComplex& c, std::size_t k) {
    if (k >= c.num_degrees()) return Homology{0, Subspace::zero(0), Subspace::zero(0), Matrix(0, 0)};
    const Matrix& out = c.outgoing(k);
    Matrix in = c.incoming(k);
    if (in.cols() > 0 && out.rows() > 0 && !(out * in).is_zero())
        throw Error(ErrorKind::NotAComplex, "differentials around degree " + std::to_string(k) + " do not compose to zero");
    Homology h;
    h.cycles = linalg::kernel(out);
    h.boundaries = linalg::image(in);
    h.representatives = linalg::quotient_basis(h.cycles, h.boundaries);
    h.dim = h.representatives.cols();
    return h;
}

std::vector<std::size_t> homology_dims(const ChainComplex& c) {
    Report rep = check_complex(c);
    if (!rep.ok) throw Error(ErrorKind::NotAComplex, rep.violations.front());
    std::vector<std::size_t> ranks(c.num_degrees());
    for (std::size_t k = 0; k < c.num_degrees(); ++k) ranks[k] = linalg::rank_certified(c.differential[k]);
    std::vector<std::size_t> dims(c.num_degrees());
    for (std::size_t k = 0; k < c.num_degrees(); ++k) {
        std::size_t in_rank = 0;
        if (c.grading == Grading::Homological && k + 1 < c.num_degrees()) in_rank = ranks[k + 1];
        if (c.grading == Grading::Cohomological && k > 0) in_rank = ranks[k - 1];
        dims[k] = c.dims[k] - ranks[k] - in_rank;
    }
    return dims;
}

namespace {

// Matrix sending the basis of `from` to the matching coordinates of `to` (cells absent in `to`
// are dropped), for complexes built from the same cosheaf.
Matrix cell_transfer(const Cosheaf& f, const ChainComplex& from, const ChainComplex& to, std::size_t k) {
    Matrix m(to.dims[k], from.dims[k]);
    std::map<std::size_t, std::size_t> target;
    for (std::size_t pos = 0; pos < to.cells[k].size(); ++pos) target[to.cells[k][pos]] = to.offsets[k][pos];
    for (std::size_t pos = 0; pos < from.cells[k].size(); ++pos) {
        auto it = target.find(from.cells[k][pos]);
        if (it == target.end()) continue;
        for (std::size_t s = 0; s < f.dim_at(from.cells[k][pos]); ++s) m.set(it->second + s, from.offsets[k][pos] + s, Rational(1));
    }
    return m;
}

}  // namespace

Report les_of_pair_check(const Cosheaf& f, const SubcomplexMask& sub) {
    Report rep;
    ChainComplex csub = chain_complex(f, &sub);
    ChainComplex call = chain_complex(f);
    ChainComplex crel = relative_chain_complex(f, sub);
    const std::size_t degrees = call.num_degrees();
    std::vector<Homology> hsub, hall, hrel;
    for (std::size_t k = 0; k < degrees; ++k) {
        hsub.push_back(homology(csub, k));
        hall.push_back(homology(call, k));
        hrel.push_back(homology(crel, k));
    }
    std::vector<std::size_t> ri(degrees), rj(degrees), rc(degrees + 1, 0);
    for (std::size_t k = 0; k < degrees; ++k) {
        Matrix incl = cell_transfer(f, csub, call, k);
        Matrix proj = cell_transfer(f, call, crel, k);
        ri[k] = linalg::rank(linalg::induced_map(incl, hsub[k].cycles, hsub[k].boundaries, hall[k].cycles, hall[k].boundaries));
        rj[k] = linalg::rank(linalg::induced_map(proj, hall[k].cycles, hall[k].boundaries, hrel[k].cycles, hrel[k].boundaries));
        if (k == 0) continue;
        Matrix lift = cell_transfer(f, crel, call, k);
        Matrix down = cell_transfer(f, call, csub, k - 1);
        Matrix connecting = down * call.differential[k] * lift;
        rc[k] = linalg::rank(linalg::induced_map(connecting, hrel[k].cycles, hrel[k].boundaries, hsub[k - 1].cycles,
                                                 hsub[k - 1].boundaries));
    }
    for (std::size_t k = 0; k < degrees; ++k) {
        const std::string deg = std::to_string(k);
        if (rc[k + 1] + ri[k] != hsub[k].dim) rep.fail("not exact at H_" + deg + "(sub)");
        if (ri[k] + rj[k] != hall[k].dim) rep.fail("not exact at H_" + deg + "(whole)");
        if (rj[k] + rc[k] != hrel[k].dim) rep.fail("not exact at H_" + deg + "(whole, sub)");
    }
    return rep;
}

namespace {

ChainComplex dualize(const ChainComplex& c) {
    ChainComplex out;
    out.grading = Grading::Cohomological;
    out.dims = c.dims;
    out.cells = c.cells;
    out.offsets = c.offsets;
    for (std::size_t k = 0; k < c.num_degrees(); ++k) {
        if (k + 1 < c.num_degrees())
            out.differential.push_back(c.differential[k + 1].transpose());
        else
            out.differential.emplace_back(0, c.dims[k]);
    }
    return out;
}

}  // namespace

ChainComplex relative_cochain_complex(const DeltaComplex& d, const SubcomplexMask& outer, const SubcomplexMask& inner) {
    auto base = std::make_shared<const DeltaComplex>(d);
    return dualize(relative_chain_complex(Cosheaf::constant(base), outer, inner));
}

ChainComplex compact_cochain_pair(const topo::SimplicialComplex& s, const SubcomplexMask& boundary_mask) {
    DeltaComplex d = topo::as_delta(s);
    return relative_cochain_complex(d, SubcomplexMask::all(d.size()), boundary_mask);
}

}  // namespace corank::sheaf
