#include "corank/retraction/retraction.hpp"

#include <algorithm>

#include "corank/error.hpp"
#include "corank/linalg/modrank.hpp"
#include "corank/util/parallel.hpp"

namespace corank::retraction {

namespace {

bool subset(const Simplex& a, const Simplex& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

bool meets(const Simplex& a, const Simplex& b) {
    for (auto v : a)
        if (std::binary_search(b.begin(), b.end(), v)) return true;
    return false;
}

Simplex set_minus(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

SubcomplexMask closure(const SimplicialComplex& c, const std::vector<std::size_t>& ids) {
    SubcomplexMask m(c.size());
    std::vector<std::size_t> stack = ids;
    while (!stack.empty()) {
        auto id = stack.back();
        stack.pop_back();
        if (m.contains(id)) continue;
        m.insert(id);
        for (auto f : c.facets(id)) stack.push_back(f);
    }
    return m;
}

std::size_t max_vertex_star(const SimplicialComplex& c, const SubcomplexMask& m) {
    std::vector<std::size_t> star(c.num_vertices(), 0);
    for (auto id : m.ids())
        for (auto v : c.simplex(id)) ++star[v];
    return star.empty() ? 0 : *std::max_element(star.begin(), star.end());
}

std::vector<Simplex> flag_members(const SimplicialComplex& s, const topo::Flag& f) {
    std::vector<Simplex> out;
    for (auto id : f.chain) out.push_back(s.simplex(id));
    return out;
}

long mask_dim(const SimplicialComplex& c, const SubcomplexMask& m) {
    long best = -1;
    for (auto id : m.ids()) best = std::max(best, static_cast<long>(c.simplex(id).size()) - 1);
    return best;
}

}  // namespace

std::string_view to_string(CellClass c) {
    switch (c) {
        case CellClass::Plus: return "PLUS";
        case CellClass::Minus: return "MINUS";
        case CellClass::BoundaryPlusClosed: return "BOUNDARY_PLUS_CLOSED";
        case CellClass::Neither: return "NEITHER";
    }
    return "?";
}

CellClass classify_cell(const std::vector<Simplex>& flag, const Simplex& delta0, const Simplex& delta1) {
    if (flag.empty() || flag.front().empty()) return CellClass::Neither;
    const Simplex& first = flag.front();
    for (auto v : first)
        if (!std::binary_search(delta0.begin(), delta0.end(), v) && !std::binary_search(delta1.begin(), delta1.end(), v))
            return CellClass::Neither;
    const bool in0 = meets(first, delta0), in1 = meets(first, delta1);
    if (in0 && in1) return CellClass::BoundaryPlusClosed;
    return in1 ? CellClass::Plus : CellClass::Minus;
}

Simplex delta0_of(const FacePairInput& in, std::size_t sigma) {
    Simplex out;
    for (auto v : in.ambient.simplex(sigma))
        if (in.boundary.contains(v)) out.push_back(v);  // vertex v has simplex id v
    return out;
}

Report check_conditions(const FacePairInput& in) {
    Report rep = topo::validate(in.ambient);
    if (in.boundary.universe() != in.ambient.size()) {
        rep.fail("boundary mask covers " + std::to_string(in.boundary.universe()) + " simplices, complex has " +
                 std::to_string(in.ambient.size()));
        return rep;
    }
    for (auto id : in.boundary.ids())
        for (auto f : in.ambient.facets(id))
            if (!in.boundary.contains(f)) rep.fail("boundary simplex " + std::to_string(id) + " is missing its face " + std::to_string(f));
    for (std::size_t id = 0; id < in.ambient.size(); ++id) {
        Simplex d0 = delta0_of(in, id);
        if (d0.empty()) continue;
        auto f = in.ambient.find(d0);
        if (!f || !in.boundary.contains(*f))
            rep.fail("simplex " + std::to_string(id) + ": its vertices on the boundary do not span a boundary simplex");
    }
    return rep;
}

RetractionPair local_retraction(const SimplicialComplex& s, const Subdivision& sd, std::size_t sigma, const Simplex& delta0) {
    const Simplex& top = s.simplex(sigma);
    if (!subset(delta0, top)) throw Error(ErrorKind::InvalidComplex, "face is not contained in the simplex");
    const Simplex delta1 = set_minus(top, delta0);
    const SimplicialComplex& c = sd.complex;
    RetractionPair out;
    out.plus = SubcomplexMask(c.size());
    out.boundary_plus = SubcomplexMask(c.size());
    out.minus = SubcomplexMask(c.size());
    std::vector<std::size_t> plus_tops, minus_tops;
    for (std::size_t cell = 0; cell < c.size(); ++cell) {
        const auto& chain = sd.flag_index[cell].chain;
        if (!subset(s.simplex(chain.back()), top)) continue;
        // Each vertex of the subdivision is a barycenter; it lies in a face exactly when its
        // supporting simplex does.
        bool touches0 = false, touches1 = false;
        for (auto v : chain) {
            const Simplex& support = s.simplex(v);
            touches0 = touches0 || (!delta0.empty() && subset(support, delta0));
            touches1 = touches1 || (!delta1.empty() && subset(support, delta1));
        }
        if (chain.size() == top.size() && chain.back() == sigma) {
            if (touches1) plus_tops.push_back(cell);
            if (touches0) minus_tops.push_back(cell);
        }
        if (!touches0 && !touches1) out.boundary_plus.insert(cell);
    }
    out.plus = closure(c, plus_tops);
    out.minus = closure(c, minus_tops);
    out.max_vertex_star = max_vertex_star(c, out.plus);
    return out;
}

RetractionPair retract_complex(const FacePairInput& in) {
    Report rep = check_conditions(in);
    if (!rep.ok) throw Error(ErrorKind::Condition2Violated, rep.violations.front());
    RetractionPair out;
    out.subdivided = topo::barycentric_subdivide(in.ambient);
    const std::size_t n = out.subdivided.complex.size();
    std::vector<RetractionPair> parts(in.ambient.size());
    util::parallel_for(in.ambient.size(), [&](std::size_t sigma) {
        parts[sigma] = local_retraction(in.ambient, out.subdivided, sigma, delta0_of(in, sigma));
    });
    out.plus = SubcomplexMask(n);
    out.boundary_plus = SubcomplexMask(n);
    out.minus = SubcomplexMask(n);
    for (const auto& part : parts) {
        out.plus = out.plus | part.plus;
        out.boundary_plus = out.boundary_plus | part.boundary_plus;
        out.minus = out.minus | part.minus;
    }
    out.max_vertex_star = max_vertex_star(out.subdivided.complex, out.plus);
    return out;
}

RetractionPair retract_simplex(std::size_t d, const Simplex& delta0) {
    FacePairInput in;
    in.ambient = SimplicialComplex::standard_simplex(d);
    std::vector<std::size_t> gens;
    if (!delta0.empty()) gens.push_back(in.ambient.id_of(delta0));
    in.boundary = closure(in.ambient, gens);
    return retract_complex(in);
}

Report restriction_check(const FacePairInput& in, const RetractionPair& pair) {
    Report rep;
    const auto& sd = pair.subdivided;
    for (std::size_t sigma = 0; sigma < in.ambient.size(); ++sigma) {
        RetractionPair solo = local_retraction(in.ambient, sd, sigma, delta0_of(in, sigma));
        const Simplex& top = in.ambient.simplex(sigma);
        for (std::size_t cell = 0; cell < sd.complex.size(); ++cell) {
            if (!subset(in.ambient.simplex(sd.flag_index[cell].chain.back()), top)) continue;
            if (solo.plus.contains(cell) != pair.plus.contains(cell) ||
                solo.boundary_plus.contains(cell) != pair.boundary_plus.contains(cell))
                rep.fail("simplex " + std::to_string(sigma) + ": glued retraction disagrees with its own at cell " + std::to_string(cell));
        }
    }
    return rep;
}

Report boundary_decomposition_check(const FacePairInput& in, const RetractionPair& pair) {
    Report rep;
    const auto maxi = in.ambient.maximal();
    if (maxi.size() != 1) {
        rep.fail("boundary decomposition is stated for a single simplex");
        return rep;
    }
    const std::size_t sigma = maxi.front();
    const std::size_t d = in.ambient.simplex(sigma).size() - 1;
    const SimplicialComplex& c = pair.subdivided.complex;
    // Boundary in the usual sense: closure of codimension-one cells with exactly one top coface.
    std::vector<std::size_t> cofaces(c.size(), 0);
    for (auto id : pair.plus.ids())
        if (c.simplex(id).size() == d + 1)
            for (auto f : c.facets(id)) ++cofaces[f];
    std::vector<std::size_t> free_faces;
    for (std::size_t id = 0; id < c.size(); ++id)
        if (cofaces[id] == 1) free_faces.push_back(id);
    SubcomplexMask usual = closure(c, free_faces);

    SubcomplexMask facet_parts(c.size());
    for (auto tau : in.ambient.facets(sigma))
        facet_parts = facet_parts | local_retraction(in.ambient, pair.subdivided, tau, delta0_of(in, tau)).plus;
    if (!(usual == (pair.boundary_plus | facet_parts)))
        rep.fail("boundary of Δ⁺ differs from ∂Δ⁺ together with the facet retractions");

    SubcomplexMask on_boundary(c.size());
    for (std::size_t id = 0; id < c.size(); ++id)
        if (in.ambient.simplex(pair.subdivided.flag_index[id].chain.back()).size() <= d) on_boundary.insert(id);
    if (!(facet_parts == (pair.plus & on_boundary)))
        rep.fail("facet retractions differ from Δ⁺ ∩ (boundary of Δ)");
    return rep;
}

CellClass classify_point(const Point& lambda, const Simplex& delta0, const Simplex& delta1) {
    if (delta0.empty() && delta1.empty()) return CellClass::Neither;
    Rational m0 = -1, m1 = -1;
    for (auto v : delta0) m0 = std::max(m0, lambda.at(v));
    for (auto v : delta1) m1 = std::max(m1, lambda.at(v));
    if (m0 == m1) return CellClass::BoundaryPlusClosed;
    return m1 > m0 ? CellClass::Plus : CellClass::Minus;
}

Rational crossing_parameter(const Point& x, const Point& y, const Simplex& delta0, const Simplex& delta1) {
    if (delta0.empty() || delta1.empty()) throw Error(ErrorKind::DegenerateFace, "crossing parameter needs both faces nonempty");
    if (x.size() != y.size()) throw Error(ErrorKind::AmbientMismatch, "points of different length");
    auto check = [&](const Point& pt, const Simplex& face, const char* name) {
        Rational total = 0;
        for (std::size_t i = 0; i < pt.size(); ++i) {
            if (pt[i] < 0) throw Error(ErrorKind::NotContained, std::string(name) + " has a negative barycentric coordinate");
            if (pt[i] != 0 && !std::binary_search(face.begin(), face.end(), i))
                throw Error(ErrorKind::NotContained, std::string(name) + " is not supported on its face");
            total += pt[i];
        }
        if (total != 1) throw Error(ErrorKind::NotContained, std::string(name) + " coordinates do not sum to 1");
    };
    check(x, delta0, "x");
    check(y, delta1, "y");
    // On the segment the largest coordinate over delta0 is t·a and over delta1 is (1-t)·b.
    Rational a = 0, b = 0;
    for (auto v : delta0) a = std::max(a, x[v]);
    for (auto v : delta1) b = std::max(b, y[v]);
    Rational t = b / (a + b);
    t.canonicalize();
    return t;
}

RetractionMap retraction_cochain_map(const FacePairInput& in, const RetractionPair& pair) {
    RetractionMap out;
    out.target = sheaf::compact_cochain_pair(in.ambient, in.boundary);
    const topo::DeltaComplex sd_delta = topo::as_delta(pair.subdivided.complex);
    out.source = sheaf::relative_cochain_complex(sd_delta, pair.plus, pair.boundary_plus);
    const topo::DeltaComplex s_delta = topo::as_delta(in.ambient);
    const auto full = topo::subdivision_chain_map(in.ambient, pair.subdivided);
    const std::size_t degrees = out.target.num_degrees();
    for (std::size_t k = 0; k < degrees; ++k) {
        std::vector<std::size_t> rows, cols;
        for (auto id : out.target.cells[k]) rows.push_back(s_delta.index_in_dim(id));
        if (k < out.source.num_degrees())
            for (auto id : out.source.cells[k]) cols.push_back(sd_delta.index_in_dim(id));
        out.r.push_back(full[k].select_rows(rows).select_columns(cols));
    }
    return out;
}

Report check_cochain_map(const RetractionMap& m) {
    Report rep;
    for (std::size_t k = 0; k + 1 < m.r.size(); ++k) {
        Matrix lhs = m.r[k + 1] * m.source.differential[k];
        Matrix rhs = m.target.differential[k] * m.r[k];
        if (lhs != rhs) rep.fail("R does not commute with the coboundary in degree " + std::to_string(k));
    }
    return rep;
}

Report check_quasi_isomorphism(const RetractionMap& m) {
    Report rep;
    const std::size_t top = m.r.size();
    auto src_dim = [&](long k) -> std::size_t { return k >= 0 && static_cast<std::size_t>(k) < top ? m.source.dims[static_cast<std::size_t>(k)] : 0; };
    auto tgt_dim = [&](long k) -> std::size_t { return k >= 0 && static_cast<std::size_t>(k) < top ? m.target.dims[static_cast<std::size_t>(k)] : 0; };
    auto src_d = [&](long k) { return k >= 0 && static_cast<std::size_t>(k) < top ? m.source.differential[static_cast<std::size_t>(k)] : Matrix(src_dim(k + 1), src_dim(k)); };
    auto tgt_d = [&](long k) { return k >= 0 && static_cast<std::size_t>(k) < top ? m.target.differential[static_cast<std::size_t>(k)] : Matrix(tgt_dim(k + 1), tgt_dim(k)); };
    auto r_at = [&](long k) { return k >= 0 && static_cast<std::size_t>(k) < top ? m.r[static_cast<std::size_t>(k)] : Matrix(tgt_dim(k), src_dim(k)); };
    // cone^k = source^{k+1} ⊕ target^k, d(a, b) = (-δa, R a + δ b).
    const long lo = -1, hi = static_cast<long>(top);
    std::vector<std::size_t> ranks;
    std::vector<std::size_t> dims;
    for (long k = lo; k <= hi; ++k) {
        Matrix upper = (-src_d(k + 1)).hstack(Matrix(src_dim(k + 2), tgt_dim(k)));
        Matrix lower = r_at(k + 1).hstack(tgt_d(k));
        ranks.push_back(linalg::rank_certified(upper.vstack(lower)));
        dims.push_back(src_dim(k + 1) + tgt_dim(k));
    }
    for (std::size_t i = 0; i < dims.size(); ++i) {
        const std::size_t in_rank = i > 0 ? ranks[i - 1] : 0;
        if (dims[i] != ranks[i] + in_rank)
            rep.fail("mapping cone of R has cohomology in degree " + std::to_string(static_cast<long>(i) + lo));
    }
    auto hs = sheaf::homology_dims(m.source);
    auto ht = sheaf::homology_dims(m.target);
    if (hs != ht) rep.fail("cohomology dimensions of the two pairs differ");
    return rep;
}

Report verify_acyclicity(const FacePairInput& in, std::size_t expected_degree) {
    Report rep;
    RetractionPair pair = retract_complex(in);
    RetractionMap rm = retraction_cochain_map(in, pair);
    auto check_dims = [&](const sheaf::ChainComplex& c, const std::string& what) {
        auto h = sheaf::homology_dims(c);
        for (std::size_t k = 0; k < std::max(h.size(), expected_degree + 1); ++k) {
            const std::size_t got = k < h.size() ? h[k] : 0;
            const std::size_t want = k == expected_degree ? 1 : 0;
            if (got != want)
                rep.fail(what + ": H^" + std::to_string(k) + " has dimension " + std::to_string(got) + ", expected " + std::to_string(want));
        }
    };
    check_dims(rm.target, "(Δ, ∂Δ)");
    check_dims(rm.source, "(Δ⁺, ∂Δ⁺)");
    rep.merge(check_cochain_map(rm));
    rep.merge(check_quasi_isomorphism(rm));
    return rep;
}

Report verify_simplex(std::size_t d, const Simplex& delta0) {
    Report rep;
    FacePairInput in;
    in.ambient = SimplicialComplex::standard_simplex(d);
    std::vector<std::size_t> gens;
    if (!delta0.empty()) gens.push_back(in.ambient.id_of(delta0));
    in.boundary = closure(in.ambient, gens);
    const RetractionPair pair = retract_complex(in);
    const SimplicialComplex& c = pair.subdivided.complex;
    const SimplicialComplex& s = in.ambient;
    const Simplex all = s.simplex(s.size() - 1);
    const Simplex delta1 = set_minus(all, delta0);

    for (std::size_t cell = 0; cell < c.size(); ++cell) {
        const auto members = flag_members(s, pair.subdivided.flag_index[cell]);
        const std::string who = "cell " + std::to_string(cell);
        bool meets0 = false;
        for (const auto& m : members) meets0 = meets0 || (!delta0.empty() && subset(m, delta0));
        const Simplex& first = members.front();
        const bool in_plus = pair.plus.contains(cell);
        const bool first_meets1 = meets(first, delta1);
        const bool first_in0 = !delta0.empty() && subset(first, delta0);
        if (in_plus != !meets0 || in_plus != first_meets1 || in_plus != !first_in0)
            rep.fail(who + ": characterisations of Δ⁺ membership disagree");
        const bool bdry = pair.boundary_plus.contains(cell);
        if (bdry != (meets(first, delta0) && first_meets1)) rep.fail(who + ": ∂Δ⁺ membership disagrees with the flag criterion");
        if (bdry != (in_plus && pair.minus.contains(cell))) rep.fail(who + ": ∂Δ⁺ differs from Δ⁺ ∩ Δ⁻");
        if (members.size() == d + 1) {
            const CellClass cls = classify_cell(members, delta0, delta1);
            if (cls != CellClass::Plus && cls != CellClass::Minus) rep.fail(who + ": top cell classified " + std::string(to_string(cls)));
            if ((cls == CellClass::Plus) != !meets0) rep.fail(who + ": PLUS does not match disjointness from Δ_0");
            if ((cls == CellClass::Plus) != in_plus) rep.fail(who + ": classification disagrees with the Δ⁺ mask");
            if (!in_plus && !pair.minus.contains(cell)) rep.fail(who + ": top cell in neither Δ⁺ nor Δ⁻");
        }
    }
    if (!delta0.empty() && !delta1.empty()) {
        const long dp = mask_dim(c, pair.plus), db = mask_dim(c, pair.boundary_plus);
        if (db != dp - 1) rep.fail("∂Δ⁺ has dimension " + std::to_string(db) + ", expected " + std::to_string(dp - 1));
    }
    rep.merge(boundary_decomposition_check(in, pair));
    RetractionMap rm = retraction_cochain_map(in, pair);
    rep.merge(check_cochain_map(rm));
    rep.merge(check_quasi_isomorphism(rm));
    return rep;
}

}  // namespace corank::retraction
