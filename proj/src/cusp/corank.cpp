#include "corank/cusp/corank.hpp"

#include <algorithm>
#include <set>

#include "corank/error.hpp"
#include "corank/linalg/modrank.hpp"
#include "corank/linalg/ops.hpp"
#include "corank/util/parallel.hpp"

namespace corank::cusp {

namespace {

std::string cell_ref(const Cusp& c, std::size_t cell) { return c.label + ":" + std::to_string(cell); }

std::map<std::string, std::size_t> label_index(const CorankInput& in) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t k = 0; k < in.cusps.size(); ++k)
        if (!idx.emplace(in.cusps[k].label, k).second) throw Error(ErrorKind::Schema, "duplicate cusp label '" + in.cusps[k].label + "'");
    return idx;
}

const LevelData& level_of(const Cusp& c, std::size_t p) {
    auto it = c.levels.find(p);
    if (it == c.levels.end())
        throw Error(ErrorKind::MissingCosheaf, "cusp '" + c.label + "' has no cosheaf data at level " + std::to_string(p));
    return it->second;
}

sheaf::Cosheaf local_cosheaf(const Cusp& c, std::size_t p) {
    const LevelData& lv = level_of(c, p);
    sheaf::Cosheaf f(std::make_shared<const DeltaComplex>(c.complex), lv.dims);
    for (const auto& [key, m] : lv.ext) f.set_ext(key.first, key.second, m);
    return f;
}

long sign_of(long k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

Report validate_input(const CorankInput& in) {
    Report rep;
    if (in.n_table.size() != in.r + 1) rep.fail("n_table has " + std::to_string(in.n_table.size()) + " entries, expected r+1 = " + std::to_string(in.r + 1));
    if (!in.n_table.empty() && in.n_table[0] != 0) rep.fail("n_table must start with n(0) = 0");
    for (std::size_t i = 1; i < in.n_table.size(); ++i)
        if (in.n_table[i] <= in.n_table[i - 1]) rep.fail("n_table is not strictly increasing at i = " + std::to_string(i));
    if (!in.n_table.empty() && in.n_table.back() > in.n) rep.fail("n(r) exceeds n");
    std::set<std::string> labels;
    for (const auto& c : in.cusps) {
        const std::string who = "cusp '" + c.label + "'";
        if (!labels.insert(c.label).second) rep.fail(who + ": duplicate label");
        if (c.corank < 1 || c.corank > in.r) rep.fail(who + ": corank " + std::to_string(c.corank) + " outside 1.." + std::to_string(in.r));
        Report cr = topo::validate(c.complex);
        rep.merge(cr, who + " complex: ");
        if (!cr.ok) continue;
        for (auto b : c.boundary)
            if (b >= c.complex.size()) rep.fail(who + ": boundary cell " + std::to_string(b) + " does not exist");
        if (!rep.ok) continue;
        auto mask = SubcomplexMask::of(c.complex.size(), c.boundary);
        for (auto bad : mask.unclosed_members(c.complex)) rep.fail(who + ": boundary is not closed under faces at cell " + std::to_string(bad));
        for (const auto& [p, lv] : c.levels) {
            const std::string lvl = who + " level " + std::to_string(p) + ": ";
            if (p >= in.n && in.n > 0) rep.fail(lvl + "level must be below n");
            if (lv.dims.size() != c.complex.size()) {
                rep.fail(lvl + "dims has " + std::to_string(lv.dims.size()) + " entries, complex has " + std::to_string(c.complex.size()) + " cells");
                continue;
            }
            for (const auto& [key, m] : lv.ext) {
                if (key.first >= c.complex.size() || key.second >= c.complex.cell(key.first).faces.size()) {
                    rep.fail(lvl + "ext for nonexistent face (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
                    continue;
                }
                const std::size_t face = c.complex.cell(key.first).faces[key.second];
                if (m.rows() != lv.dims[face] || m.cols() != lv.dims[key.first])
                    rep.fail(lvl + "ext(" + std::to_string(key.first) + "," + std::to_string(key.second) + ") has the wrong shape");
            }
            for (const auto& [cell, m] : lv.augmentation) {
                if (cell >= c.complex.size() || c.complex.cell(cell).dim != 0) {
                    rep.fail(lvl + "augmentation on cell " + std::to_string(cell) + ", which is not a 0-cell");
                    continue;
                }
                auto amb = in.ambient_dims.find(p);
                if (amb == in.ambient_dims.end()) {
                    rep.fail(lvl + "augmentation given but ambient_dims has no entry for this level");
                    continue;
                }
                if (m.rows() != amb->second || m.cols() != lv.dims[cell])
                    rep.fail(lvl + "augmentation of cell " + std::to_string(cell) + " has the wrong shape");
            }
        }
    }
    return rep;
}

DualComplex build_dual_complex(const CorankInput& in) {
    Report rep = validate_input(in);
    if (!rep.ok) throw Error(ErrorKind::InvalidComplex, rep.violations.front());
    const auto idx = label_index(in);
    const std::size_t nc = in.cusps.size();

    // (cusp, cell) -> (target cusp, target cell)
    std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> glue;
    for (const auto& g : in.gluing) {
        auto s = idx.find(g.cusp);
        auto t = idx.find(g.target_cusp);
        if (s == idx.end() || t == idx.end()) throw Error(ErrorKind::GluingInconsistent, "gluing names an unknown cusp");
        const Cusp& src = in.cusps[s->second];
        const Cusp& tgt = in.cusps[t->second];
        const std::string who = "gluing " + cell_ref(src, g.cell) + " -> " + cell_ref(tgt, g.target_cell);
        if (std::find(src.boundary.begin(), src.boundary.end(), g.cell) == src.boundary.end())
            throw Error(ErrorKind::GluingInconsistent, who + ": source is not a boundary cell");
        if (g.target_cell >= tgt.complex.size()) throw Error(ErrorKind::GluingInconsistent, who + ": target cell does not exist");
        if (tgt.corank >= src.corank) throw Error(ErrorKind::GluingInconsistent, who + ": target corank is not strictly lower");
        if (src.complex.cell(g.cell).dim != tgt.complex.cell(g.target_cell).dim)
            throw Error(ErrorKind::GluingInconsistent, who + ": dimensions differ");
        if (!glue.emplace(std::make_pair(s->second, g.cell), std::make_pair(t->second, g.target_cell)).second)
            throw Error(ErrorKind::GluingInconsistent, who + ": source glued twice");
    }

    DualComplex dual;
    dual.global_of.resize(nc);
    std::vector<std::vector<long>> gid(nc);
    for (std::size_t k = 0; k < nc; ++k) {
        const Cusp& c = in.cusps[k];
        gid[k].assign(c.complex.size(), -1);
        std::set<std::size_t> bset(c.boundary.begin(), c.boundary.end());
        for (std::size_t cell = 0; cell < c.complex.size(); ++cell) {
            if (bset.count(cell)) {
                if (!glue.count({k, cell}))
                    throw Error(ErrorKind::GluingInconsistent, "boundary cell " + cell_ref(c, cell) + " is not glued anywhere");
                continue;
            }
            gid[k][cell] = static_cast<long>(dual.owner.size());
            dual.owner.push_back(k);
            dual.local_cell.push_back(cell);
        }
    }
    // Coranks strictly decrease along gluings, so following them terminates.
    auto resolve = [&](std::size_t k, std::size_t cell) {
        while (gid[k][cell] < 0) {
            auto next = glue.at({k, cell});
            k = next.first;
            cell = next.second;
        }
        return static_cast<std::size_t>(gid[k][cell]);
    };
    for (std::size_t k = 0; k < nc; ++k) {
        const Cusp& c = in.cusps[k];
        auto& g = dual.global_of[k];
        for (std::size_t cell = 0; cell < c.complex.size(); ++cell) g.push_back(resolve(k, cell));
        std::set<std::size_t> seen(g.begin(), g.end());
        if (seen.size() != g.size()) throw Error(ErrorKind::GluingInconsistent, "cusp '" + c.label + "': gluing identifies two of its cells");
    }
    std::vector<topo::Cell> cells(dual.owner.size());
    for (std::size_t id = 0; id < cells.size(); ++id) {
        const std::size_t k = dual.owner[id];
        const Cusp& c = in.cusps[k];
        const topo::Cell& lc = c.complex.cell(dual.local_cell[id]);
        topo::Cell& out = cells[id];
        out.dim = lc.dim;
        for (auto v : lc.verts) out.verts.push_back(dual.global_of[k][v]);
        for (auto f : lc.faces) out.faces.push_back(dual.global_of[k][f]);
        out.label = cell_ref(c, dual.local_cell[id]);
    }
    // Boundary cells must agree with the cells they are identified with, face by face.
    for (std::size_t k = 0; k < nc; ++k) {
        const Cusp& c = in.cusps[k];
        for (auto b : c.boundary) {
            const topo::Cell& lc = c.complex.cell(b);
            const topo::Cell& gc = cells[dual.global_of[k][b]];
            for (std::size_t i = 0; i < lc.faces.size(); ++i)
                if (dual.global_of[k][lc.faces[i]] != gc.faces[i])
                    throw Error(ErrorKind::GluingInconsistent,
                                "boundary cell " + cell_ref(c, b) + ": face " + std::to_string(i) + " is not glued to the matching face of its target");
        }
    }
    auto complex = std::make_shared<DeltaComplex>(std::move(cells));
    Report vr = topo::validate(*complex);
    if (!vr.ok) throw Error(ErrorKind::GluingInconsistent, "glued complex is invalid: " + vr.violations.front());
    dual.complex = std::move(complex);
    return dual;
}

std::vector<SubcomplexMask> corank_filtration(const CorankInput& in, const DualComplex& dual) {
    std::vector<SubcomplexMask> masks;
    const DeltaComplex& d = *dual.complex;
    for (std::size_t i = 0; i <= in.r; ++i) {
        SubcomplexMask m(d.size());
        for (std::size_t id = 0; id < d.size(); ++id)
            if (in.cusps[dual.owner[id]].corank <= i) m.insert(id);
        auto bad = m.unclosed_members(d);
        if (!bad.empty())
            throw Error(ErrorKind::NotFaceClosed, "corank level " + std::to_string(i) + " is not closed under faces at cell " +
                                                      std::to_string(bad.front()) + " (" + d.cell(bad.front()).label + ")");
        masks.push_back(std::move(m));
    }
    return masks;
}

sheaf::Cosheaf total_cosheaf(const CorankInput& in, const DualComplex& dual, std::size_t p) {
    const DeltaComplex& d = *dual.complex;
    for (const auto& c : in.cusps) level_of(c, p);
    // Stalks must match across every identification.
    for (std::size_t k = 0; k < in.cusps.size(); ++k) {
        const Cusp& c = in.cusps[k];
        const LevelData& lv = level_of(c, p);
        for (std::size_t cell = 0; cell < c.complex.size(); ++cell) {
            const std::size_t g = dual.global_of[k][cell];
            const std::size_t owner_dim = level_of(in.cusps[dual.owner[g]], p).dims[dual.local_cell[g]];
            if (lv.dims[cell] != owner_dim)
                throw Error(ErrorKind::GluingInconsistent, "level " + std::to_string(p) + ": stalk of " + cell_ref(c, cell) +
                                                               " differs from the stalk of the cell it is glued to");
        }
    }
    std::vector<std::size_t> dims(d.size());
    for (std::size_t g = 0; g < d.size(); ++g) dims[g] = level_of(in.cusps[dual.owner[g]], p).dims[dual.local_cell[g]];
    sheaf::Cosheaf f(dual.complex, dims);
    for (std::size_t g = 0; g < d.size(); ++g) {
        const LevelData& lv = level_of(in.cusps[dual.owner[g]], p);
        for (std::size_t i = 0; i < d.cell(g).faces.size(); ++i) {
            auto it = lv.ext.find({dual.local_cell[g], i});
            if (it != lv.ext.end()) f.set_ext(g, i, it->second);
        }
    }
    Report rep = sheaf::validate_cosheaf(f);
    if (!rep.ok) throw Error(ErrorKind::InvalidCosheaf, "level " + std::to_string(p) + ": " + rep.violations.front());
    return f;
}

std::size_t d_of_p(const CorankInput& in, std::size_t p) {
    std::size_t d = 0;
    for (std::size_t i = 1; i < in.n_table.size(); ++i)
        if (p <= in.n && in.n_table[i] <= in.n - p) d = i;
    return d;
}

CorkKey to_cork(long p, std::size_t n) { return {p, static_cast<long>(n) - p + 1}; }

CorkDims cork_dims(const spectral::Page& pg) {
    CorkDims out;
    for (const auto& [key, dim] : pg.dims()) out[to_cork(key.first, key.second)] = dim;
    return out;
}

std::map<long, std::size_t> total_dims(const CorkDims& d) {
    std::map<long, std::size_t> out;
    for (const auto& [key, dim] : d) out[key.first + key.second] += dim;
    return out;
}

CorankSS corank_ss(const CorankInput& in, const DualComplex& dual, std::size_t p) {
    sheaf::Cosheaf f = total_cosheaf(in, dual, p);
    auto masks = corank_filtration(in, dual);
    auto fc = spectral::FilteredComplex::from_masks(f, masks);
    CorankSS ss;
    ss.p = p;
    ss.pages = spectral::all_pages(fc);
    ss.degeneration_page = spectral::degeneration_page(ss.pages);
    ss.total_homology = sheaf::homology_dims(fc.total());
    Report& chk = ss.spectral_checks;
    for (std::size_t k = 0; k < ss.pages.size(); ++k) {
        chk.merge(spectral::check_dd_zero(ss.pages[k]));
        if (k + 1 < ss.pages.size() && spectral::next_page_dims(ss.pages[k]) != ss.pages[k + 1].dims())
            chk.fail("E^" + std::to_string(k + 2) + " differs from the homology of (E^" + std::to_string(k + 1) + ", d)");
        if (ss.pages[k].euler() != ss.pages.front().euler()) chk.fail("χ(E^" + std::to_string(k + 1) + ") differs from χ(E^1)");
    }
    if (spectral::graded_homology_dims(fc) != ss.pages.front().dims()) chk.fail("E^1 differs from the homology of the graded pieces");
    return ss;
}

E1Table e1_by_cusp(const CorankInput& in, std::size_t p) {
    E1Table table;
    std::vector<std::vector<std::size_t>> per(in.cusps.size());
    util::parallel_for(in.cusps.size(), [&](std::size_t k) {
        const Cusp& c = in.cusps[k];
        sheaf::Cosheaf f = local_cosheaf(c, p);
        per[k] = sheaf::homology_dims(sheaf::relative_chain_complex(f, SubcomplexMask::of(c.complex.size(), c.boundary)));
    });
    for (std::size_t k = 0; k < in.cusps.size(); ++k) {
        const Cusp& c = in.cusps[k];
        for (std::size_t m = 0; m < per[k].size(); ++m)
            if (per[k][m]) table[to_cork(static_cast<long>(c.corank), m)].push_back({c.label, per[k][m]});
    }
    return table;
}

Report cross_check(const E1Table& table, const spectral::Page& e1) {
    Report rep;
    CorkDims summed;
    for (const auto& [key, parts] : table)
        for (const auto& part : parts) summed[key] += part.dim;
    const CorkDims page = cork_dims(e1);
    std::set<CorkKey> keys;
    for (const auto& [k, v] : summed) keys.insert(k);
    for (const auto& [k, v] : page) keys.insert(k);
    for (const auto& k : keys) {
        const std::size_t a = summed.count(k) ? summed.at(k) : 0;
        const std::size_t b = page.count(k) ? page.at(k) : 0;
        if (a != b)
            rep.fail("E^1_{" + std::to_string(k.first) + "," + std::to_string(k.second) + "}: filtered complex gives " + std::to_string(b) +
                     ", cusp-local sum gives " + std::to_string(a));
    }
    return rep;
}

Report convergence_check(const CorankSS& ss) {
    Report rep;
    auto inf = total_dims(cork_dims(ss.pages.back()));
    long top = static_cast<long>(ss.total_homology.size());
    for (const auto& [m, dim] : inf) top = std::max(top, m);
    for (long m = 2; m <= top + 1; ++m) {
        const std::size_t lhs = inf.count(m) ? inf.at(m) : 0;
        const std::size_t rhs = m - 1 < static_cast<long>(ss.total_homology.size()) ? ss.total_homology[static_cast<std::size_t>(m - 1)] : 0;
        if (lhs != rhs)
            rep.fail("E^∞_" + std::to_string(m) + " has dimension " + std::to_string(lhs) + " but H_" + std::to_string(m - 1) + " has " + std::to_string(rhs));
    }
    return rep;
}

Report shape_check(const CorankInput& in, std::size_t p, const spectral::Page& e1) {
    Report rep;
    const long d = static_cast<long>(d_of_p(in, p));
    for (const auto& [key, dim] : cork_dims(e1)) {
        const auto [i, j] = key;
        const std::string term = "E^1_{" + std::to_string(i) + "," + std::to_string(j) + "} = " + std::to_string(dim);
        if (i < 1 || i > d) {
            rep.fail(term + " lies outside 1 <= i <= d(p) = " + std::to_string(d));
            continue;
        }
        const long hi = static_cast<long>(in.n_table[static_cast<std::size_t>(i)]) - i;
        if (j < 0 || j > hi) rep.fail(term + " lies outside 0 <= j <= n(i) - i = " + std::to_string(hi));
    }
    return rep;
}

Report degeneration_report(const CorankInput& in, std::size_t p, const std::vector<spectral::Page>& pages) {
    Report rep;
    const std::size_t d = d_of_p(in, p);
    if (d == 0 || pages.empty()) return rep;
    const CorkDims e1 = cork_dims(pages.front());
    const auto inf = total_dims(cork_dims(pages.back()));
    auto get = [](const auto& m, const auto& k) -> std::size_t { return m.count(k) ? m.at(k) : 0; };
    const long dl = static_cast<long>(d);
    const long lo = static_cast<long>(in.n_table[d - 1]);
    const long hi = static_cast<long>(in.n_table[d]);
    for (long m = lo + 2; m <= hi; ++m) {
        const std::size_t a = get(inf, m), b = get(e1, CorkKey{dl, m - dl});
        if (a != b)
            rep.fail("E^∞_" + std::to_string(m) + " = " + std::to_string(a) + " but E^1_{" + std::to_string(d) + "," + std::to_string(m - dl) +
                     "} = " + std::to_string(b));
    }
    {
        // E^∞ at m = n(d-1)+1 is the kernel of d^1 out of E^1_{d, m-d}.
        const long m = lo + 1;
        const auto& first = pages.front();
        const long cw_n = m - 1;
        std::size_t ker = 0;
        if (cw_n >= 0) {
            const std::size_t n = static_cast<std::size_t>(cw_n);
            ker = first.dim(dl, n);
            if (auto it = first.diffs.find({dl, n}); it != first.diffs.end()) ker -= linalg::rank(it->second);
        }
        if (get(inf, m) != ker)
            rep.fail("E^∞_" + std::to_string(m) + " = " + std::to_string(get(inf, m)) + " but ker d^1 on E^1_{" + std::to_string(d) + "," +
                     std::to_string(m - dl) + "} has dimension " + std::to_string(ker));
    }
    if (in.n_table.size() > 1 && in.n_table[1] == 1 && pages.size() >= 2) {
        const std::size_t a = get(inf, 2), b = get(cork_dims(pages[1]), CorkKey{2, 0});
        if (a != b) rep.fail("E^∞_2 = " + std::to_string(a) + " but E^2_{2,0} = " + std::to_string(b));
    }
    return rep;
}

std::size_t eis_dim(const CorankInput& in, const DualComplex& dual, std::size_t p) {
    auto amb = in.ambient_dims.find(p);
    bool any = false;
    for (const auto& c : in.cusps)
        if (auto it = c.levels.find(p); it != c.levels.end() && !it->second.augmentation.empty()) any = true;
    if (amb == in.ambient_dims.end() || !any)
        throw Error(ErrorKind::MissingAugmentation, "no augmentation data at level " + std::to_string(p));
    const DeltaComplex& d = *dual.complex;
    Matrix stacked(amb->second, 0);
    for (auto g : d.cells_of_dim(0)) {
        const LevelData& lv = level_of(in.cusps[dual.owner[g]], p);
        const std::size_t local = dual.local_cell[g];
        auto it = lv.augmentation.find(local);
        stacked = stacked.hstack(it != lv.augmentation.end() ? it->second : Matrix(amb->second, lv.dims[local]));
    }
    return linalg::rank(stacked);
}

namespace {

EulerLevel euler_level(const CorankInput& in, const CorankSS& ss) {
    EulerLevel lv;
    lv.p = ss.p;
    auto chi = [](const spectral::Page& pg) {
        long x = 0;
        for (const auto& [key, dim] : cork_dims(pg)) x += sign_of(key.first + key.second) * static_cast<long>(dim);
        return x;
    };
    lv.chi_e1 = chi(ss.pages.front());
    lv.chi_inf = chi(ss.pages.back());
    if (lv.chi_e1 != lv.chi_inf)
        lv.report.fail("level " + std::to_string(ss.p) + ": χ(E^1) = " + std::to_string(lv.chi_e1) + " but χ(E^∞) = " + std::to_string(lv.chi_inf));
    Rational total = 0;
    for (const auto& c : in.cusps) {
        if (!c.chi_gamma) return lv;
        const LevelData& data = level_of(c, ss.p);
        std::set<std::size_t> stalks;
        std::set<std::size_t> bset(c.boundary.begin(), c.boundary.end());
        for (std::size_t cell = 0; cell < c.complex.size(); ++cell)
            if (!bset.count(cell)) stalks.insert(data.dims[cell]);
        if (stalks.size() > 1) return lv;  // no single h^{p,0} to use
        const std::size_t h = stalks.empty() ? 0 : *stalks.begin();
        total += Rational(sign_of(static_cast<long>(in.n_table[c.corank]))) * *c.chi_gamma * static_cast<long>(h);
    }
    lv.formula = total;
    if (total != lv.chi_e1)
        lv.report.fail("level " + std::to_string(ss.p) + ": χ(E^1) = " + std::to_string(lv.chi_e1) + " but the cusp formula gives " + total.get_str());
    return lv;
}

}  // namespace

EulerReport euler_identity(const CorankInput& in, const std::map<std::size_t, CorankSS>& results) {
    EulerReport out;
    for (const auto& [p, ss] : results) {
        out.levels.push_back(euler_level(in, ss));
        out.report.merge(out.levels.back().report);
    }
    bool complete = in.n > 0;
    for (std::size_t p = 0; p < in.n; ++p) complete = complete && results.count(p);
    for (const auto& c : in.cusps) complete = complete && c.chi_gamma && c.chi_hol;
    if (complete) {
        Rational lhs = 0, rhs = 0;
        for (const auto& lv : out.levels) lhs += Rational(sign_of(static_cast<long>(lv.p)) * lv.chi_e1);
        for (const auto& c : in.cusps) rhs += Rational(sign_of(static_cast<long>(in.n_table[c.corank]))) * *c.chi_hol * *c.chi_gamma;
        out.aggregate = std::make_pair(lhs, rhs);
        if (lhs != rhs) out.report.fail("alternating sum over p of χ(E^1) is " + lhs.get_str() + " but the cusp formula gives " + rhs.get_str());
    }
    return out;
}

CorankInput hilbert_example(std::size_t num_cusps, std::size_t period) {
    if (period < 2) throw Error(ErrorKind::BadPeriod, "period must be at least 2, got " + std::to_string(period));
    CorankInput in;
    in.n = 2;
    in.r = 1;
    in.n_table = {0, 2};
    for (std::size_t k = 0; k < num_cusps; ++k) {
        Cusp c;
        c.label = "F" + std::to_string(k + 1);
        c.corank = 1;
        std::vector<topo::Cell> cells;
        for (std::size_t v = 0; v < period; ++v) cells.push_back(topo::Cell{0, {v}, {}, ""});
        for (std::size_t e = 0; e < period; ++e) {
            const std::size_t a = e + 1 < period ? e : 0;
            const std::size_t b = e + 1 < period ? e + 1 : period - 1;
            cells.push_back(topo::Cell{1, {a, b}, {b, a}, ""});
        }
        c.complex = DeltaComplex(std::move(cells));
        LevelData lv;
        lv.dims.assign(c.complex.size(), 1);
        for (std::size_t id = period; id < c.complex.size(); ++id)
            for (std::size_t i = 0; i < 2; ++i) lv.ext[{id, i}] = Matrix::identity(1);
        c.levels[0] = std::move(lv);
        c.chi_gamma = Rational(0);
        in.cusps.push_back(std::move(c));
    }
    return in;
}

CorankResult run_corank(const CorankInput& in, std::size_t p) {
    CorankResult res;
    res.p = p;
    res.d = d_of_p(in, p);
    res.dual = build_dual_complex(in);
    res.filtration = corank_filtration(in, res.dual);
    res.ss = corank_ss(in, res.dual, p);
    res.e1_table = e1_by_cusp(in, p);
    res.cross = cross_check(res.e1_table, res.ss.pages.front());
    res.convergence = convergence_check(res.ss);
    res.shape = shape_check(in, p, res.ss.pages.front());
    res.degeneration = degeneration_report(in, p, res.ss.pages);
    res.euler = euler_level(in, res.ss);
    try {
        res.eis = eis_dim(in, res.dual, p);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::MissingAugmentation) throw;
    }
    return res;
}

}  // namespace corank::cusp
