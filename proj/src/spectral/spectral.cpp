#include "corank/spectral/spectral.hpp"

#include "corank/error.hpp"
#include "corank/linalg/modrank.hpp"
#include "corank/linalg/ops.hpp"
#include "corank/util/parallel.hpp"

namespace corank::spectral {

using namespace linalg;

FilteredComplex::FilteredComplex(ChainComplex total, std::vector<std::vector<Subspace>> levels)
    : total_(std::move(total)), levels_(std::move(levels)) {
    if (total_.grading != sheaf::Grading::Homological)
        throw Error(ErrorKind::InvalidFiltration, "filtered complexes must be homologically graded");
    if (levels_.empty()) throw Error(ErrorKind::InvalidFiltration, "filtration has no levels");
    const std::size_t nd = total_.num_degrees();
    for (std::size_t n = 0; n < nd; ++n) {
        zero_.push_back(Subspace::zero(total_.dims[n]));
        full_.push_back(Subspace::full(total_.dims[n]));
    }
    for (std::size_t p = 0; p < levels_.size(); ++p) {
        const std::string lv = "level " + std::to_string(p);
        if (levels_[p].size() != nd) throw Error(ErrorKind::InvalidFiltration, lv + " has the wrong number of degrees");
        for (std::size_t n = 0; n < nd; ++n) {
            const Subspace& s = levels_[p][n];
            if (s.ambient_dim() != total_.dims[n]) throw Error(ErrorKind::InvalidFiltration, lv + ": ambient mismatch in degree " + std::to_string(n));
            if (p > 0 && !s.contains(levels_[p - 1][n]))
                throw Error(ErrorKind::InvalidFiltration, lv + " does not contain the previous level in degree " + std::to_string(n));
            if (n > 0 && !levels_[p][n - 1].contains(image_of(total_.differential[n], s)))
                throw Error(ErrorKind::InvalidFiltration, lv + " is not stable under the boundary in degree " + std::to_string(n));
        }
    }
    for (std::size_t n = 0; n < nd; ++n)
        if (levels_.back()[n].dim() != total_.dims[n])
            throw Error(ErrorKind::InvalidFiltration, "last level is not the whole complex in degree " + std::to_string(n));
}

FilteredComplex FilteredComplex::from_masks(const sheaf::Cosheaf& f, const std::vector<topo::SubcomplexMask>& masks) {
    ChainComplex total = sheaf::chain_complex(f);
    std::vector<std::vector<Subspace>> levels;
    for (std::size_t p = 0; p < masks.size(); ++p) {
        if (!masks[p].is_closed(f.base()))
            throw Error(ErrorKind::InvalidFiltration, "filtration mask " + std::to_string(p) + " is not closed under faces");
        std::vector<Subspace> per_degree;
        for (std::size_t n = 0; n < total.num_degrees(); ++n) {
            std::vector<std::size_t> axes;
            for (std::size_t pos = 0; pos < total.cells[n].size(); ++pos) {
                const std::size_t id = total.cells[n][pos];
                if (!masks[p].contains(id)) continue;
                for (std::size_t s = 0; s < f.dim_at(id); ++s) axes.push_back(total.offsets[n][pos] + s);
            }
            per_degree.push_back(Subspace::coordinate(total.dims[n], axes));
        }
        levels.push_back(std::move(per_degree));
    }
    return FilteredComplex(std::move(total), std::move(levels));
}

const Subspace& FilteredComplex::level(long p, std::size_t n) const {
    if (p < 0) return zero_.at(n);
    if (static_cast<std::size_t>(p) >= levels_.size()) return full_.at(n);
    return levels_[static_cast<std::size_t>(p)].at(n);
}

std::size_t Page::dim(long p, std::size_t n) const {
    auto it = terms.find({p, n});
    return it == terms.end() ? 0 : it->second.dim;
}

std::map<std::pair<long, std::size_t>, std::size_t> Page::dims() const {
    std::map<std::pair<long, std::size_t>, std::size_t> out;
    for (const auto& [key, t] : terms)
        if (t.dim) out[key] = t.dim;
    return out;
}

long Page::euler() const {
    long chi = 0;
    for (const auto& [key, t] : terms) chi += (key.second % 2 == 0 ? 1 : -1) * static_cast<long>(t.dim);
    return chi;
}

namespace {

// Z^r_{p,n} = F_p C_n ∩ ∂^{-1}(F_{p-r} C_{n-1}); r = 0 gives F_p C_n.
Subspace z_space(const FilteredComplex& fc, long r, long p, std::size_t n) {
    const Subspace& fp = fc.level(p, n);
    if (n == 0 || r == 0) return fp;
    return intersect(fp, preimage(fc.total().differential[n], fc.level(p - r, n - 1)));
}

Subspace b_space(const FilteredComplex& fc, long r, long p, std::size_t n) {
    Subspace lower = z_space(fc, r - 1, p - 1, n);
    if (n + 1 >= fc.num_degrees()) return lower;
    Subspace upper = z_space(fc, r - 1, p + r - 1, n + 1);
    return sum(lower, image_of(fc.total().differential[n + 1], upper));
}

}  // namespace

Page page(const FilteredComplex& fc, std::size_t r) {
    if (r < 1) throw Error(ErrorKind::InvalidFiltration, "pages start at r = 1");
    Page pg;
    pg.r = r;
    const long L = static_cast<long>(fc.length());
    const long rr = static_cast<long>(r);
    std::vector<std::pair<long, std::size_t>> keys;
    for (long p = 0; p <= L; ++p)
        for (std::size_t n = 0; n < fc.num_degrees(); ++n) keys.emplace_back(p, n);
    std::vector<Term> terms(keys.size());
    util::parallel_for(keys.size(), [&](std::size_t i) {
        auto [p, n] = keys[i];
        Term t;
        t.p = p;
        t.q = static_cast<long>(n) - p;
        t.z = z_space(fc, rr, p, n);
        t.b = b_space(fc, rr, p, n);
        t.dim = quotient_dim(t.z, t.b);
        terms[i] = std::move(t);
    });
    for (std::size_t i = 0; i < keys.size(); ++i) pg.terms.emplace(keys[i], std::move(terms[i]));
    for (const auto& [key, t] : pg.terms) {
        auto [p, n] = key;
        if (n == 0 || t.dim == 0) continue;
        auto target = pg.terms.find({p - rr, n - 1});
        if (target == pg.terms.end() || target->second.dim == 0) continue;
        pg.diffs[key] = induced_map(fc.total().differential[n], t.z, t.b, target->second.z, target->second.b);
    }
    return pg;
}

std::vector<Page> all_pages(const FilteredComplex& fc) {
    std::vector<Page> pages;
    for (std::size_t r = 1; r <= fc.length() + 1; ++r) pages.push_back(page(fc, r));
    return pages;
}

Page infinity_page(const FilteredComplex& fc) { return page(fc, fc.length() + 1); }

std::map<std::pair<long, std::size_t>, std::size_t> next_page_dims(const Page& pg) {
    std::map<std::pair<long, std::size_t>, std::size_t> out;
    const long r = static_cast<long>(pg.r);
    for (const auto& [key, t] : pg.terms) {
        if (t.dim == 0) continue;
        auto [p, n] = key;
        std::size_t out_rank = 0, in_rank = 0;
        if (auto it = pg.diffs.find(key); it != pg.diffs.end()) out_rank = rank(it->second);
        if (auto it = pg.diffs.find({p + r, n + 1}); it != pg.diffs.end()) in_rank = rank(it->second);
        const std::size_t d = t.dim - out_rank - in_rank;
        if (d) out[key] = d;
    }
    return out;
}

Report check_dd_zero(const Page& pg) {
    Report rep;
    const long r = static_cast<long>(pg.r);
    for (const auto& [key, m] : pg.diffs) {
        auto [p, n] = key;
        if (n == 0) continue;
        auto next = pg.diffs.find({p - r, n - 1});
        if (next == pg.diffs.end()) continue;
        if (!(next->second * m).is_zero())
            rep.fail("d^" + std::to_string(r) + " squared is nonzero at (" + std::to_string(p) + "," + std::to_string(n) + ")");
    }
    return rep;
}

std::map<std::pair<long, std::size_t>, std::size_t> graded_homology_dims(const FilteredComplex& fc) {
    std::map<std::pair<long, std::size_t>, std::size_t> out;
    const std::size_t nd = fc.num_degrees();
    for (long p = 0; p <= static_cast<long>(fc.length()); ++p) {
        // Differentials of the quotient complex F_p / F_{p-1}.
        std::vector<std::size_t> gdim(nd), drank(nd + 1, 0);
        for (std::size_t n = 0; n < nd; ++n) gdim[n] = quotient_dim(fc.level(p, n), fc.level(p - 1, n));
        for (std::size_t n = 1; n < nd; ++n)
            drank[n] = rank(induced_map(fc.total().differential[n], fc.level(p, n), fc.level(p - 1, n), fc.level(p, n - 1),
                                        fc.level(p - 1, n - 1)));
        for (std::size_t n = 0; n < nd; ++n) {
            const std::size_t h = gdim[n] - drank[n] - drank[n + 1];
            if (h) out[{p, n}] = h;
        }
    }
    return out;
}

Report euler_invariance(const FilteredComplex& fc) {
    Report rep;
    auto pages = all_pages(fc);
    const long chi1 = pages.front().euler();
    for (const auto& pg : pages)
        if (pg.euler() != chi1)
            rep.fail("χ(E^" + std::to_string(pg.r) + ") = " + std::to_string(pg.euler()) + " differs from χ(E^1) = " + std::to_string(chi1));
    return rep;
}

std::size_t degeneration_page(const std::vector<Page>& pages) {
    const auto inf = pages.back().dims();
    for (const auto& pg : pages)
        if (pg.dims() == inf) return pg.r;
    return pages.back().r;
}

std::size_t degeneration_page(const FilteredComplex& fc) { return degeneration_page(all_pages(fc)); }

}  // namespace corank::spectral
