#include "corank/topo/simplicial.hpp"

#include <algorithm>
#include <set>

#include "corank/error.hpp"
#include "corank/linalg/ops.hpp"

namespace corank::topo {

using linalg::Matrix;

namespace {

bool simplex_less(const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t num_vertices, const std::vector<Simplex>& generators,
                                     std::vector<Point> coordinates)
    : num_vertices_(num_vertices), coordinates_(std::move(coordinates)) {
    if (!coordinates_.empty() && coordinates_.size() != num_vertices)
        throw Error(ErrorKind::InvalidComplex, "coordinates given for " + std::to_string(coordinates_.size()) +
                                                   " vertices, expected " + std::to_string(num_vertices));
    std::set<Simplex> all;
    for (std::size_t v = 0; v < num_vertices; ++v) all.insert({v});
    for (Simplex g : generators) {
        std::sort(g.begin(), g.end());
        if (g.empty()) continue;
        if (std::adjacent_find(g.begin(), g.end()) != g.end())
            throw Error(ErrorKind::InvalidComplex, "simplex with repeated vertex");
        if (g.back() >= num_vertices) throw Error(ErrorKind::InvalidComplex, "simplex vertex out of range");
        const std::size_t k = g.size();
        if (k > 24) throw Error(ErrorKind::InvalidComplex, "simplex dimension too large");
        for (unsigned long bits = 1; bits < (1ul << k); ++bits) {
            Simplex f;
            for (std::size_t i = 0; i < k; ++i)
                if (bits & (1ul << i)) f.push_back(g[i]);
            all.insert(std::move(f));
        }
    }
    simplices_.assign(all.begin(), all.end());
    std::stable_sort(simplices_.begin(), simplices_.end(), simplex_less);
    for (std::size_t i = 0; i < simplices_.size(); ++i) index_.emplace(simplices_[i], i);
}

SimplicialComplex SimplicialComplex::standard_simplex(std::size_t d) {
    Simplex top(d + 1);
    std::vector<Point> coords(d + 1, Point(d + 1, Rational(0)));
    for (std::size_t i = 0; i <= d; ++i) {
        top[i] = i;
        coords[i][i] = 1;
    }
    return SimplicialComplex(d + 1, {top}, std::move(coords));
}

int SimplicialComplex::top_dim() const noexcept {
    return simplices_.empty() ? -1 : static_cast<int>(simplices_.back().size()) - 1;
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t SimplicialComplex::id_of(const Simplex& s) const {
    auto id = find(s);
    if (!id) throw Error(ErrorKind::InvalidComplex, "simplex not in complex");
    return *id;
}

std::vector<std::size_t> SimplicialComplex::facets(std::size_t id) const {
    const Simplex& s = simplices_.at(id);
    std::vector<std::size_t> out;
    if (s.size() < 2) return out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back(index_.at(f));
    }
    return out;
}

std::vector<std::size_t> SimplicialComplex::maximal() const {
    std::vector<char> covered(simplices_.size(), 0);
    for (std::size_t id = 0; id < simplices_.size(); ++id)
        for (auto f : facets(id)) covered[f] = 1;
    std::vector<std::size_t> out;
    for (std::size_t id = 0; id < simplices_.size(); ++id)
        if (!covered[id]) out.push_back(id);
    return out;
}

Report validate(const SimplicialComplex& s) {
    Report rep;
    if (!s.has_coordinates()) return rep;
    const std::size_t n = s.ambient_dim();
    for (std::size_t v = 0; v < s.num_vertices(); ++v)
        if (s.coordinates()[v].size() != n)
            rep.fail("vertex " + std::to_string(v) + ": coordinate length " + std::to_string(s.coordinates()[v].size()) +
                     ", expected " + std::to_string(n));
    if (!rep.ok) return rep;
    for (auto id : s.maximal()) {
        const Simplex& sm = s.simplex(id);
        Matrix diffs(n, sm.size() - 1);
        for (std::size_t k = 1; k < sm.size(); ++k)
            for (std::size_t i = 0; i < n; ++i)
                diffs.set(i, k - 1, s.coordinates()[sm[k]][i] - s.coordinates()[sm[0]][i]);
        if (linalg::rank(diffs) != sm.size() - 1)
            rep.fail("simplex " + std::to_string(id) + ": vertices are not affinely independent");
    }
    return rep;
}

Subdivision barycentric_subdivide(const SimplicialComplex& s) {
    // flags_ending[σ] = all flags whose last member is σ.
    std::vector<std::vector<std::vector<std::size_t>>> flags_ending(s.size());
    for (std::size_t id = 0; id < s.size(); ++id) {
        auto& mine = flags_ending[id];
        mine.push_back({id});
        // Every proper nonempty face is reached through some facet; collect each face once.
        std::set<std::size_t> faces;
        std::vector<std::size_t> stack = s.facets(id);
        while (!stack.empty()) {
            auto f = stack.back();
            stack.pop_back();
            if (!faces.insert(f).second) continue;
            for (auto g : s.facets(f)) stack.push_back(g);
        }
        for (auto f : faces)
            for (const auto& chain : flags_ending[f]) {
                auto ext = chain;
                ext.push_back(id);
                mine.push_back(std::move(ext));
            }
    }
    std::vector<Simplex> cells;
    for (const auto& per : flags_ending)
        for (const auto& chain : per) cells.push_back(chain);  // chains are increasing ids already

    std::vector<Point> coords;
    if (s.has_coordinates()) {
        coords.reserve(s.size());
        for (const auto& sm : s.simplices()) {
            Point b(s.ambient_dim(), Rational(0));
            for (auto v : sm)
                for (std::size_t i = 0; i < b.size(); ++i) b[i] += s.coordinates()[v][i];
            for (auto& x : b) x /= static_cast<long>(sm.size());
            coords.push_back(std::move(b));
        }
    }
    Subdivision out;
    out.complex = SimplicialComplex(s.size(), cells, std::move(coords));
    out.flag_index.reserve(out.complex.size());
    for (const auto& c : out.complex.simplices()) out.flag_index.push_back(Flag{c});
    return out;
}

int permutation_sign(std::vector<std::size_t> order) {
    int sign = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        while (order[i] != i) {
            std::swap(order[i], order[order[i]]);
            sign = -sign;
        }
    return sign;
}

std::vector<Matrix> subdivision_chain_map(const SimplicialComplex& s, const Subdivision& sd) {
    const int top = s.top_dim();
    std::vector<Matrix> maps;
    if (top < 0) return maps;
    std::vector<std::vector<std::size_t>> s_by_dim(static_cast<std::size_t>(top) + 1), sd_by_dim(static_cast<std::size_t>(top) + 1);
    std::vector<std::size_t> s_pos(s.size());
    for (std::size_t id = 0; id < s.size(); ++id) {
        auto k = s.simplex(id).size() - 1;
        s_pos[id] = s_by_dim[k].size();
        s_by_dim[k].push_back(id);
    }
    for (std::size_t c = 0; c < sd.complex.size(); ++c) {
        auto k = sd.complex.simplex(c).size() - 1;
        if (k < sd_by_dim.size()) sd_by_dim[k].push_back(c);
    }
    for (std::size_t k = 0; k <= static_cast<std::size_t>(top); ++k) {
        Matrix m(s_by_dim[k].size(), sd_by_dim[k].size());
        for (std::size_t col = 0; col < sd_by_dim[k].size(); ++col) {
            const auto& chain = sd.flag_index[sd_by_dim[k][col]].chain;
            const Simplex& last = s.simplex(chain.back());
            if (last.size() != k + 1) continue;  // lies inside a lower-dimensional simplex
            // Order in which the flag introduces the vertices of its top simplex.
            std::vector<std::size_t> order;
            for (auto member : chain)
                for (auto v : s.simplex(member))
                    if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
            std::vector<std::size_t> positions;
            for (auto v : order) positions.push_back(static_cast<std::size_t>(std::lower_bound(last.begin(), last.end(), v) - last.begin()));
            m.set(s_pos[chain.back()], col, Rational(permutation_sign(positions)));
        }
        maps.push_back(std::move(m));
    }
    return maps;
}

DeltaComplex as_delta(const SimplicialComplex& s) {
    std::vector<Cell> cells;
    cells.reserve(s.size());
    for (std::size_t id = 0; id < s.size(); ++id) {
        Cell c;
        c.dim = s.simplex(id).size() - 1;
        c.verts = s.simplex(id);
        c.faces = s.facets(id);
        cells.push_back(std::move(c));
    }
    return DeltaComplex(std::move(cells));
}

}  // namespace corank::topo
