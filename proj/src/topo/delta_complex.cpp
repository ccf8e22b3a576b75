#include "corank/topo/delta_complex.hpp"

#include <algorithm>

#include "corank/error.hpp"

namespace corank::topo {

namespace {
const std::vector<std::size_t> kNoCells;

std::string ids_str(const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}
}  // namespace

DeltaComplex::DeltaComplex(std::vector<Cell> cells) : cells_(std::move(cells)) {
    for (std::size_t id = 0; id < cells_.size(); ++id) index_cell(id);
}

void DeltaComplex::index_cell(std::size_t id) {
    const std::size_t k = cells_[id].dim;
    if (by_dim_.size() <= k) by_dim_.resize(k + 1);
    index_in_dim_.push_back(by_dim_[k].size());
    by_dim_[k].push_back(id);
}

const std::vector<std::size_t>& DeltaComplex::cells_of_dim(std::size_t k) const {
    return k < by_dim_.size() ? by_dim_[k] : kNoCells;
}

std::size_t DeltaComplex::add_cell(Cell c) {
    cells_.push_back(std::move(c));
    index_cell(cells_.size() - 1);
    return cells_.size() - 1;
}

Report validate(const DeltaComplex& d) {
    Report rep;
    const std::size_t n = d.size();
    auto is_vertex = [&](std::size_t v) { return v < n && d.cell(v).dim == 0; };
    for (std::size_t id = 0; id < n; ++id) {
        const Cell& c = d.cell(id);
        const std::string who = "cell " + std::to_string(id);
        if (c.verts.size() != c.dim + 1) {
            rep.fail(who + ": has " + std::to_string(c.verts.size()) + " vertices, expected " + std::to_string(c.dim + 1));
            continue;
        }
        if (c.dim == 0) {
            if (c.verts[0] != id) rep.fail(who + ": a 0-cell must list itself as its vertex");
            if (!c.faces.empty()) rep.fail(who + ": a 0-cell has no faces");
            continue;
        }
        bool verts_ok = true;
        for (auto v : c.verts)
            if (!is_vertex(v)) {
                rep.fail(who + ": vertex " + std::to_string(v) + " is not a 0-cell");
                verts_ok = false;
            }
        if (c.faces.size() != c.dim + 1) {
            rep.fail(who + ": has " + std::to_string(c.faces.size()) + " faces, expected " + std::to_string(c.dim + 1));
            continue;
        }
        bool faces_ok = verts_ok;
        for (std::size_t i = 0; i < c.faces.size(); ++i) {
            const std::size_t f = c.faces[i];
            if (f >= n) {
                rep.fail(who + ": face " + std::to_string(i) + " points to missing cell " + std::to_string(f));
                faces_ok = false;
                continue;
            }
            const Cell& fc = d.cell(f);
            if (fc.dim + 1 != c.dim) {
                rep.fail(who + ": face " + std::to_string(i) + " is cell " + std::to_string(f) + " of dimension " +
                         std::to_string(fc.dim) + ", expected " + std::to_string(c.dim - 1));
                faces_ok = false;
                continue;
            }
            std::vector<std::size_t> expect = c.verts;
            expect.erase(expect.begin() + static_cast<std::ptrdiff_t>(i));
            if (fc.verts != expect) {
                rep.fail(who + ": face " + std::to_string(i) + " (cell " + std::to_string(f) + ") has vertices " +
                         ids_str(fc.verts) + ", expected " + ids_str(expect));
                faces_ok = false;
            }
        }
        if (!faces_ok || c.dim < 2) continue;
        for (std::size_t j = 1; j < c.faces.size(); ++j)
            for (std::size_t i = 0; i < j; ++i) {
                const Cell& fj = d.cell(c.faces[j]);
                const Cell& fi = d.cell(c.faces[i]);
                if (fj.faces.size() <= i || fi.faces.size() < j) continue;
                if (fj.faces[i] != fi.faces[j - 1])
                    rep.fail(who + ": simplicial identity fails for faces (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }
    return rep;
}

SubcomplexMask SubcomplexMask::of(std::size_t n, const std::vector<std::size_t>& ids) {
    SubcomplexMask m(n);
    for (auto id : ids) {
        if (id >= n) throw Error(ErrorKind::InvalidComplex, "mask member " + std::to_string(id) + " out of range");
        m.member_[id] = 1;
    }
    return m;
}

SubcomplexMask SubcomplexMask::closure(const DeltaComplex& d, const std::vector<std::size_t>& ids) {
    SubcomplexMask m(d.size());
    std::vector<std::size_t> stack = ids;
    while (!stack.empty()) {
        auto id = stack.back();
        stack.pop_back();
        if (id >= d.size()) throw Error(ErrorKind::InvalidComplex, "mask member " + std::to_string(id) + " out of range");
        if (m.member_[id]) continue;
        m.member_[id] = 1;
        for (auto f : d.cell(id).faces) stack.push_back(f);
    }
    return m;
}

std::size_t SubcomplexMask::count() const noexcept {
    return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), 1));
}

std::vector<std::size_t> SubcomplexMask::ids() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < member_.size(); ++i)
        if (member_[i]) out.push_back(i);
    return out;
}

std::vector<std::size_t> SubcomplexMask::unclosed_members(const DeltaComplex& d) const {
    std::vector<std::size_t> bad;
    for (std::size_t id = 0; id < member_.size(); ++id) {
        if (!member_[id]) continue;
        for (auto f : d.cell(id).faces)
            if (!member_.at(f)) {
                bad.push_back(id);
                break;
            }
    }
    return bad;
}

bool SubcomplexMask::is_closed(const DeltaComplex& d) const {
    return member_.size() == d.size() && unclosed_members(d).empty();
}

bool SubcomplexMask::subset_of(const SubcomplexMask& other) const {
    if (other.member_.size() != member_.size()) return false;
    for (std::size_t i = 0; i < member_.size(); ++i)
        if (member_[i] && !other.member_[i]) return false;
    return true;
}

SubcomplexMask SubcomplexMask::operator|(const SubcomplexMask& rhs) const {
    if (rhs.member_.size() != member_.size()) throw Error(ErrorKind::AmbientMismatch, "mask union over different complexes");
    SubcomplexMask m = *this;
    for (std::size_t i = 0; i < member_.size(); ++i) m.member_[i] |= rhs.member_[i];
    return m;
}

SubcomplexMask SubcomplexMask::operator&(const SubcomplexMask& rhs) const {
    if (rhs.member_.size() != member_.size()) throw Error(ErrorKind::AmbientMismatch, "mask intersection over different complexes");
    SubcomplexMask m = *this;
    for (std::size_t i = 0; i < member_.size(); ++i) m.member_[i] &= rhs.member_[i];
    return m;
}

long euler_char(const DeltaComplex& d, const SubcomplexMask* mask) {
    long chi = 0;
    for (std::size_t id = 0; id < d.size(); ++id) {
        if (mask && !mask->contains(id)) continue;
        chi += d.cell(id).dim % 2 == 0 ? 1 : -1;
    }
    return chi;
}

}  // namespace corank::topo
