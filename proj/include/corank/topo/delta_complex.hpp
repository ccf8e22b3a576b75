#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "corank/report.hpp"

namespace corank::topo {

/// One cell of a Delta-complex. `verts` are ids of 0-cells, in the cell's vertex order; `faces[i]`
/// is the cell obtained by deleting position i. A 0-cell lists itself as its only vertex.
struct Cell {
    std::size_t dim = 0;
    std::vector<std::size_t> verts;
    std::vector<std::size_t> faces;
    std::string label;

    bool operator==(const Cell&) const = default;
};

class DeltaComplex {
public:
    DeltaComplex() = default;
    /// Cells are taken as given (id = position); call validate() to check them.
    explicit DeltaComplex(std::vector<Cell> cells);

    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }
    const Cell& cell(std::size_t id) const { return cells_.at(id); }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    /// -1 for the empty complex.
    int top_dim() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
    /// Ids of the k-cells in increasing id order (empty if k is out of range).
    const std::vector<std::size_t>& cells_of_dim(std::size_t k) const;
    /// Position of a cell among the cells of its dimension.
    std::size_t index_in_dim(std::size_t id) const { return index_in_dim_.at(id); }

    std::size_t add_cell(Cell c);

    bool operator==(const DeltaComplex& rhs) const { return cells_ == rhs.cells_; }

private:
    void index_cell(std::size_t id);

    std::vector<Cell> cells_;
    std::vector<std::vector<std::size_t>> by_dim_;
    std::vector<std::size_t> index_in_dim_;
};

/// All structural invariants: face dimensions and vertex lists, simplicial identities, id ranges.
Report validate(const DeltaComplex& d);

/// A set of cells; "closed" when it contains every face of every member.
class SubcomplexMask {
public:
    SubcomplexMask() = default;
    explicit SubcomplexMask(std::size_t n) : member_(n, 0) {}
    static SubcomplexMask of(std::size_t n, const std::vector<std::size_t>& ids);
    static SubcomplexMask all(std::size_t n) {
        SubcomplexMask m(n);
        m.member_.assign(n, 1);
        return m;
    }
    /// Smallest closed mask containing `ids`.
    static SubcomplexMask closure(const DeltaComplex& d, const std::vector<std::size_t>& ids);

    std::size_t universe() const noexcept { return member_.size(); }
    bool contains(std::size_t id) const { return member_.at(id) != 0; }
    void insert(std::size_t id) { member_.at(id) = 1; }
    void erase(std::size_t id) { member_.at(id) = 0; }
    std::size_t count() const noexcept;
    std::vector<std::size_t> ids() const;
    bool is_closed(const DeltaComplex& d) const;
    /// First member with a face outside the mask, for error messages.
    std::vector<std::size_t> unclosed_members(const DeltaComplex& d) const;
    bool subset_of(const SubcomplexMask& other) const;

    SubcomplexMask operator|(const SubcomplexMask& rhs) const;
    SubcomplexMask operator&(const SubcomplexMask& rhs) const;
    bool operator==(const SubcomplexMask& rhs) const = default;

private:
    std::vector<char> member_;
};

/// Alternating count of cells, restricted to `mask` when given.
long euler_char(const DeltaComplex& d, const SubcomplexMask* mask = nullptr);

}  // namespace corank::topo
