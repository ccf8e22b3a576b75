#pragma once

#include <cstddef>
#include <vector>

#include "corank/linalg/matrix.hpp"

namespace corank::linalg {

/// A linear subspace of Q^n held in canonical form: the basis columns, read as rows, are the
/// nonzero rows of the reduced row echelon form of any spanning set. Two subspaces are equal
/// exactly when their bases are equal.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    /// Column span of `generators` (ambient dimension = generators.rows()).
    static Subspace span(const Matrix& generators);
    /// Coordinate subspace spanned by the listed standard basis vectors.
    static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& axes);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t dim() const noexcept { return basis_.cols(); }
    const Matrix& basis() const noexcept { return basis_; }
    /// Pivot coordinate of each basis column, increasing.
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const std::vector<Rational>& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& rhs) const { return ambient_dim_ == rhs.ambient_dim_ && basis_ == rhs.basis_; }
    bool operator!=(const Subspace& rhs) const { return !(*this == rhs); }

private:
    std::size_t ambient_dim_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace corank::linalg
