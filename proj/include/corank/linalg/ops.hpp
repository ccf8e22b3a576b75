#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "corank/linalg/matrix.hpp"
#include "corank/linalg/subspace.hpp"

namespace corank::linalg {

/// Rank over Q by fraction-free sparse elimination on integer rows.
std::size_t rank(const Matrix& m);

/// Null space basis, canonical. dim = cols - rank.
Subspace kernel(const Matrix& m);
/// Column space.
Subspace image(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// {x : m x in s}.
Subspace preimage(const Matrix& m, const Subspace& s);
/// Image of a subspace under m.
Subspace image_of(const Matrix& m, const Subspace& s);

/// dim(big) - dim(small); throws NotContained unless small is a subspace of big.
std::size_t quotient_dim(const Subspace& big, const Subspace& small);

/// Deterministic representatives of a basis of big/small: the basis columns of big that are
/// independent modulo small, greedily in order. Throws NotContained.
Matrix quotient_basis(const Subspace& big, const Subspace& small);

/// Coordinates of each column of `vectors` in the column basis `basis` (independent columns).
/// Returns nullopt when some column is outside the span.
std::optional<Matrix> coordinates(const Matrix& basis, const Matrix& vectors);

/// The map src_big/src_small -> dst_big/dst_small induced by m, written in the bases returned by
/// quotient_basis. Throws NotWellDefined when m(src_big) is not in dst_big or m(src_small) is not
/// in dst_small.
Matrix induced_map(const Matrix& m, const Subspace& src_big, const Subspace& src_small,
                   const Subspace& dst_big, const Subspace& dst_small);

namespace detail {
using DenseRows = std::vector<std::vector<Rational>>;
/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(DenseRows& rows, std::size_t cols);
}  // namespace detail

}  // namespace corank::linalg
