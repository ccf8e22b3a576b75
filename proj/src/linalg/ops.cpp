#include "corank/linalg/ops.hpp"

#include <algorithm>
#include <utility>

#include "corank/error.hpp"

namespace corank::linalg {

namespace detail {

std::vector<std::size_t> rref(DenseRows& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
        std::size_t p = lead;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[lead]);
        auto& prow = rows[lead];
        if (prow[c] != 1) {
            Rational inv = 1 / prow[c];
            for (std::size_t j = c; j < cols; ++j)
                if (prow[j] != 0) prow[j] *= inv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == lead || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (prow[j] != 0) rows[i][j] -= f * prow[j];
        }
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

}  // namespace detail

namespace {

using detail::DenseRows;

// Incremental echelon basis used for membership tests and greedy extension.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t n) : n_(n) {}

    // Residual of v after reduction; zero iff v is in the current span.
    std::vector<Rational> reduce(std::vector<Rational> v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const auto& r = rows_[k];
            std::size_t p = pivots_[k];
            if (v[p] == 0) continue;
            Rational f = v[p];
            for (std::size_t j = p; j < n_; ++j)
                if (r[j] != 0) v[j] -= f * r[j];
        }
        return v;
    }

    // Adds v if independent; returns whether it was added.
    bool add(const std::vector<Rational>& v) {
        auto r = reduce(v);
        std::size_t p = 0;
        while (p < n_ && r[p] == 0) ++p;
        if (p == n_) return false;
        Rational inv = 1 / r[p];
        for (std::size_t j = p; j < n_; ++j)
            if (r[j] != 0) r[j] *= inv;
        // Keep existing rows reduced at the new pivot so reduce() stays a single pass.
        for (auto& other : rows_) {
            if (other[p] == 0) continue;
            Rational f = other[p];
            for (std::size_t j = p; j < n_; ++j)
                if (r[j] != 0) other[j] -= f * r[j];
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, p);
        rows_.insert(rows_.begin() + pos, std::move(r));
        return true;
    }

private:
    std::size_t n_;
    DenseRows rows_;
    std::vector<std::size_t> pivots_;
};

bool is_zero_vector(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

void make_primitive(IntRow& row) {
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a*row - b*pivot, entries at the pivot column cancel.
IntRow combine(const IntRow& row, const mpz_class& a, const IntRow& pivot, const mpz_class& b) {
    IntRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t p = 0, q = 0;
    while (p < row.size() || q < pivot.size()) {
        if (q == pivot.size() || (p < row.size() && row[p].first < pivot[q].first)) {
            out.emplace_back(row[p].first, a * row[p].second);
            ++p;
        } else if (p == row.size() || pivot[q].first < row[p].first) {
            out.emplace_back(pivot[q].first, -b * pivot[q].second);
            ++q;
        } else {
            mpz_class v = a * row[p].second - b * pivot[q].second;
            if (v != 0) out.emplace_back(row[p].first, std::move(v));
            ++p;
            ++q;
        }
    }
    return out;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    // Build integer rows: each row scaled by the lcm of its denominators.
    std::vector<std::vector<std::pair<std::size_t, Rational>>> qrows(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& e : m.column(j)) qrows[e.row].emplace_back(j, e.value);
    std::vector<IntRow> rows;
    rows.reserve(m.rows());
    for (auto& qr : qrows) {
        if (qr.empty()) continue;
        mpz_class l = 1;
        for (const auto& [c, v] : qr) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        IntRow row;
        row.reserve(qr.size());
        for (const auto& [c, v] : qr) row.emplace_back(c, mpz_class(v.get_num() * (l / v.get_den())));
        make_primitive(row);
        rows.push_back(std::move(row));
    }

    std::size_t r = 0;
    while (!rows.empty()) {
        // Shortest row as pivot row, smallest magnitude entry as pivot.
        std::size_t best = 0;
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i].size() < rows[best].size()) best = i;
        IntRow pivot = std::move(rows[best]);
        rows[best] = std::move(rows.back());
        rows.pop_back();
        std::size_t pk = 0;
        for (std::size_t k = 1; k < pivot.size(); ++k)
            if (mpz_cmpabs(pivot[k].second.get_mpz_t(), pivot[pk].second.get_mpz_t()) < 0) pk = k;
        const std::size_t pc = pivot[pk].first;
        const mpz_class pv = pivot[pk].second;
        ++r;

        std::vector<IntRow> next;
        next.reserve(rows.size());
        for (auto& row : rows) {
            auto it = std::lower_bound(row.begin(), row.end(), pc,
                                       [](const auto& e, std::size_t c) { return e.first < c; });
            if (it == row.end() || it->first != pc) {
                next.push_back(std::move(row));
                continue;
            }
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), pv.get_mpz_t(), it->second.get_mpz_t());
            mpz_class a = pv / g;
            mpz_class b = it->second / g;
            IntRow combined = combine(row, a, pivot, b);
            if (combined.empty()) continue;
            make_primitive(combined);
            next.push_back(std::move(combined));
        }
        rows = std::move(next);
    }
    return r;
}

Subspace kernel(const Matrix& m) {
    DenseRows rows = m.to_dense();
    auto pivots = detail::rref(rows, m.cols());
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto p : pivots) is_pivot[p] = 1;
    std::vector<std::vector<Rational>> vecs;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(m.cols());
        x[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -rows[i][f];
        vecs.push_back(std::move(x));
    }
    return Subspace::span(Matrix::from_columns(m.cols(), vecs));
}

Subspace image(const Matrix& m) { return Subspace::span(m); }

Subspace image_of(const Matrix& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "image_of: map domain differs from subspace ambient");
    return Subspace::span(m * s.basis());
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "sum of subspaces in different ambients");
    return Subspace::span(a.basis().hstack(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw Error(ErrorKind::AmbientMismatch, "intersection of subspaces in different ambients");
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim());
    Matrix stacked = a.basis().hstack(-b.basis());
    Subspace k = kernel(stacked);
    // x = (u, w) with A u = B w; the intersection is spanned by A u.
    Matrix u = k.basis().select_rows([&] {
        std::vector<std::size_t> idx(a.dim());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        return idx;
    }());
    return Subspace::span(a.basis() * u);
}

Subspace preimage(const Matrix& m, const Subspace& s) {
    if (m.rows() != s.ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "preimage: codomain differs from subspace ambient");
    if (s.dim() == s.ambient_dim()) return Subspace::full(m.cols());
    // Rows of `annihilator` span the orthogonal complement of s.
    Subspace perp = kernel(s.basis().transpose());
    Matrix annihilator = perp.basis().transpose();
    return kernel(annihilator * m);
}

std::size_t quotient_dim(const Subspace& big, const Subspace& small) {
    if (big.ambient_dim() != small.ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "quotient of subspaces in different ambients");
    if (!big.contains(small)) throw Error(ErrorKind::NotContained, "quotient_dim: small is not contained in big");
    return big.dim() - small.dim();
}

Matrix quotient_basis(const Subspace& big, const Subspace& small) {
    if (big.ambient_dim() != small.ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "quotient of subspaces in different ambients");
    if (!big.contains(small)) throw Error(ErrorKind::NotContained, "quotient_basis: small is not contained in big");
    const std::size_t n = big.ambient_dim();
    EchelonBasis eb(n);
    for (std::size_t j = 0; j < small.dim(); ++j) eb.add(small.basis().dense_column(j));
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < big.dim() && chosen.size() < big.dim() - small.dim(); ++j)
        if (eb.add(big.basis().dense_column(j))) chosen.push_back(j);
    return big.basis().select_columns(chosen);
}

std::optional<Matrix> coordinates(const Matrix& basis, const Matrix& vectors) {
    if (basis.rows() != vectors.rows()) throw Error(ErrorKind::AmbientMismatch, "coordinates: ambient mismatch");
    const std::size_t k = basis.cols();
    const std::size_t v = vectors.cols();
    DenseRows rows = basis.hstack(vectors).to_dense();
    auto pivots = detail::rref(rows, k + v);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] >= k) return std::nullopt;
    if (pivots.size() != k) throw Error(ErrorKind::NotWellDefined, "coordinates: basis columns are dependent");
    Matrix out(k, v);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < v; ++j)
            if (rows[i][k + j] != 0) out.set(i, j, rows[i][k + j]);
    return out;
}

Matrix induced_map(const Matrix& m, const Subspace& src_big, const Subspace& src_small,
                   const Subspace& dst_big, const Subspace& dst_small) {
    if (m.cols() != src_big.ambient_dim() || m.rows() != dst_big.ambient_dim())
        throw Error(ErrorKind::AmbientMismatch, "induced_map: map shape does not match subspaces");
    if (!dst_big.contains(image_of(m, src_big)))
        throw Error(ErrorKind::NotWellDefined, "induced_map: image of the source does not lie in the target");
    if (!dst_small.contains(image_of(m, src_small)))
        throw Error(ErrorKind::NotWellDefined, "induced_map: source relations do not map into target relations");
    Matrix src_reps = quotient_basis(src_big, src_small);
    Matrix dst_reps = quotient_basis(dst_big, dst_small);
    if (src_reps.cols() == 0 || dst_reps.cols() == 0) return Matrix(dst_reps.cols(), src_reps.cols());
    Matrix images = m * src_reps;
    auto coords = coordinates(dst_reps.hstack(dst_small.basis()), images);
    if (!coords) throw Error(ErrorKind::NotWellDefined, "induced_map: image outside target");
    std::vector<std::size_t> keep(dst_reps.cols());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    return coords->select_rows(keep);
}

// ---------------------------------------------------------------------------------------------
// Subspace

Subspace Subspace::zero(std::size_t ambient_dim) {
    Subspace s;
    s.ambient_dim_ = ambient_dim;
    s.basis_ = Matrix(ambient_dim, 0);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s;
    s.ambient_dim_ = ambient_dim;
    s.basis_ = Matrix::identity(ambient_dim);
    s.pivots_.resize(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_[i] = i;
    return s;
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& axes) {
    std::vector<std::size_t> sorted = axes;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Subspace s;
    s.ambient_dim_ = ambient_dim;
    s.basis_ = Matrix(ambient_dim, sorted.size());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] >= ambient_dim) throw Error(ErrorKind::AmbientMismatch, "coordinate axis out of range");
        s.basis_.set(sorted[k], k, Rational(1));
    }
    s.pivots_ = std::move(sorted);
    return s;
}

Subspace Subspace::span(const Matrix& generators) {
    const std::size_t n = generators.rows();
    DenseRows rows;
    rows.reserve(generators.cols());
    for (std::size_t j = 0; j < generators.cols(); ++j)
        if (!generators.column(j).empty()) rows.push_back(generators.dense_column(j));
    auto pivots = detail::rref(rows, n);
    rows.resize(pivots.size());
    Subspace s;
    s.ambient_dim_ = n;
    s.basis_ = Matrix::from_columns(n, rows);
    s.pivots_ = std::move(pivots);
    return s;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    if (v.size() != ambient_dim_) throw Error(ErrorKind::AmbientMismatch, "membership test with wrong length");
    std::vector<Rational> r = v;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        if (r[pivots_[k]] == 0) continue;
        Rational f = r[pivots_[k]];
        for (const auto& e : basis_.column(k)) r[e.row] -= f * e.value;
    }
    return is_zero_vector(r);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_) throw Error(ErrorKind::AmbientMismatch, "containment across ambients");
    if (other.dim() > dim()) return false;
    for (std::size_t j = 0; j < other.dim(); ++j)
        if (!contains(other.basis_.dense_column(j))) return false;
    return true;
}

}  // namespace corank::linalg
