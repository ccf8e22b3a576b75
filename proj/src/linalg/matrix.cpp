#include "corank/linalg/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "corank/error.hpp"

namespace corank::linalg {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw Error(ErrorKind::Schema, "empty rational literal");
    auto slash = text.find('/');
    auto valid_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw Error(ErrorKind::Schema, "malformed rational literal '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw Error(ErrorKind::Schema, "zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back({i, Rational(1)});
    return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error(ErrorKind::AmbientMismatch, "ragged dense matrix");
        for (std::size_t j = 0; j < c; ++j)
            if (rows[i][j] != 0) m.columns_[j].push_back({i, rows[i][j]});
    }
    return m;
}

Matrix Matrix::from_dense(std::size_t rows, std::size_t cols, const std::vector<long>& row_major) {
    if (row_major.size() != rows * cols) throw Error(ErrorKind::AmbientMismatch, "dense size mismatch");
    Matrix m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i)
            if (long v = row_major[i * cols + j]; v != 0) m.columns_[j].push_back({i, Rational(v)});
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw Error(ErrorKind::AmbientMismatch, "column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            if (columns[j][i] != 0) m.columns_[j].push_back({i, columns[j][i]});
    }
    return m;
}

std::size_t Matrix::nnz() const noexcept {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

Rational Matrix::at(std::size_t row, std::size_t col) const {
    const auto& c = columns_.at(col);
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::size_t r) { return e.row < r; });
    if (it != c.end() && it->row == row) return it->value;
    return Rational(0);
}

void Matrix::set(std::size_t row, std::size_t col, const Rational& value) {
    if (row >= rows_ || col >= columns_.size()) throw Error(ErrorKind::AmbientMismatch, "matrix index out of range");
    auto& c = columns_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::size_t r) { return e.row < r; });
    if (it != c.end() && it->row == row) {
        if (value == 0)
            c.erase(it);
        else
            it->value = value;
    } else if (value != 0) {
        c.insert(it, Entry{row, value});
    }
}

void Matrix::add_to(std::size_t row, std::size_t col, const Rational& value) {
    if (value == 0) return;
    set(row, col, at(row, col) + value);
}

std::vector<Rational> Matrix::dense_column(std::size_t col) const {
    std::vector<Rational> v(rows_);
    for (const auto& e : columns_.at(col)) v[e.row] = e.value;
    return v;
}

std::vector<std::vector<Rational>> Matrix::to_dense() const {
    std::vector<std::vector<Rational>> d(rows_, std::vector<Rational>(cols()));
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& e : columns_[j]) d[e.row][j] = e.value;
    return d;
}

Matrix Matrix::transpose() const {
    Matrix t(cols(), rows_);
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& e : columns_[j]) t.columns_[e.row].push_back({j, e.value});
    return t;
}

Matrix Matrix::column_range(std::size_t first, std::size_t count) const {
    if (first + count > cols()) throw Error(ErrorKind::AmbientMismatch, "column range out of bounds");
    Matrix m(rows_, 0);
    m.columns_.assign(columns_.begin() + static_cast<std::ptrdiff_t>(first),
                      columns_.begin() + static_cast<std::ptrdiff_t>(first + count));
    return m;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
    Matrix m(rows_, 0);
    m.columns_.reserve(cols.size());
    for (auto j : cols) m.columns_.push_back(columns_.at(j));
    return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
    std::vector<long> where(rows_, -1);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k] >= rows_) throw Error(ErrorKind::AmbientMismatch, "row selection out of range");
        where[rows[k]] = static_cast<long>(k);
    }
    Matrix m(rows.size(), cols());
    for (std::size_t j = 0; j < cols(); ++j) {
        for (const auto& e : columns_[j])
            if (where[e.row] >= 0) m.columns_[j].push_back({static_cast<std::size_t>(where[e.row]), e.value});
        std::sort(m.columns_[j].begin(), m.columns_[j].end(),
                  [](const Entry& a, const Entry& b) { return a.row < b.row; });
    }
    return m;
}

Matrix Matrix::hstack(const Matrix& other) const {
    if (other.rows_ != rows_) throw Error(ErrorKind::AmbientMismatch, "hstack row mismatch");
    Matrix m = *this;
    m.columns_.insert(m.columns_.end(), other.columns_.begin(), other.columns_.end());
    return m;
}

Matrix Matrix::vstack(const Matrix& other) const {
    if (other.cols() != cols()) throw Error(ErrorKind::AmbientMismatch, "vstack column mismatch");
    Matrix m(rows_ + other.rows_, cols());
    for (std::size_t j = 0; j < cols(); ++j) {
        m.columns_[j] = columns_[j];
        for (const auto& e : other.columns_[j]) m.columns_[j].push_back({e.row + rows_, e.value});
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols() != rhs.rows_) throw Error(ErrorKind::AmbientMismatch, "product shape mismatch");
    Matrix out(rows_, rhs.cols());
    std::vector<Rational> acc(rows_);
    std::vector<char> touched(rows_, 0);
    std::vector<std::size_t> rows_hit;
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
        rows_hit.clear();
        for (const auto& b : rhs.columns_[j]) {
            for (const auto& a : columns_[b.row]) {
                if (!touched[a.row]) {
                    touched[a.row] = 1;
                    rows_hit.push_back(a.row);
                    acc[a.row] = 0;
                }
                acc[a.row] += a.value * b.value;
            }
        }
        std::sort(rows_hit.begin(), rows_hit.end());
        for (auto r : rows_hit) {
            if (acc[r] != 0) out.columns_[j].push_back({r, acc[r]});
            touched[r] = 0;
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols() != rhs.cols()) throw Error(ErrorKind::AmbientMismatch, "sum shape mismatch");
    Matrix out(rows_, cols());
    for (std::size_t j = 0; j < cols(); ++j) {
        const auto& a = columns_[j];
        const auto& b = rhs.columns_[j];
        std::size_t p = 0, q = 0;
        while (p < a.size() || q < b.size()) {
            if (q == b.size() || (p < a.size() && a[p].row < b[q].row)) {
                out.columns_[j].push_back(a[p++]);
            } else if (p == a.size() || b[q].row < a[p].row) {
                out.columns_[j].push_back(b[q++]);
            } else {
                Rational v = a[p].value + b[q].value;
                if (v != 0) out.columns_[j].push_back({a[p].row, v});
                ++p;
                ++q;
            }
        }
    }
    return out;
}

Matrix Matrix::operator-() const { return scaled(Rational(-1)); }

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + (-rhs); }

Matrix Matrix::scaled(const Rational& factor) const {
    if (factor == 0) return Matrix(rows_, cols());
    Matrix out = *this;
    for (auto& c : out.columns_)
        for (auto& e : c) e.value *= factor;
    return out;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& x) const {
    if (x.size() != cols()) throw Error(ErrorKind::AmbientMismatch, "apply length mismatch");
    std::vector<Rational> y(rows_);
    for (std::size_t j = 0; j < cols(); ++j) {
        if (x[j] == 0) continue;
        for (const auto& e : columns_[j]) y[e.row] += e.value * x[j];
    }
    return y;
}

bool Matrix::operator==(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols() != rhs.cols()) return false;
    for (std::size_t j = 0; j < cols(); ++j) {
        const auto& a = columns_[j];
        const auto& b = rhs.columns_[j];
        if (a.size() != b.size()) return false;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k].row != b[k].row || a[k].value != b[k].value) return false;
    }
    return true;
}

std::string Matrix::debug_string() const {
    std::ostringstream os;
    auto d = to_dense();
    os << rows_ << "x" << cols() << " [";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols(); ++j) os << (j ? " " : "") << d[i][j].get_str();
    }
    os << "]";
    return os.str();
}

}  // namespace corank::linalg
