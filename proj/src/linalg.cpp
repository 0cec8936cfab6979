#include "hexad/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "hexad/error.hpp"

namespace hexad {

Vec vec_zero(unsigned len, unsigned order) {
    return Vec(len, CycloScalar::zero(order));
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("vector length mismatch");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("vector length mismatch");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

Vec vec_scale(const CycloScalar& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x = c * x;
    return r;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const CycloScalar& c) { return c.is_zero(); });
}

bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(unsigned rows, unsigned cols, unsigned order)
    : rows_(rows), cols_(cols), order_(order),
      e_(static_cast<size_t>(rows) * cols, CycloScalar::zero(order)) {}

Matrix Matrix::identity(unsigned n, unsigned order) {
    Matrix m(n, n, order);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = CycloScalar::one(order);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, unsigned cols, unsigned order) {
    Matrix m(static_cast<unsigned>(rows.size()), cols, order);
    for (unsigned i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error("row length mismatch");
        for (unsigned j = 0; j < cols; ++j) m.at(i, j) = rows[i][j].embedded(order);
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, unsigned rows, unsigned order) {
    Matrix m(rows, static_cast<unsigned>(cols.size()), order);
    for (unsigned j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw Error("column length mismatch");
        for (unsigned i = 0; i < rows; ++i) m.at(i, j) = cols[j][i].embedded(order);
    }
    return m;
}

Matrix Matrix::diagonal(const Vec& entries) {
    if (entries.empty()) throw Error("empty diagonal");
    unsigned order = entries[0].field_order();
    for (const auto& e : entries) order = lcm_u(order, e.field_order());
    Matrix m(static_cast<unsigned>(entries.size()), static_cast<unsigned>(entries.size()), order);
    for (unsigned i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i].embedded(order);
    return m;
}

Vec Matrix::row(unsigned i) const {
    Vec r;
    r.reserve(cols_);
    for (unsigned j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
}

Vec Matrix::col(unsigned j) const {
    Vec c;
    c.reserve(rows_);
    for (unsigned i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    unsigned order = lcm_u(order_, o.order_);
    Matrix r(rows_, o.cols_, order);
    for (unsigned i = 0; i < rows_; ++i) {
        for (unsigned k = 0; k < cols_; ++k) {
            const CycloScalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (unsigned j = 0; j < o.cols_; ++j) {
                const CycloScalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * b;
            }
        }
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
    unsigned order = lcm_u(order_, o.order_);
    Matrix r(rows_, cols_, order);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference shape mismatch");
    unsigned order = lcm_u(order_, o.order_);
    Matrix r(rows_, cols_, order);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Matrix Matrix::scaled(const CycloScalar& c) const {
    unsigned order = lcm_u(order_, c.field_order());
    Matrix r(rows_, cols_, order);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = c * e_[i];
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw Error("matrix apply length mismatch");
    Vec r = vec_zero(rows_, order_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] = r[i] + at(i, j) * v[j];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, order_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::pow(unsigned k) const {
    if (rows_ != cols_) throw Error("matrix power requires square");
    Matrix acc = identity(rows_, order_);
    Matrix base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Matrix Matrix::embedded(unsigned new_order) const {
    Matrix r(rows_, cols_, new_order);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].embedded(new_order);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const CycloScalar& c) { return c.is_zero(); });
}

bool Matrix::is_diagonal() const {
    if (rows_ != cols_) return false;
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

Vec Matrix::vectorized() const { return e_; }

Matrix Matrix::from_vectorized(const Vec& v, unsigned rows, unsigned cols) {
    if (v.size() != static_cast<size_t>(rows) * cols) throw Error("vectorized length mismatch");
    unsigned order = v.empty() ? 1 : v[0].field_order();
    for (const auto& c : v) order = lcm_u(order, c.field_order());
    Matrix m(rows, cols, order);
    for (unsigned i = 0; i < rows; ++i)
        for (unsigned j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j].embedded(order);
    return m;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (unsigned i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        os << "[";
        for (unsigned j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]" << (i + 1 == rows_ ? "]" : ",\n");
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RREF

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    unsigned rank = 0;
    std::vector<unsigned> pivots;
    for (unsigned col = 0; col < a.cols() && rank < a.rows(); ++col) {
        unsigned sel = rank;
        while (sel < a.rows() && a.at(sel, col).is_zero()) ++sel;
        if (sel == a.rows()) continue;
        if (sel != rank)
            for (unsigned j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(rank, j));
        CycloScalar inv = a.at(rank, col).inverse();
        for (unsigned j = col; j < a.cols(); ++j) a.at(rank, j) = a.at(rank, j) * inv;
        for (unsigned i = 0; i < a.rows(); ++i) {
            if (i == rank || a.at(i, col).is_zero()) continue;
            CycloScalar f = a.at(i, col);
            for (unsigned j = col; j < a.cols(); ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(rank, j);
        }
        pivots.push_back(col);
        ++rank;
    }
    return {std::move(a), std::move(pivots), rank};
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(const std::vector<Vec>& vectors, unsigned ambient, unsigned order) {
    Subspace s(ambient, order);
    if (vectors.empty()) return s;
    Matrix m = Matrix::from_rows(vectors, ambient, order);
    RrefResult r = rref(m);
    for (unsigned i = 0; i < r.rank; ++i) s.basis_.push_back(r.mat.row(i));
    s.pivots_ = r.pivots;
    return s;
}

Subspace Subspace::full(unsigned ambient, unsigned order) {
    std::vector<Vec> rows;
    for (unsigned i = 0; i < ambient; ++i) {
        Vec v = vec_zero(ambient, order);
        v[i] = CycloScalar::one(order);
        rows.push_back(std::move(v));
    }
    return span(rows, ambient, order);
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw Error("ambient dimension mismatch");
    Vec r = v;
    for (size_t k = 0; k < basis_.size(); ++k) {
        const CycloScalar& c = r[pivots_[k]];
        if (c.is_zero()) continue;
        CycloScalar f = c;
        for (unsigned j = 0; j < ambient_; ++j) r[j] = r[j] - f * basis_[k][j];
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (const Vec& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_) throw Error("ambient dimension mismatch");
    Vec r = v;
    Vec coords = vec_zero(dim(), order_);
    for (size_t k = 0; k < basis_.size(); ++k) {
        CycloScalar c = r[pivots_[k]];
        if (c.is_zero()) continue;
        coords[k] = c;
        for (unsigned j = 0; j < ambient_; ++j) r[j] = r[j] - c * basis_[k][j];
    }
    if (!vec_is_zero(r)) return std::nullopt;
    return coords;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw Error("ambient dimension mismatch in sum");
    std::vector<Vec> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span(all, ambient_, lcm_u(order_, o.order_));
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw Error("ambient dimension mismatch in intersect");
    unsigned order = lcm_u(order_, o.order_);
    // Zassenhaus: echelonize rows [b | b] for b in basis and [c | 0] for c in
    // the other basis; rows with zero left half carry the intersection on the
    // right half.
    unsigned n = ambient_;
    std::vector<Vec> rows;
    for (const Vec& b : basis_) {
        Vec r = vec_zero(2 * n, order);
        for (unsigned j = 0; j < n; ++j) r[j] = r[n + j] = b[j].embedded(order);
        rows.push_back(std::move(r));
    }
    for (const Vec& c : o.basis_) {
        Vec r = vec_zero(2 * n, order);
        for (unsigned j = 0; j < n; ++j) r[j] = c[j].embedded(order);
        rows.push_back(std::move(r));
    }
    RrefResult rr = rref(Matrix::from_rows(rows, 2 * n, order));
    std::vector<Vec> inter;
    for (unsigned i = 0; i < rr.rank; ++i) {
        if (rr.pivots[i] >= n) {
            Vec right;
            right.reserve(n);
            for (unsigned j = 0; j < n; ++j) right.push_back(rr.mat.at(i, n + j));
            inter.push_back(std::move(right));
        }
    }
    return span(inter, n, order);
}

bool Subspace::is_direct_with(const Subspace& o) const {
    return dim() + o.dim() == sum(o).dim();
}

bool Subspace::operator==(const Subspace& o) const {
    if (ambient_ != o.ambient_ || basis_.size() != o.basis_.size()) return false;
    for (size_t i = 0; i < basis_.size(); ++i)
        if (!vec_eq(basis_[i], o.basis_[i])) return false;
    return true;
}

std::vector<unsigned> Subspace::non_pivot_coordinates() const {
    std::vector<unsigned> out;
    size_t k = 0;
    for (unsigned j = 0; j < ambient_; ++j) {
        if (k < pivots_.size() && pivots_[k] == j)
            ++k;
        else
            out.push_back(j);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Solvers

Subspace nullspace(const Matrix& m) {
    RrefResult r = rref(m);
    unsigned n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (unsigned p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (unsigned j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        Vec v = vec_zero(n, m.field_order());
        v[j] = CycloScalar::one(m.field_order());
        for (unsigned i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.mat.at(i, j);
        basis.push_back(std::move(v));
    }
    return Subspace::span(basis, n, m.field_order());
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw Error("solve: rhs length mismatch");
    unsigned order = m.field_order();
    for (const auto& c : b) order = lcm_u(order, c.field_order());
    Matrix aug(m.rows(), m.cols() + 1, order);
    for (unsigned i = 0; i < m.rows(); ++i) {
        for (unsigned j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j).embedded(order);
        aug.at(i, m.cols()) = b[i].embedded(order);
    }
    RrefResult r = rref(aug);
    Vec x = vec_zero(m.cols(), order);
    for (unsigned i = 0; i < r.rank; ++i) {
        if (r.pivots[i] == m.cols()) return std::nullopt;  // row (0 ... 0 | 1)
        x[r.pivots[i]] = r.mat.at(i, m.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse requires square matrix");
    unsigned n = m.rows();
    Matrix aug(n, 2 * n, m.field_order());
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = CycloScalar::one(m.field_order());
    }
    RrefResult r = rref(aug);
    for (unsigned i = 0; i < n; ++i)
        if (i >= r.pivots.size() || r.pivots[i] != i) return std::nullopt;
    Matrix inv(n, n, m.field_order());
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
    return inv;
}

Poly min_poly(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error("min_poly requires square matrix");
    unsigned n = m.rows();
    unsigned order = m.field_order();
    if (n == 0) return Poly(order, {CycloScalar::one(order)});  // empty map: 1

    // Incremental RREF over the vectorized powers; the first power that is
    // linearly dependent on the previous ones yields the minimal polynomial.
    std::vector<Vec> echelon;           // rows in echelon form
    std::vector<unsigned> pivots;       // their pivot positions
    std::vector<Vec> combos;            // coordinates of each echelon row in the powers
    std::vector<Matrix> powers;
    Matrix p = Matrix::identity(n, order);
    for (unsigned k = 0;; ++k) {
        powers.push_back(p);
        Vec v = p.vectorized();
        // reduce against echelon, tracking the combination
        Vec combo = vec_zero(k + 1, order);
        combo[k] = CycloScalar::one(order);
        for (auto& c : combos) c.resize(k + 1, CycloScalar::zero(order));
        for (size_t r = 0; r < echelon.size(); ++r) {
            const CycloScalar& c = v[pivots[r]];
            if (c.is_zero()) continue;
            CycloScalar f = c;
            for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - f * echelon[r][j];
            for (size_t j = 0; j <= k; ++j) combo[j] = combo[j] - f * combos[r][j];
        }
        unsigned piv = 0;
        while (piv < v.size() && v[piv].is_zero()) ++piv;
        if (piv == v.size()) {
            // dependence: sum combo[j] * M^j = 0 with combo[k] = 1
            std::vector<CycloScalar> coeffs(combo.begin(), combo.end());
            return Poly(order, std::move(coeffs));
        }
        CycloScalar inv = v[piv].inverse();
        for (auto& x : v) x = x * inv;
        for (auto& x : combo) x = x * inv;
        echelon.push_back(std::move(v));
        pivots.push_back(piv);
        combos.push_back(std::move(combo));
        p = p * m;
        if (k > n) throw InternalError("minimal polynomial search exceeded dimension bound");
    }
}

}  // namespace hexad
