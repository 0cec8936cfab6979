#pragma once

#include <optional>
#include <vector>

#include "hexad/cyclo.hpp"

namespace hexad {

using Vec = std::vector<CycloScalar>;

Vec vec_zero(unsigned len, unsigned order);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const CycloScalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);
bool vec_eq(const Vec& a, const Vec& b);

/// Dense rectangular matrix over one cyclotomic field, row-major.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0), order_(1) {}
    Matrix(unsigned rows, unsigned cols, unsigned order);

    static Matrix identity(unsigned n, unsigned order);
    static Matrix from_rows(const std::vector<Vec>& rows, unsigned cols, unsigned order);
    /// Columns are the given vectors.
    static Matrix from_columns(const std::vector<Vec>& cols, unsigned rows, unsigned order);
    static Matrix diagonal(const Vec& entries);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    unsigned field_order() const { return order_; }

    const CycloScalar& at(unsigned i, unsigned j) const { return e_[i * cols_ + j]; }
    CycloScalar& at(unsigned i, unsigned j) { return e_[i * cols_ + j]; }

    Vec row(unsigned i) const;
    Vec col(unsigned j) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const CycloScalar& c) const;
    Vec apply(const Vec& v) const;
    Matrix transpose() const;
    Matrix pow(unsigned k) const;
    Matrix embedded(unsigned new_order) const;

    bool operator==(const Matrix& o) const;
    bool is_zero() const;
    bool is_diagonal() const;

    /// Row-major flattening, used to treat maps as vectors of length rows*cols.
    Vec vectorized() const;
    static Matrix from_vectorized(const Vec& v, unsigned rows, unsigned cols);

    std::string str() const;

  private:
    unsigned rows_, cols_, order_;
    std::vector<CycloScalar> e_;
};

struct RrefResult {
    Matrix mat;                // reduced row echelon form
    std::vector<unsigned> pivots;  // pivot column per nonzero row
    unsigned rank;
};

/// Reduced row echelon form with pivots normalized to 1 and zeros above and
/// below each pivot; pivoting on the first nonzero entry (exact arithmetic).
RrefResult rref(const Matrix& m);

/// Subspace of a coordinate space, stored as an RREF basis (canonical:
/// equality of subspaces is row-wise equality of bases).
class Subspace {
  public:
    Subspace() : ambient_(0), order_(1) {}
    Subspace(unsigned ambient, unsigned order) : ambient_(ambient), order_(order) {}

    static Subspace span(const std::vector<Vec>& vectors, unsigned ambient, unsigned order);
    static Subspace full(unsigned ambient, unsigned order);

    unsigned ambient_dim() const { return ambient_; }
    unsigned field_order() const { return order_; }
    unsigned dim() const { return static_cast<unsigned>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<unsigned>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in the RREF basis, if v lies in the subspace.
    std::optional<Vec> coordinates(const Vec& v) const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    bool is_direct_with(const Subspace& o) const;
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// Residue of v modulo the subspace: pivot coordinates eliminated.
    Vec reduce(const Vec& v) const;

    /// Standard basis vectors on the non-pivot coordinates: a deterministic
    /// complement of this subspace in the ambient space.
    std::vector<unsigned> non_pivot_coordinates() const;

  private:
    unsigned ambient_, order_;
    std::vector<Vec> basis_;
    std::vector<unsigned> pivots_;
};

/// Canonical basis of the right kernel {v : Mv = 0}.
Subspace nullspace(const Matrix& m);

/// Some solution of Mx = b if consistent (free variables set to zero).
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Exact inverse, or nullopt when singular. Requires square.
std::optional<Matrix> inverse(const Matrix& m);

/// Monic minimal polynomial, found as the first linear dependence among
/// I, M, M^2, ... in the full matrix space (row-major vectorization).
Poly min_poly(const Matrix& m);

}  // namespace hexad
