#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hexad/linalg.hpp"

namespace hexad {

/// Finite-dimensional Lie algebra given by sparse structure constants
/// [e_i, e_j] for i < j (antisymmetry implied, [e_i, e_i] = 0 implied).
/// The Jacobi identity is validated exhaustively at construction.
class LieAlgebra {
  public:
    using BracketMap = std::map<std::pair<unsigned, unsigned>, Vec>;

    /// Zero-dimensional placeholder; build real algebras through make().
    LieAlgebra() = default;

    /// Throws StructureError naming the offending triple when Jacobi fails.
    static LieAlgebra make(std::string name, unsigned dim, unsigned field_order,
                           BracketMap brackets);
    /// Abelian algebra C^dim.
    static LieAlgebra abelian(std::string name, unsigned dim, unsigned field_order);

    const std::string& name() const { return name_; }
    unsigned dim() const { return dim_; }
    unsigned field_order() const { return order_; }
    const BracketMap& brackets() const { return brackets_; }

    /// [e_i, e_j] for arbitrary i, j (signed lookup).
    Vec bracket_basis(unsigned i, unsigned j) const;
    /// Bilinear antisymmetric extension.
    Vec bracket(const Vec& u, const Vec& v) const;

    /// ad(x): y -> [x, y] as a matrix.
    Matrix ad(const Vec& x) const;
    Matrix ad_basis(unsigned i) const;

    bool is_abelian() const { return brackets_.empty(); }

    /// Same structure constants over a larger cyclotomic field.
    LieAlgebra embedded(unsigned new_order) const;
    LieAlgebra renamed(std::string new_name) const;

  private:
    std::string name_;
    unsigned dim_ = 0;
    unsigned order_ = 1;
    BracketMap brackets_;
};

/// Lower central series data. terms[0] = g, terms[k] = [g, terms[k-1]],
/// listed until the first zero term (inclusive).
struct SeriesReport {
    std::vector<Subspace> terms;
    std::optional<unsigned> nilpotency_class;  // absent: not nilpotent
    Subspace center;
    unsigned generator_count = 0;  // dim - dim [g,g]
    std::optional<unsigned> relation_count;  // set when a presentation is attached
};

SeriesReport series(const LieAlgebra& g);

/// Span of all [e_i, e_j].
Subspace commutator_subalgebra(const LieAlgebra& g);

/// Is the subspace an ideal: [g, I] <= I. On failure reports (basis index,
/// ideal basis index) of a violating pair.
bool is_ideal(const LieAlgebra& g, const Subspace& ideal,
              std::pair<unsigned, unsigned>* violation = nullptr);

/// Quotient by an ideal, on the deterministic complement basis given by the
/// non-pivot coordinates of the ideal, plus the projection matrix. Jacobi is
/// re-validated on the quotient.
std::pair<LieAlgebra, Matrix> quotient(const LieAlgebra& g, const Subspace& ideal,
                                       const std::string& name);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, const std::string& name);

}  // namespace hexad
