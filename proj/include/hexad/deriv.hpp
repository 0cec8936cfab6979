#pragma once

#include <array>
#include <optional>

#include "hexad/lie.hpp"

namespace hexad {

enum class MapKind { derivation, prederivation };

/// Square matrix attached to an algebra by name; the JSON carrier for
/// derivations and prederivations.
struct LinearMap {
    std::string algebra;
    Matrix matrix;
};

/// Canonical basis of all matrices D with D[e_i,e_j] = [De_i,e_j] + [e_i,De_j]
/// for all i < j, as a subspace of the dim^2-dimensional matrix space
/// (row-major vectorization).
Subspace derivation_space(const LieAlgebra& g);

/// Canonical basis of all matrices P with
/// P[x,[y,z]] = [Px,[y,z]] + [x,[Py,z]] + [x,[y,Pz]] on all basis triples.
Subspace prederivation_space(const LieAlgebra& g);

/// Direct identity check on basis pairs/triples (independent of the space
/// computation). On failure reports the violating pair (k = 0) or triple.
struct MemberResult {
    bool ok = false;
    std::array<unsigned, 3> violation{};  // 1-based; violation[0] == 0 when ok
    bool is_pair = false;
};

MemberResult is_member(const LieAlgebra& g, const Matrix& m, MapKind kind);

struct PeriodicityCertificate {
    unsigned order = 0;
    Poly min_poly;
    bool semisimple = false;
    /// remainder of x^order modulo min_poly; must be the constant 1
    Poly divisibility_witness;
};

enum class PeriodicFailure { none, non_semisimple, bound_exhausted };

struct PeriodicResult {
    std::optional<PeriodicityCertificate> certificate;
    PeriodicFailure failure = PeriodicFailure::none;
    Poly min_poly;

    bool periodic() const { return certificate.has_value(); }
    unsigned order() const { return certificate ? certificate->order : 0; }
};

/// Minimal m <= bound with M^m = id, certified through minimal-polynomial
/// divisibility of x^m - 1. Absent results distinguish a non-squarefree
/// minimal polynomial (not semisimple, hence never periodic) from an
/// exhausted scan bound.
PeriodicResult periodic_order(const Matrix& m, unsigned bound = 720);

struct InverseCheckResult {
    bool invertible = false;
    bool inverse_is_derivation = false;
    std::optional<Matrix> inverse_matrix;
    bool ok() const { return invertible && inverse_is_derivation; }
};

InverseCheckResult inverse_derivation_check(const LieAlgebra& g, const Matrix& m);

/// From a diagonal order-6 periodic derivation, produce one of order
/// exactly 6k: rescale so some diagonal entry is 1, then multiply by a
/// primitive 6k-th root of unity. The algebra and the map are lifted to
/// field order lcm(field, 6k). Postcondition (asserted): the result is a
/// derivation of periodic order exactly 6k.
std::pair<LieAlgebra, Matrix> extend_order(const LieAlgebra& g, const Matrix& d, unsigned k);

}  // namespace hexad
