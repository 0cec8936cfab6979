#pragma once

#include <array>
#include <optional>

#include "hexad/deriv.hpp"
#include "hexad/lie.hpp"

namespace hexad {

/// Grading by the sixth roots of unity with the odd-power parts central.
/// Part k holds the subspace labeled zeta_6^k under the identification
///   (1, w, w^2, 1+w, 1+w^2, w+w^2) = (z6^0, z6^2, z6^4, z6^1, z6^5, z6^3),
/// so the generator parts carry even powers and the central parts carry the
/// odd powers. Bracket closure is additive on the labels: a bracket of parts
/// labeled u and v must land in the part labeled u+v, and vanish when u+v is
/// not a sixth root of unity.
class HexGrading {
  public:
    HexGrading() = default;
    HexGrading(unsigned ambient, unsigned order) {
        for (auto& p : parts_) p = Subspace(ambient, order);
    }

    static CycloScalar label(unsigned k) { return CycloScalar::zeta(6, k % 6); }
    /// Index set of the central labels {1+w, 1+w^2, w+w^2} = odd powers.
    static bool is_central_label(unsigned k) { return k % 2 == 1; }

    const Subspace& part(unsigned k) const { return parts_[k % 6]; }
    void set_part(unsigned k, Subspace s) { parts_[k % 6] = std::move(s); }

    unsigned total_dim() const;
    bool operator==(const HexGrading& o) const { return parts_ == o.parts_; }

  private:
    std::array<Subspace, 6> parts_{};
};

/// Grading by distinct nonzero scalars with additive bracket closure and the
/// constraint that a nonzero bracket forces the label ratio to be a
/// primitive third root of unity.
struct TriGrading {
    std::vector<std::pair<CycloScalar, Subspace>> parts;
};

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> violations;
    void fail(std::string msg) {
        ok = false;
        violations.push_back(std::move(msg));
    }
};

/// Directness, additive closure, centrality of the odd-power parts, and the
/// two-step consequence [g,[g,g]] = 0.
VerifyReport verify_hexagonal(const LieAlgebra& g, const HexGrading& h);

/// Directness, additive closure, and the third-root ratio condition on every
/// nonzero bracket pair.
VerifyReport verify_triangular(const LieAlgebra& g, const TriGrading& t);

/// The block-scalar map D(x) = zeta x for x in the part labeled zeta.
/// Postconditions (asserted): a derivation; periodic of order 6 on
/// nonabelian algebras, order in {1,2,3,6} in general. Degenerate gradings
/// whose map has order < 6 are reported through `degenerate_order`.
struct GradingDerivation {
    Matrix matrix;
    unsigned order = 0;
    bool degenerate = false;  // order < 6 (grading concentrated on few parts)
};
GradingDerivation grading_to_derivation(const LieAlgebra& g, const HexGrading& h);

/// Bookkeeping of the triangular -> hexagonal construction:
/// per-label splitting g_a = V_a + W_a with W_a = g_a n [g,g], the label
/// classes under a^3 = b^3, and the ideal blocks assembled from them.
struct ConversionTrace {
    std::vector<CycloScalar> labels;
    std::vector<Subspace> w_parts;
    std::vector<Subspace> v_parts;
    std::vector<CycloScalar> class_representatives;
    std::vector<Subspace> blocks;
};

/// Constructive equivalence: every valid triangular grading yields a
/// hexagonal one by splitting off the commutator parts, grouping labels by
/// their cubes, and normalizing each class by its representative.
std::pair<HexGrading, ConversionTrace> triangular_to_hexagonal(const LieAlgebra& g,
                                                               const TriGrading& t);

/// Eigenspace decomposition of a periodic derivation, normalized into a
/// hexagonal grading. Requires all eigenvalues in the working field (the
/// minimal polynomial must split over the roots of unity of Q(zeta_n));
/// otherwise StructureError suggests raising the field order.
HexGrading derivation_to_grading(const LieAlgebra& g, const Matrix& d);

}  // namespace hexad
