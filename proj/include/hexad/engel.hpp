#pragma once

#include <map>
#include <optional>

#include "hexad/lie.hpp"

namespace hexad {

/// Exact test ad(x)^m = 0.
bool ad_power_zero(const LieAlgebra& g, const Vec& x, unsigned m);

/// True iff every column of the (invertible) basis matrix is ad-nilpotent of
/// degree m; certifies dim E_m(g) = dim g.
bool pre_engel_witness(const LieAlgebra& g, const Matrix& basis, unsigned m);

/// Result of deciding ad(x)^m = 0 for all x via full polarization of the
/// degree-m identity (valid in characteristic zero): for every multiset of
/// basis indices the symmetrized product of ad operators must vanish.
struct EngelDecision {
    bool holds = false;
    std::optional<Vec> violator;  // explicit x with ad(x)^m != 0
};

/// Guard: m <= 5. Violators are reconstructed deterministically: basis
/// vectors first, then sums/differences of pairs, then seeded random
/// rational samples.
EngelDecision engel_identity(const LieAlgebra& g, unsigned m, unsigned long seed = 0);

/// Verified lower bound on dim E_m(g) from an explicit candidate pool:
/// candidates failing ad(x)^m = 0 are discarded, the span of the survivors
/// is reported. The default pool is the basis plus all e_i +- e_j.
struct EngelReport {
    unsigned m = 0;
    bool identity_holds = false;
    std::optional<Vec> witness_violator;
    unsigned em_span_lower_bound = 0;
    std::vector<Vec> witness_set;  // ad-nilpotent vectors spanning the bound
};

EngelReport em_span_bound(const LieAlgebra& g, unsigned m, std::vector<Vec> candidates = {},
                          unsigned long seed = 0);

/// Witness that an algebra does NOT satisfy property F: an invertible basis
/// (columns) plus, for every unordered basis triple, a chosen pair (l, m)
/// inside it with [b_l,[b_l,b_m]] = [b_m,[b_m,b_l]] = 0.
struct PropertyFWitness {
    Matrix basis;
    /// key: triple of 1-based basis positions (sorted); value: pair within it
    std::map<std::array<unsigned, 3>, std::array<unsigned, 2>> pair_choice;
};

struct PropertyFResult {
    bool falsified = false;
    std::optional<std::array<unsigned, 3>> failing_triple;
    std::string reason;
};

/// Verifies the witness; success certifies that g does not have property F.
/// Requires pair_choice to cover all C(dim, 3) triples.
PropertyFResult property_f_falsify(const LieAlgebra& g, const PropertyFWitness& w);

/// Convenience: derive a triple -> pair map from a covering pair list (each
/// triple takes the first listed pair it contains). Throws StructureError
/// if some triple contains none of the pairs.
std::map<std::array<unsigned, 3>, std::array<unsigned, 2>> pair_choice_from_list(
    unsigned dim, const std::vector<std::array<unsigned, 2>>& pairs);

}  // namespace hexad
