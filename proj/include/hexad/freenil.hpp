#pragma once

#include <array>
#include <optional>

#include "hexad/grading.hpp"
#include "hexad/lie.hpp"

namespace hexad {

/// Witt necklace number: dimension of the degree-d homogeneous component of
/// the free Lie algebra on g generators, (1/d) sum_{e | d} mu(e) g^{d/e}.
unsigned long witt_dimension(unsigned d, unsigned g);

/// Per-degree sizes of the classical Hall-tree family up to degree c,
/// enumerated combinatorially (no linear algebra). Agrees with the Witt
/// numbers degree by degree.
std::vector<unsigned long> hall_tree_counts(unsigned c, unsigned g);

/// Free-nilpotent Lie algebra N(c, g) of nilpotency class c on g
/// generators. Basis words are ordered by degree then lexicographically on
/// generator indices, with the left-normed convention
/// (i1,...,id) = ad(x_{i1}) ... ad(x_{i_{d-1}})(x_{i_d}) for degree >= 3;
/// in each degree the lexicographically first independent words are kept.
/// Structure constants are extracted by expanding words in the
/// degree-truncated free associative algebra.
struct HallBasis {
    unsigned generators = 0;
    unsigned nilpotency_class = 0;
    /// Basis words as index tuples, all degrees concatenated in order.
    std::vector<std::vector<unsigned>> words;
    /// First basis index of each degree d (offsets[d-1]) plus the total.
    std::vector<unsigned> degree_offsets;
    LieAlgebra algebra;

    unsigned dim() const { return algebra.dim(); }
    unsigned degree_of(unsigned index) const;
    /// Basis position of the degree-2 word (i, j), i < j.
    unsigned pair_position(unsigned i, unsigned j) const;
};

/// Guards: c <= 5, g <= 5, total dimension <= 64.
HallBasis free_nilpotent(unsigned c, unsigned g, unsigned field_order = 6);

/// The three-block generator partition (X, Y, Z) with the ideal and its
/// per-block pieces, all in full N(2,g) coordinates.
struct FreePresentation {
    unsigned generators = 0;
    std::array<std::vector<unsigned>, 3> partition;  // 0-based generator indices
    Subspace ideal;
    /// Pieces J_X, J_Y, J_Z (full diagonal spans) and J_XY, J_XZ, J_YZ.
    std::array<Subspace, 3> diagonal_parts;
    std::array<Subspace, 3> cross_parts;  // order: XY, XZ, YZ
};

/// Build and validate an ideal of N(2,g) of the homogeneously partitioning
/// shape: the diagonal blocks [X,X], [Y,Y], [Z,Z] enter whole; the cross
/// vectors (given in degree-2 coordinates, length C(g,2)) must lie in their
/// respective cross-bracket spans.
FreePresentation build_partition_ideal(const HallBasis& f,
                                       const std::array<std::vector<unsigned>, 3>& partition,
                                       const std::array<std::vector<Vec>, 3>& cross_vectors);

/// Quotient N(2,g)/J with the induced grading: X, Y, Z land in the parts
/// labeled 1, w, w^2 and the cross blocks in 1+w, 1+w^2, w+w^2.
/// The result passes verify_hexagonal.
std::pair<LieAlgebra, HexGrading> presentation_to_grading(const HallBasis& f,
                                                          const FreePresentation& p,
                                                          const std::string& name);

/// From a hexagonal grading whose generator parts generate g: build the
/// epimorphism from N(2, g'), take its kernel, and verify that the kernel
/// partitions homogeneously along the induced generator split.
FreePresentation grading_to_presentation(const LieAlgebra& g, const HexGrading& h);

/// Exact-rational dimension estimates for two-step algebras with a periodic
/// derivation: g <= n <= g^2/3 + g and g(g-3)/6 <= r <= g(g-1)/2.
struct EstimateReport {
    unsigned n = 0, generators = 0, relations = 0;
    bool n_within = false, r_within = false;
    Rat n_upper, r_lower, r_upper;
    bool ok() const { return n_within && r_within; }
};
EstimateReport check_estimates(unsigned n, unsigned generators, unsigned relations);

/// Search the partitions (X, Y, Z) of the generators (x1 fixed in X, Y
/// labeled before Z) in lexicographic order for one that decomposes I as a
/// homogeneously partitioning ideal. Sound for "yes": absence is not a
/// proof of non-existence, since changes of generators are not searched.
struct PartitionSearchResult {
    std::optional<FreePresentation> presentation;
    std::optional<HexGrading> grading;
    std::optional<LieAlgebra> quotient;
    unsigned long partitions_tried = 0;
    bool found() const { return presentation.has_value(); }
};
PartitionSearchResult partition_search(const HallBasis& f, const Subspace& ideal,
                                       const std::string& quotient_name);

}  // namespace hexad
