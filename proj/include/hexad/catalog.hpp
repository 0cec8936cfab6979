#pragma once

#include <optional>

#include "hexad/json_io.hpp"

namespace hexad {

/// One named algebra with its stored witnesses and expected assertions.
/// Loading re-verifies every witness: maps must satisfy their defining
/// identity, gradings must verify, eigenform families must validate, and
/// presentations must reproduce the stored algebra.
struct CatalogEntry {
    std::string name;
    LieAlgebra algebra;
    std::optional<Matrix> periodic_derivation;
    std::optional<Matrix> integral_derivation;
    std::optional<Matrix> periodic_prederivation;
    std::optional<HexGrading> hex_grading;
    std::optional<PresentationData> presentation;
    std::optional<UnitSystem> obstruction;
    std::optional<EigenformData> eigenform;
    std::optional<Matrix> pre_engel_basis;
    std::optional<unsigned> pre_engel_degree;
    std::optional<PropertyFWitness> property_f_witness;
    Json expected;  // flat map of assertion name -> expected value
};

class Catalog {
  public:
    explicit Catalog(std::string root_dir);

    const std::string& root() const { return root_; }
    /// Entry names in deterministic (lexicographic) order.
    std::vector<std::string> names() const;
    /// Load and re-verify one entry; throws on unknown name or any witness
    /// that fails its check.
    CatalogEntry get(const std::string& name) const;

    static std::string default_root();

  private:
    std::string root_;
};

/// Resolve "catalog:<name>" references or plain file paths to an algebra.
LieAlgebra resolve_algebra(const std::string& ref, const Catalog& catalog);

}  // namespace hexad
