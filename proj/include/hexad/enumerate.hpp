#pragma once

#include <optional>
#include <vector>

#include "hexad/unitsolver.hpp"

namespace hexad {

/// Integer arithmetic in Z[zeta_N] for an even N: coefficient vectors of
/// length phi(N) reduced modulo the N-th cyclotomic polynomial, with a
/// lookup table of all roots of unity of the field. This is the fast path
/// under oracle_enumerate; the CycloScalar layer is its reference.
class CycloIntContext {
  public:
    explicit CycloIntContext(unsigned N);

    unsigned modulus() const { return n_; }
    unsigned degree() const { return phi_; }

    /// zeta_N^j reduced mod Phi_N.
    const std::vector<long>& root(unsigned j) const { return roots_[j % n_]; }

    /// Exponent e with v = zeta_N^e, when v is a root of unity of the field.
    std::optional<unsigned> unit_exponent(const std::vector<long>& v) const;

  private:
    unsigned n_, phi_;
    std::vector<std::vector<long>> roots_;
    std::vector<std::pair<std::vector<long>, unsigned>> sorted_units_;
};

}  // namespace hexad
