#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hexad/deriv.hpp"
#include "hexad/lie.hpp"

namespace hexad {

/// Integer-coefficient linear forms over root-of-unity variables. Every
/// variable is implicitly required to be a root of unity on its own; the
/// listed forms must all evaluate to roots of unity as well.
struct UnitSystem {
    std::vector<std::string> vars;
    std::vector<std::vector<long>> forms;

    /// Forms plus the implicit singleton form for every variable.
    std::vector<std::vector<long>> all_forms() const;
};

enum class UnitStatus { SAT, UNSAT, UNKNOWN };

/// One machine-checkable step of an UNSAT certificate.
struct CertStep {
    enum class Kind { TRIANGLE, EQUILATERAL, EXHAUST } kind;
    /// TRIANGLE: the form whose modulus bound excludes a unit value.
    std::vector<long> form;
    /// TRIANGLE: lower (2 max|c| - sum|c|) and upper (sum|c|) modulus bounds.
    long lower_bound = 0, upper_bound = 0;
    /// EQUILATERAL: the two variable indices, the rational cosine forced by
    /// |a u + b v| = 1, and the allowed ratios u/v (empty set = direct
    /// contradiction).
    unsigned var_i = 0, var_j = 0;
    Rat cosine;
    std::vector<CycloScalar> allowed_ratios;  // elements of Q(zeta_12)
    /// EXHAUST: number of closed branches; for each, the first violated form.
    unsigned long branches = 0;
    std::vector<std::pair<std::vector<unsigned>, std::vector<long>>> branch_refutations;

    std::string describe(const UnitSystem& s) const;
};

struct UnitVerdict {
    UnitStatus status = UnitStatus::UNKNOWN;
    /// SAT: one root-of-unity value per variable (field order 12).
    std::optional<std::vector<CycloScalar>> witness;
    std::vector<CertStep> certificate;
    unsigned search_bound_used = 0;
    std::string note;
};

/// Decide whether all forms can simultaneously be roots of unity.
///
/// Pipeline: (a) TRIANGLE pruning by exact integer modulus bounds;
/// (b) ratio constraints from two-variable forms (the equilateral triangle
/// argument and its rational-cosine generalizations), which confine the
/// ratio of two unit variables to an explicit subset of the twelfth roots;
/// (c) normalization of the first variable to 1 (sound by homogeneity) and
/// exhaustive search along the constraint graph. Complete whenever every
/// variable is connected to the first one through two-variable forms;
/// otherwise a failed search returns UNKNOWN. Guards: <= 8 variables,
/// <= 40 forms.
UnitVerdict solve_units(const UnitSystem& s);

/// Re-check every certificate step by exact arithmetic.
bool replay_certificate(const UnitSystem& s, const UnitVerdict& v);

/// Exhaustive scan of mu_m assignments in Q(zeta_lcm(m,6)).
struct EnumerateResult {
    bool sat = false;
    /// lexicographically least witness, as exponents e with v_i = zeta_m^e
    std::optional<std::vector<unsigned>> witness_exponents;
    unsigned long long assignments_scanned = 0;
};

/// Fast kernel (integer cyclotomic vectors, OpenMP when available).
/// Guard: m^vars <= 1e8.
EnumerateResult oracle_enumerate(const UnitSystem& s, unsigned m);

/// Serial reference implementation on exact CycloScalar arithmetic; kept
/// for testing the kernel and for the benchmark.
EnumerateResult oracle_enumerate_reference(const UnitSystem& s, unsigned m);

/// Verify that diag(forms evaluated at random rational samples) is a
/// derivation (or prederivation) of g for `samples` seeded draws: the stated
/// parametrized eigenvalue family really is a family of such maps.
bool eigenform_family_check(const LieAlgebra& g, const UnitSystem& family,
                            const std::vector<std::vector<long>>& positions, MapKind kind,
                            unsigned samples = 50, unsigned long seed = 0);

}  // namespace hexad
