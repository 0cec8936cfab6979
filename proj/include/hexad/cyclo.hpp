#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hexad/rational.hpp"

namespace hexad {

/// Euler totient, gcd/lcm on small unsigned values.
unsigned totient(unsigned n);
unsigned gcd_u(unsigned a, unsigned b);
unsigned lcm_u(unsigned a, unsigned b);

/// Coefficients of the n-th cyclotomic polynomial, low degree first,
/// monic of degree totient(n). Integer entries.
const std::vector<Rat>& cyclotomic_polynomial(unsigned n);

/// Element of the cyclotomic field Q(zeta_n), stored as a polynomial in
/// zeta_n of degree < totient(n), reduced modulo the n-th cyclotomic
/// polynomial. The representation is canonical, so equality is
/// coefficient-wise. Values are immutable in spirit: all operations
/// return fresh scalars.
class CycloScalar {
  public:
    CycloScalar() : CycloScalar(1) {}
    explicit CycloScalar(unsigned order);

    static CycloScalar zero(unsigned order) { return CycloScalar(order); }
    static CycloScalar one(unsigned order);
    static CycloScalar from_rational(const Rat& r, unsigned order);
    static CycloScalar from_int(long v, unsigned order);
    /// zeta_n^power
    static CycloScalar zeta(unsigned order, unsigned power = 1);
    /// The primitive third root omega = zeta_n^(n/3). Requires 3 | n.
    static CycloScalar omega(unsigned order);

    unsigned field_order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// The value as a rational; throws InternalError if not rational.
    Rat rational_value() const;

    /// Canonical embedding into Q(zeta_m); requires field_order | m.
    CycloScalar embedded(unsigned m) const;

    CycloScalar operator-() const;
    CycloScalar operator+(const CycloScalar& o) const;
    CycloScalar operator-(const CycloScalar& o) const;
    CycloScalar operator*(const CycloScalar& o) const;
    CycloScalar operator/(const CycloScalar& o) const;
    CycloScalar inverse() const;
    CycloScalar pow(long e) const;

    CycloScalar& operator+=(const CycloScalar& o) { return *this = *this + o; }
    CycloScalar& operator-=(const CycloScalar& o) { return *this = *this - o; }
    CycloScalar& operator*=(const CycloScalar& o) { return *this = *this * o; }

    bool operator==(const CycloScalar& o) const;
    bool operator!=(const CycloScalar& o) const { return !(*this == o); }

    /// Image under zeta_n -> zeta_n^(n-1) (complex conjugation).
    CycloScalar conjugate() const;

    /// |a|^2 as an exact rational. The conjugate product must land in the
    /// rational subfield; otherwise InternalError.
    Rat modulus_squared() const;

    /// Multiplicative order if the value is a root of unity. The roots of
    /// unity in Q(zeta_n) are exactly mu_lcm(2,n); tested by comparison
    /// against +-zeta_n^j for all j.
    std::optional<unsigned> unit_order() const;

    /// Rendering in the scalar grammar (always via "z", never "w");
    /// parse_scalar(str(), field_order()) round-trips.
    std::string str() const;

  private:
    unsigned order_;
    std::vector<Rat> coeffs_;  // length totient(order_)

    static CycloScalar from_poly(unsigned order, std::vector<Rat> poly);
    friend CycloScalar parse_scalar(std::string_view, unsigned);
};

/// Parse the scalar grammar:
///   expr := term (('+'|'-') term)*
///   term := rat ('*' pow)? | pow
///   pow  := ('z'|'w') ('^' uint)?
///   rat  := int ('/' uint)?
/// Whitespace is ignored. "z" denotes zeta_n, "w" denotes the primitive
/// third root zeta_n^(n/3) (error when 3 does not divide n).
CycloScalar parse_scalar(std::string_view text, unsigned order);

/// Unify the field orders of two scalars (smaller embeds if it divides the
/// larger; incompatible orders throw FieldOrderError).
std::pair<CycloScalar, CycloScalar> unify(const CycloScalar& a, const CycloScalar& b);

/// Dense univariate polynomial over one cyclotomic field, canonical
/// (no trailing zero coefficients; the zero polynomial has no
/// coefficients at all). Coefficients low degree first.
class Poly {
  public:
    Poly() : order_(1) {}
    explicit Poly(unsigned order) : order_(order) {}
    Poly(unsigned order, std::vector<CycloScalar> coeffs);

    static Poly constant(const CycloScalar& c);
    /// x - c
    static Poly linear_root(const CycloScalar& c);
    static Poly from_rationals(unsigned order, const std::vector<Rat>& coeffs);

    unsigned field_order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<CycloScalar>& coeffs() const { return coeffs_; }
    const CycloScalar& leading() const;
    CycloScalar coeff(int k) const;
    bool is_monic() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divrem(const Poly& divisor) const;
    Poly derivative() const;
    Poly monic() const;
    CycloScalar eval(const CycloScalar& x) const;

    std::string str() const;

  private:
    unsigned order_;
    std::vector<CycloScalar> coeffs_;
    void trim();
};

/// Monic gcd by the Euclidean algorithm.
Poly poly_gcd(const Poly& a, const Poly& b);

/// True iff gcd(p, p') is constant. Requires p nonzero.
bool poly_squarefree(const Poly& p);

/// True iff p divides x^m - 1, computed as x^m mod p == 1 by iterated
/// multiply-by-x reduction. Requires p monic, nonzero.
bool poly_divides_cyclic(const Poly& p, unsigned m);

}  // namespace hexad
