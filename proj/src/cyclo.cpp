#include "hexad/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hexad/error.hpp"

namespace hexad {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r.get_num();
    if (r.get_den() != 1) os << "/" << r.get_den();
    return os.str();
}

Rat rat_parse(std::string_view text) {
    std::string s(text);
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational: '" + s + "'");
    }
}

unsigned gcd_u(unsigned a, unsigned b) {
    while (b) {
        unsigned t = a % b;
        a = b;
        b = t;
    }
    return a;
}

unsigned lcm_u(unsigned a, unsigned b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_u(a, b) * b;
}

unsigned totient(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Dense polynomial helpers over Rat, low degree first, used only for the
// cyclotomic polynomial construction.
using RatPoly = std::vector<Rat>;

RatPoly rp_trim(RatPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// Exact division, remainder must vanish.
RatPoly rp_div(RatPoly num, const RatPoly& den) {
    RatPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
    while (num.size() >= den.size() && !num.empty()) {
        size_t shift = num.size() - den.size();
        Rat c = num.back() / den.back();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        num = rp_trim(std::move(num));
    }
    if (!num.empty()) throw InternalError("cyclotomic division left a remainder");
    return q;
}

}  // namespace

const std::vector<Rat>& cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, RatPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n == 0) throw Error("cyclotomic polynomial needs n >= 1");

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
    // without the cache lock being re-entered.
    std::vector<unsigned> pending{n};
    while (!pending.empty()) {
        unsigned k = pending.back();
        if (cache.count(k)) {
            pending.pop_back();
            continue;
        }
        bool ready = true;
        for (unsigned d = 1; d < k; ++d) {
            if (k % d == 0 && !cache.count(d)) {
                pending.push_back(d);
                ready = false;
            }
        }
        if (!ready) continue;
        RatPoly num(k + 1, Rat(0));
        num[0] = -1;
        num[k] = 1;
        for (unsigned d = 1; d < k; ++d)
            if (k % d == 0) num = rp_div(std::move(num), cache.at(d));
        cache.emplace(k, std::move(num));
        pending.pop_back();
    }
    return cache.at(n);
}

// ---------------------------------------------------------------------------
// CycloScalar

CycloScalar::CycloScalar(unsigned order) : order_(order) {
    if (order == 0) throw Error("field order must be >= 1");
    coeffs_.assign(totient(order), Rat(0));
}

CycloScalar CycloScalar::one(unsigned order) {
    CycloScalar s(order);
    s.coeffs_[0] = 1;
    return s;
}

CycloScalar CycloScalar::from_rational(const Rat& r, unsigned order) {
    CycloScalar s(order);
    s.coeffs_[0] = r;
    return s;
}

CycloScalar CycloScalar::from_int(long v, unsigned order) {
    return from_rational(Rat(v), order);
}

CycloScalar CycloScalar::from_poly(unsigned order, std::vector<Rat> poly) {
    const RatPoly& phi = cyclotomic_polynomial(order);
    size_t deg = phi.size() - 1;
    // reduce mod Phi_n (monic)
    while (poly.size() > deg) {
        Rat c = poly.back();
        size_t shift = poly.size() - phi.size();
        if (c != 0)
            for (size_t i = 0; i < phi.size(); ++i) poly[shift + i] -= c * phi[i];
        poly.pop_back();
    }
    poly.resize(deg, Rat(0));
    CycloScalar s(order);
    s.coeffs_ = std::move(poly);
    return s;
}

CycloScalar CycloScalar::zeta(unsigned order, unsigned power) {
    std::vector<Rat> p(power % std::max(order, 1u) + 1, Rat(0));
    p[power % order] = 1;
    return from_poly(order, std::move(p));
}

CycloScalar CycloScalar::omega(unsigned order) {
    if (order % 3 != 0)
        throw FieldOrderError("omega requires 3 | field order, got " + std::to_string(order));
    return zeta(order, order / 3);
}

bool CycloScalar::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

bool CycloScalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rat& c) { return c == 0; });
}

bool CycloScalar::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rat& c) { return c == 0; });
}

Rat CycloScalar::rational_value() const {
    if (!is_rational()) throw InternalError("scalar is not rational: " + str());
    return coeffs_[0];
}

CycloScalar CycloScalar::embedded(unsigned m) const {
    if (m == order_) return *this;
    if (m % order_ != 0)
        throw FieldOrderError("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                              std::to_string(m) + ")");
    unsigned step = m / order_;
    std::vector<Rat> p((coeffs_.size() - 1) * step + 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
    return from_poly(m, std::move(p));
}

std::pair<CycloScalar, CycloScalar> unify(const CycloScalar& a, const CycloScalar& b) {
    if (a.field_order() == b.field_order()) return {a, b};
    if (b.field_order() % a.field_order() == 0) return {a.embedded(b.field_order()), b};
    if (a.field_order() % b.field_order() == 0) return {a, b.embedded(a.field_order())};
    throw FieldOrderError("incompatible field orders " + std::to_string(a.field_order()) + " and " +
                          std::to_string(b.field_order()));
}

CycloScalar CycloScalar::operator-() const {
    CycloScalar r(*this);
    for (Rat& c : r.coeffs_) c = -c;
    return r;
}

CycloScalar CycloScalar::operator+(const CycloScalar& o) const {
    auto [a, b] = unify(*this, o);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

CycloScalar CycloScalar::operator-(const CycloScalar& o) const {
    auto [a, b] = unify(*this, o);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
}

CycloScalar CycloScalar::operator*(const CycloScalar& o) const {
    auto [a, b] = unify(*this, o);
    std::vector<Rat> p(2 * a.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            p[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return from_poly(a.order_, std::move(p));
}

CycloScalar CycloScalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    // Extended Euclid in Q[x] against Phi_n: find u with u*a = 1 mod Phi_n.
    const RatPoly& phimod = cyclotomic_polynomial(order_);
    RatPoly r0 = phimod;
    RatPoly r1(coeffs_.begin(), coeffs_.end());
    r1 = rp_trim(std::move(r1));
    RatPoly s0{};            // coefficient of `a` in r0
    RatPoly s1{Rat(1)};      // coefficient of `a` in r1
    auto sub_mul = [](const RatPoly& x, const RatPoly& q, const RatPoly& y) {
        // x - q*y
        RatPoly out = x;
        if (out.size() < q.size() + y.size()) out.resize(q.size() + y.size(), Rat(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < y.size(); ++j) out[i + j] -= q[i] * y[j];
        }
        return rp_trim(std::move(out));
    };
    while (!(r1.size() == 1 || r1.empty())) {
        // quotient of r0 by r1
        RatPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
        RatPoly rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            size_t shift = rem.size() - r1.size();
            Rat c = rem.back() / r1.back();
            q[shift] += c;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            rem = rp_trim(std::move(rem));
        }
        RatPoly s2 = sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw InternalError("gcd with cyclotomic modulus vanished");
    // r1 is a nonzero constant: a * s1 = r1 mod Phi, so a^{-1} = s1 / r1.
    for (Rat& c : s1) c /= r1[0];
    return from_poly(order_, std::move(s1));
}

CycloScalar CycloScalar::operator/(const CycloScalar& o) const {
    auto [a, b] = unify(*this, o);
    return a * b.inverse();
}

CycloScalar CycloScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloScalar base = *this;
    CycloScalar acc = CycloScalar::one(order_);
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool CycloScalar::operator==(const CycloScalar& o) const {
    if (order_ != o.order_) {
        if (order_ % o.order_ == 0 || o.order_ % order_ == 0) {
            auto [a, b] = unify(*this, o);
            return a.coeffs_ == b.coeffs_;
        }
        return false;
    }
    return coeffs_ == o.coeffs_;
}

CycloScalar CycloScalar::conjugate() const {
    if (order_ <= 2) return *this;
    std::vector<Rat> p((coeffs_.size() - 1) * (order_ - 1) + 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) p[i * (order_ - 1)] += coeffs_[i];
    return from_poly(order_, std::move(p));
}

Rat CycloScalar::modulus_squared() const {
    CycloScalar prod = *this * conjugate();
    if (!prod.is_rational())
        throw InternalError("conjugate product is not rational for " + str());
    return prod.coeffs_[0];
}

std::optional<unsigned> CycloScalar::unit_order() const {
    unsigned n = order_;
    unsigned N = lcm_u(2, n);
    CycloScalar p = CycloScalar::one(n);
    CycloScalar z = CycloScalar::zeta(n, 1);
    for (unsigned j = 0; j < n; ++j) {
        long k = -1;
        if (*this == p)
            k = static_cast<long>(j) * (N / n) % N;
        else if (*this == -p)
            k = (static_cast<long>(j) * (N / n) + N / 2) % N;
        if (k >= 0) {
            unsigned g = gcd_u(N, static_cast<unsigned>(k));
            return N / g;
        }
        p = p * z;
    }
    return std::nullopt;
}

std::string CycloScalar::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool unit_coeff = (a == 1 && i > 0);
        if (!unit_coeff) os << rat_str(a);
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// Scalar grammar parser

namespace {

struct ScalarParser {
    std::string_view s;
    size_t pos = 0;
    unsigned order;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    unsigned long parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected digits at position " + std::to_string(pos) + " in scalar '" +
                             std::string(s) + "'");
        unsigned long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<unsigned long>(s[pos] - '0');
            ++pos;
        }
        return v;
    }

    Rat parse_rat(bool negative) {
        unsigned long num = parse_uint();
        unsigned long den = 1;
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            den = parse_uint();
            if (den == 0) throw ParseError("zero denominator in scalar '" + std::string(s) + "'");
        }
        Rat r(static_cast<long>(num), static_cast<long>(den));
        r.canonicalize();
        return negative ? Rat(-r) : r;
    }

    CycloScalar parse_pow() {
        skip_ws();
        char c = peek();
        unsigned base_power;
        if (c == 'z') {
            ++pos;
            base_power = 1;
        } else if (c == 'w') {
            ++pos;
            if (order % 3 != 0)
                throw ParseError("'w' used but 3 does not divide field order " +
                                 std::to_string(order));
            base_power = order / 3;
        } else {
            throw ParseError("expected 'z' or 'w' at position " + std::to_string(pos) +
                             " in scalar '" + std::string(s) + "'");
        }
        unsigned long exp = 1;
        if (accept('^')) exp = parse_uint();
        return CycloScalar::zeta(order, static_cast<unsigned>((base_power * exp) % order));
    }

    CycloScalar parse_term(bool negative) {
        skip_ws();
        if (accept('-')) negative = !negative;  // rat carries its own sign
        char c = peek();
        if (c == 'z' || c == 'w') {
            CycloScalar p = parse_pow();
            return negative ? -p : p;
        }
        Rat r = parse_rat(negative);
        if (accept('*')) {
            CycloScalar p = parse_pow();
            return CycloScalar::from_rational(r, order) * p;
        }
        return CycloScalar::from_rational(r, order);
    }

    CycloScalar parse_expr() {
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        CycloScalar acc = parse_term(neg);
        while (!eof()) {
            if (accept('+'))
                acc = acc + parse_term(false);
            else if (accept('-'))
                acc = acc + parse_term(true);
            else
                throw ParseError("unexpected character '" + std::string(1, peek()) +
                                 "' in scalar '" + std::string(s) + "'");
        }
        return acc;
    }
};

}  // namespace

CycloScalar parse_scalar(std::string_view text, unsigned order) {
    if (order == 0) throw ParseError("field order must be >= 1");
    ScalarParser p{text, 0, order};
    if (p.eof()) throw ParseError("empty scalar");
    return p.parse_expr();
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(unsigned order, std::vector<CycloScalar> coeffs) : order_(order) {
    coeffs_.reserve(coeffs.size());
    for (auto& c : coeffs) coeffs_.push_back(c.embedded(order));
    trim();
}

Poly Poly::constant(const CycloScalar& c) {
    return Poly(c.field_order(), {c});
}

Poly Poly::linear_root(const CycloScalar& c) {
    return Poly(c.field_order(), {-c, CycloScalar::one(c.field_order())});
}

Poly Poly::from_rationals(unsigned order, const std::vector<Rat>& coeffs) {
    std::vector<CycloScalar> cs;
    cs.reserve(coeffs.size());
    for (const Rat& r : coeffs) cs.push_back(CycloScalar::from_rational(r, order));
    return Poly(order, std::move(cs));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const CycloScalar& Poly::leading() const {
    if (coeffs_.empty()) throw Error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

CycloScalar Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return CycloScalar::zero(order_);
    return coeffs_[static_cast<size_t>(k)];
}

bool Poly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back().is_one();
}

Poly Poly::operator+(const Poly& o) const {
    unsigned ord = order_ == o.order_ ? order_ : lcm_u(order_, o.order_);
    std::vector<CycloScalar> out(std::max(coeffs_.size(), o.coeffs_.size()),
                                 CycloScalar::zero(ord));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = out[i] + coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] = out[i] + o.coeffs_[i];
    return Poly(ord, std::move(out));
}

Poly Poly::operator-() const {
    std::vector<CycloScalar> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return Poly(order_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    unsigned ord = order_ == o.order_ ? order_ : lcm_u(order_, o.order_);
    if (is_zero() || o.is_zero()) return Poly(ord);
    std::vector<CycloScalar> out(coeffs_.size() + o.coeffs_.size() - 1, CycloScalar::zero(ord));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] = out[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    return Poly(ord, std::move(out));
}

bool Poly::operator==(const Poly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != o.coeffs_[i]) return false;
    return true;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& divisor) const {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    unsigned ord = order_ == divisor.order_ ? order_ : lcm_u(order_, divisor.order_);
    Poly rem(ord, coeffs_);
    Poly div(ord, divisor.coeffs_);
    if (rem.degree() < div.degree()) return {Poly(ord), rem};
    std::vector<CycloScalar> q(static_cast<size_t>(rem.degree() - div.degree() + 1),
                               CycloScalar::zero(ord));
    CycloScalar lead_inv = div.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= div.degree()) {
        int shift = rem.degree() - div.degree();
        CycloScalar c = rem.leading() * lead_inv;
        q[static_cast<size_t>(shift)] = c;
        std::vector<CycloScalar> sub(static_cast<size_t>(shift), CycloScalar::zero(ord));
        for (const auto& dc : div.coeffs()) sub.push_back(dc * c);
        rem = rem - Poly(ord, std::move(sub));
    }
    return {Poly(ord, std::move(q)), rem};
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly(order_);
    std::vector<CycloScalar> out;
    out.reserve(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        out.push_back(coeffs_[i] * CycloScalar::from_int(static_cast<long>(i), order_));
    return Poly(order_, std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) throw Error("cannot normalize the zero polynomial");
    CycloScalar inv = leading().inverse();
    std::vector<CycloScalar> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c * inv);
    return Poly(order_, std::move(out));
}

CycloScalar Poly::eval(const CycloScalar& x) const {
    unsigned ord = lcm_u(order_, x.field_order());
    CycloScalar acc = CycloScalar::zero(ord);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const CycloScalar& c = coeffs_[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        if (k == 0)
            os << "(" << c.str() << ")";
        else if (c.is_one())
            os << (k == 1 ? "x" : "x^" + std::to_string(k));
        else
            os << "(" << c.str() << ")*" << (k == 1 ? "x" : "x^" + std::to_string(k));
        first = false;
    }
    return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly rem = r0.divrem(r1).second;
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    if (r0.is_zero()) return r0;
    return r0.monic();
}

bool poly_squarefree(const Poly& p) {
    if (p.is_zero()) throw Error("squarefree test on the zero polynomial");
    if (p.degree() == 0) return true;
    Poly g = poly_gcd(p, p.derivative());
    return g.degree() == 0;
}

bool poly_divides_cyclic(const Poly& p, unsigned m) {
    if (p.is_zero()) throw Error("divisibility test against the zero polynomial");
    if (!p.is_monic()) throw Error("poly_divides_cyclic requires a monic polynomial");
    if (p.degree() == 0) return true;
    unsigned ord = p.field_order();
    // r = x^k mod p, advanced by one multiply-by-x per step
    std::vector<CycloScalar> r(static_cast<size_t>(p.degree()), CycloScalar::zero(ord));
    r[0] = CycloScalar::one(ord);
    for (unsigned step = 0; step < m; ++step) {
        CycloScalar top = r.back();
        for (size_t i = r.size() - 1; i > 0; --i) r[i] = r[i - 1];
        r[0] = CycloScalar::zero(ord);
        if (!top.is_zero())
            for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - top * p.coeff(static_cast<int>(i));
    }
    if (!r[0].is_one()) return false;
    for (size_t i = 1; i < r.size(); ++i)
        if (!r[i].is_zero()) return false;
    return true;
}

}  // namespace hexad
