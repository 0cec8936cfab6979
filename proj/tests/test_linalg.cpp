#include <random>

#include "doctest.h"
#include "hexad/error.hpp"
#include "hexad/linalg.hpp"

using namespace hexad;

namespace {

CycloScalar W() { return CycloScalar::omega(6); }
CycloScalar one6() { return CycloScalar::one(6); }
CycloScalar zero6() { return CycloScalar::zero(6); }
CycloScalar ci(long v) { return CycloScalar::from_int(v, 6); }

Matrix random_matrix(std::mt19937& rng, unsigned n) {
    std::uniform_int_distribution<int> entry(-2, 2);
    std::uniform_int_distribution<int> wpow(0, 2);
    Matrix m(n, n, 6);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            m.at(i, j) = ci(entry(rng)) * W().pow(wpow(rng));
    return m;
}

// Heisenberg bracket on coordinates (x, y, z) with [x, y] = z, written out
// independently of the algebra module.
Vec h1_bracket(const Vec& u, const Vec& v) {
    Vec r = vec_zero(3, 6);
    r[2] = u[0] * v[1] - u[1] * v[0];
    return r;
}

}  // namespace

TEST_CASE("nullspace basics") {
    CHECK(nullspace(Matrix::identity(3, 6)).dim() == 0);
    CHECK(nullspace(Matrix(2, 3, 6)).dim() == 3);
}

TEST_CASE("nullspace of the Heisenberg derivation system has dimension 6") {
    // Unknowns: the 9 entries of a 3x3 matrix D. For each basis pair (i, j)
    // and each coordinate k, impose (D[ei,ej] - [Dei,ej] - [ei,Dej])_k = 0.
    // Coefficients are extracted by evaluating at each elementary matrix.
    std::vector<Vec> rows;
    for (unsigned i = 0; i < 3; ++i) {
        for (unsigned j = i + 1; j < 3; ++j) {
            for (unsigned k = 0; k < 3; ++k) {
                Vec row = vec_zero(9, 6);
                for (unsigned u = 0; u < 9; ++u) {
                    Matrix E(3, 3, 6);
                    E.at(u / 3, u % 3) = one6();
                    Vec ei = vec_zero(3, 6), ej = vec_zero(3, 6);
                    ei[i] = one6();
                    ej[j] = one6();
                    Vec lhs = E.apply(h1_bracket(ei, ej));
                    Vec rhs = vec_add(h1_bracket(E.apply(ei), ej), h1_bracket(ei, E.apply(ej)));
                    row[u] = lhs[k] - rhs[k];
                }
                rows.push_back(std::move(row));
            }
        }
    }
    Matrix system = Matrix::from_rows(rows, 9, 6);
    CHECK(nullspace(system).dim() == 6);
}

TEST_CASE("solve") {
    Matrix id = Matrix::identity(3, 6);
    Vec b = {ci(2), W(), one6() + W()};
    auto x = solve(id, b);
    REQUIRE(x.has_value());
    CHECK(vec_eq(*x, b));

    // inconsistent: rows x + y = 1 and x + y = 2
    Matrix m(2, 2, 6);
    m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = one6();
    CHECK(!solve(m, Vec{one6(), ci(2)}).has_value());

    // [[1, w], [0, 1]] x = (1 + w, 1): back-substitution gives (1, 1)
    Matrix t(2, 2, 6);
    t.at(0, 0) = one6();
    t.at(0, 1) = W();
    t.at(1, 1) = one6();
    auto y = solve(t, Vec{one6() + W(), one6()});
    REQUIRE(y.has_value());
    CHECK(vec_eq(*y, Vec{one6(), one6()}));
}

TEST_CASE("inverse") {
    Matrix d = Matrix::diagonal(Vec{one6(), W(), W() * W()});
    auto inv = inverse(d);
    REQUIRE(inv.has_value());
    CHECK(*inv == Matrix::diagonal(Vec{one6(), W() * W(), W()}));

    Matrix sing(2, 2, 6);
    sing.at(0, 0) = sing.at(1, 0) = one6();
    CHECK(!inverse(sing).has_value());
}

TEST_CASE("integral Heisenberg derivation inverse via adjugate oracle") {
    // D = [[0,-1,0],[1,1,0],[0,0,1]]
    Matrix d(3, 3, 6);
    d.at(0, 1) = ci(-1);
    d.at(1, 0) = one6();
    d.at(1, 1) = one6();
    d.at(2, 2) = one6();
    auto inv = inverse(d);
    REQUIRE(inv.has_value());

    // adjugate oracle: det via cofactor expansion, inverse = adj / det
    auto det2 = [](const CycloScalar& a, const CycloScalar& b, const CycloScalar& c,
                   const CycloScalar& dd) { return a * dd - b * c; };
    CycloScalar det = d.at(0, 0) * det2(d.at(1, 1), d.at(1, 2), d.at(2, 1), d.at(2, 2)) -
                      d.at(0, 1) * det2(d.at(1, 0), d.at(1, 2), d.at(2, 0), d.at(2, 2)) +
                      d.at(0, 2) * det2(d.at(1, 0), d.at(1, 1), d.at(2, 0), d.at(2, 1));
    CHECK(det == one6());  // det +-1, here +1
    Matrix adj(3, 3, 6);
    for (unsigned i = 0; i < 3; ++i) {
        for (unsigned j = 0; j < 3; ++j) {
            unsigned r0 = (i == 0) ? 1 : 0, r1 = (i == 2) ? 1 : 2;
            unsigned c0 = (j == 0) ? 1 : 0, c1 = (j == 2) ? 1 : 2;
            CycloScalar minor = det2(d.at(r0, c0), d.at(r0, c1), d.at(r1, c0), d.at(r1, c1));
            adj.at(j, i) = ((i + j) % 2 == 0) ? minor : -minor;
        }
    }
    CHECK(*inv == adj);  // det = 1
    // integer entries
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) {
            CHECK(inv->at(i, j).is_rational());
            CHECK(inv->at(i, j).rational_value().get_den() == 1);
        }
}

TEST_CASE("min_poly") {
    Matrix id = Matrix::identity(4, 6);
    Poly p = min_poly(id);
    CHECK(p == Poly(6, {ci(-1), one6()}));  // x - 1

    // [[0,-1],[1,1]]: characteristic polynomial oracle x^2 - tr x + det
    Matrix b(2, 2, 6);
    b.at(0, 1) = ci(-1);
    b.at(1, 0) = one6();
    b.at(1, 1) = one6();
    CycloScalar tr = b.at(0, 0) + b.at(1, 1);
    CycloScalar det = b.at(0, 0) * b.at(1, 1) - b.at(0, 1) * b.at(1, 0);
    Poly charpoly(6, {det, -tr, one6()});
    CHECK(min_poly(b) == charpoly);
    CHECK(charpoly == Poly(6, {one6(), ci(-1), one6()}));  // x^2 - x + 1

    // diag(1, 1, w) -> (x - 1)(x - w)
    Matrix d = Matrix::diagonal(Vec{one6(), one6(), W()});
    CHECK(min_poly(d) == Poly::linear_root(one6()) * Poly::linear_root(W()));
}

TEST_CASE("min_poly annihilates and is minimal on random matrices") {
    std::mt19937 rng(321u);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = random_matrix(rng, 4);
        Poly p = min_poly(m);
        CHECK(p.is_monic());
        // p(M) = 0 exactly
        Matrix acc(4, 4, 6);
        for (int k = p.degree(); k >= 0; --k)
            acc = acc * m + Matrix::identity(4, 6).scaled(p.coeff(k));
        CHECK(acc.is_zero());
        // Minimality: powers I..M^{deg-1} are linearly independent.
        std::vector<Vec> rows;
        Matrix pw = Matrix::identity(4, 6);
        for (int k = 0; k < p.degree(); ++k) {
            rows.push_back(pw.vectorized());
            pw = pw * m;
        }
        CHECK(rref(Matrix::from_rows(rows, 16, 6)).rank == static_cast<unsigned>(p.degree()));
    }
}

TEST_CASE("inverse(M) * M = I and rank-nullity on random matrices") {
    std::mt19937 rng(654u);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = random_matrix(rng, 4);
        auto inv = inverse(m);
        if (inv) CHECK(*inv * m == Matrix::identity(4, 6));
        RrefResult r = rref(m);
        CHECK(r.rank + nullspace(m).dim() == m.cols());
        // nullspace vectors are exact kernel elements
        for (const Vec& v : nullspace(m).basis()) CHECK(vec_is_zero(m.apply(v)));
    }
}

TEST_CASE("subspace operations") {
    unsigned n = 3;
    Vec e1 = vec_zero(n, 6), e2 = vec_zero(n, 6);
    e1[0] = one6();
    e2[1] = one6();
    Subspace s1 = Subspace::span({e1}, n, 6);
    Subspace s2 = Subspace::span({e2}, n, 6);
    Subspace s12 = Subspace::span({e1, e2}, n, 6);

    CHECK(s1.intersect(s1) == s1);
    CHECK(s1.sum(s2) == s12);
    CHECK(s1.is_direct_with(s2));
    CHECK(!s12.is_direct_with(s1));

    Vec e12 = vec_add(e1, e2);
    Subspace diag = Subspace::span({e12}, n, 6);
    Subspace inter = diag.intersect(s12);
    CHECK(inter.dim() == 1);
    CHECK(inter == diag);  // echelon oracle: the only intersection is span(e1+e2)

    CHECK(s12.contains(e12));
    CHECK(!s1.contains(e12));
    CHECK_THROWS_AS(s1.sum(Subspace::span({Vec{one6()}}, 1, 6)), Error);
}

TEST_CASE("subspace canonical form makes equality trivial") {
    Vec a = {one6(), W(), ci(2)};
    Vec b = {zero6(), one6(), one6() + W()};
    Subspace s = Subspace::span({a, b}, 3, 6);
    Subspace t = Subspace::span({vec_add(a, b), vec_sub(a, b)}, 3, 6);
    CHECK(s == t);
    CHECK(s.dim() == 2);
}

TEST_CASE("non-pivot coordinates give a deterministic complement") {
    Vec a = {one6(), ci(2), zero6()};
    Subspace s = Subspace::span({a}, 3, 6);
    auto npc = s.non_pivot_coordinates();
    CHECK(npc == std::vector<unsigned>{1, 2});
}
