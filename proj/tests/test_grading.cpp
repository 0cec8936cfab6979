#include "doctest.h"
#include "fixtures.hpp"
#include "hexad/error.hpp"
#include "hexad/grading.hpp"

using namespace hexad;
using namespace hexad::fixtures;

namespace {

CycloScalar W() { return CycloScalar::omega(6); }
CycloScalar one6() { return CycloScalar::one(6); }

/// x1..x6 of N(2,3) labeled 1, w, w^2, 1+w, 1+w^2, w+w^2, i.e. part indices
/// 0, 2, 4, 1, 5, 3.
HexGrading n23_standard_grading() {
    HexGrading h(6, 6);
    h.set_part(0, Subspace::span({unit_vec(6, 0)}, 6, 6));
    h.set_part(2, Subspace::span({unit_vec(6, 1)}, 6, 6));
    h.set_part(4, Subspace::span({unit_vec(6, 2)}, 6, 6));
    h.set_part(1, Subspace::span({unit_vec(6, 3)}, 6, 6));
    h.set_part(5, Subspace::span({unit_vec(6, 4)}, 6, 6));
    h.set_part(3, Subspace::span({unit_vec(6, 5)}, 6, 6));
    return h;
}

Matrix n23_standard_derivation() {
    CycloScalar w = W(), one = one6();
    return Matrix::diagonal(Vec{one, w, w * w, one + w, one + w * w, w + w * w});
}

}  // namespace

TEST_CASE("verify_hexagonal accepts the standard N(2,3) grading") {
    LieAlgebra g = n23();
    CHECK(verify_hexagonal(g, n23_standard_grading()).ok);
}

TEST_CASE("verify_hexagonal accepts single-part abelian gradings") {
    LieAlgebra c3 = LieAlgebra::abelian("C3", 3, 6);
    HexGrading h(3, 6);
    h.set_part(0, Subspace::full(3, 6));
    CHECK(verify_hexagonal(c3, h).ok);
}

TEST_CASE("verify_hexagonal reports a mislabeled part") {
    LieAlgebra g = n23();
    HexGrading h = n23_standard_grading();
    // move x4 = [x1,x2] from part z6^1 to part z6^2: closure on (x1, x2) breaks
    h.set_part(1, Subspace(6, 6));
    h.set_part(2, Subspace::span({unit_vec(6, 1), unit_vec(6, 3)}, 6, 6));
    VerifyReport rep = verify_hexagonal(g, h);
    CHECK(!rep.ok);
    CHECK(!rep.violations.empty());
}

TEST_CASE("grading_to_derivation on the standard grading") {
    LieAlgebra g = n23();
    GradingDerivation gd = grading_to_derivation(g, n23_standard_grading());
    CHECK(gd.matrix == n23_standard_derivation());
    CHECK(gd.order == 6);
    CHECK(!gd.degenerate);
}

TEST_CASE("grading_to_derivation, abelian all in part z6^1") {
    LieAlgebra c2 = LieAlgebra::abelian("C2", 2, 6);
    HexGrading h(2, 6);
    h.set_part(1, Subspace::full(2, 6));
    GradingDerivation gd = grading_to_derivation(c2, h);
    CHECK(gd.order == 6);
    // zeta_6 * identity
    auto z6 = -(W() * W());
    CHECK(gd.matrix == Matrix::identity(2, 6).scaled(z6));
}

TEST_CASE("grading_to_derivation on h1 graded 1, w, 1+w") {
    LieAlgebra h1 = heisenberg(1);
    HexGrading h(3, 6);
    h.set_part(0, Subspace::span({unit_vec(3, 0)}, 3, 6));
    h.set_part(2, Subspace::span({unit_vec(3, 1)}, 3, 6));
    h.set_part(1, Subspace::span({unit_vec(3, 2)}, 3, 6));
    GradingDerivation gd = grading_to_derivation(h1, h);
    CHECK(gd.order == 6);
    CHECK(gd.matrix == Matrix::diagonal(Vec{one6(), W(), one6() + W()}));
}

TEST_CASE("degenerate grading reports its true order") {
    // abelian concentrated on the third-root part w: order 3, flagged
    LieAlgebra c2 = LieAlgebra::abelian("C2", 2, 6);
    HexGrading h(2, 6);
    h.set_part(2, Subspace::full(2, 6));
    GradingDerivation gd = grading_to_derivation(c2, h);
    CHECK(gd.order == 3);
    CHECK(gd.degenerate);
}

TEST_CASE("verify_triangular") {
    LieAlgebra g = n23();
    TriGrading t;
    CycloScalar w = W(), one = one6();
    t.parts.emplace_back(one, Subspace::span({unit_vec(6, 0)}, 6, 6));
    t.parts.emplace_back(w, Subspace::span({unit_vec(6, 1)}, 6, 6));
    t.parts.emplace_back(w * w, Subspace::span({unit_vec(6, 2)}, 6, 6));
    t.parts.emplace_back(one + w, Subspace::span({unit_vec(6, 3)}, 6, 6));
    t.parts.emplace_back(one + w * w, Subspace::span({unit_vec(6, 4)}, 6, 6));
    t.parts.emplace_back(w + w * w, Subspace::span({unit_vec(6, 5)}, 6, 6));
    CHECK(verify_triangular(g, t).ok);

    // labels 1 and 2 with a nonzero bracket: ratio 2 is not a third root
    LieAlgebra h1 = heisenberg(1);
    TriGrading bad;
    bad.parts.emplace_back(one, Subspace::span({unit_vec(3, 0)}, 3, 6));
    bad.parts.emplace_back(CycloScalar::from_int(2, 6), Subspace::span({unit_vec(3, 1)}, 3, 6));
    bad.parts.emplace_back(CycloScalar::from_int(3, 6), Subspace::span({unit_vec(3, 2)}, 3, 6));
    CHECK(!verify_triangular(h1, bad).ok);

    // single-part abelian is fine
    TriGrading ab;
    ab.parts.emplace_back(CycloScalar::from_int(5, 6), Subspace::full(2, 6));
    CHECK(verify_triangular(LieAlgebra::abelian("C2", 2, 6), ab).ok);
}

TEST_CASE("triangular_to_hexagonal on N(2,3) generator labels") {
    LieAlgebra g = n23();
    CycloScalar w = W(), one = one6();
    TriGrading t;
    t.parts.emplace_back(one, Subspace::span({unit_vec(6, 0)}, 6, 6));
    t.parts.emplace_back(w, Subspace::span({unit_vec(6, 1)}, 6, 6));
    t.parts.emplace_back(w * w, Subspace::span({unit_vec(6, 2)}, 6, 6));
    t.parts.emplace_back(one + w, Subspace::span({unit_vec(6, 3)}, 6, 6));
    t.parts.emplace_back(one + w * w, Subspace::span({unit_vec(6, 4)}, 6, 6));
    t.parts.emplace_back(w + w * w, Subspace::span({unit_vec(6, 5)}, 6, 6));
    auto [hex, trace] = triangular_to_hexagonal(g, t);
    CHECK(hex == n23_standard_grading());
    CHECK(trace.class_representatives.size() == 1);
    CHECK(trace.class_representatives[0] == one);
    CHECK(trace.blocks.size() == 1);
    CHECK(trace.blocks[0].dim() == 6);
}

TEST_CASE("triangular_to_hexagonal, abelian labels {1, 5}") {
    LieAlgebra c2 = LieAlgebra::abelian("C2", 2, 6);
    TriGrading t;
    t.parts.emplace_back(one6(), Subspace::span({unit_vec(2, 0)}, 2, 6));
    t.parts.emplace_back(CycloScalar::from_int(5, 6), Subspace::span({unit_vec(2, 1)}, 2, 6));
    auto [hex, trace] = triangular_to_hexagonal(c2, t);
    CHECK(trace.class_representatives.size() == 2);
    CHECK(trace.blocks.size() == 2);
    CHECK(hex.part(0).dim() == 2);
    CHECK(verify_hexagonal(c2, hex).ok);
}

TEST_CASE("triangular_to_hexagonal separates direct summands") {
    LieAlgebra g = direct_sum(heisenberg(1), heisenberg(1), "h1_plus_h1");
    CycloScalar w = W(), one = one6(), two = CycloScalar::from_int(2, 6);
    TriGrading t;
    t.parts.emplace_back(one, Subspace::span({unit_vec(6, 0)}, 6, 6));
    t.parts.emplace_back(w, Subspace::span({unit_vec(6, 1)}, 6, 6));
    t.parts.emplace_back(one + w, Subspace::span({unit_vec(6, 2)}, 6, 6));
    t.parts.emplace_back(two, Subspace::span({unit_vec(6, 3)}, 6, 6));
    t.parts.emplace_back(two * w, Subspace::span({unit_vec(6, 4)}, 6, 6));
    t.parts.emplace_back(two + two * w, Subspace::span({unit_vec(6, 5)}, 6, 6));
    auto [hex, trace] = triangular_to_hexagonal(g, t);
    CHECK(trace.blocks.size() == 2);
    CHECK(trace.blocks[0] == Subspace::span({unit_vec(6, 0), unit_vec(6, 1), unit_vec(6, 2)}, 6, 6));
    CHECK(trace.blocks[1] == Subspace::span({unit_vec(6, 3), unit_vec(6, 4), unit_vec(6, 5)}, 6, 6));
    for (const Subspace& blk : trace.blocks) CHECK(is_ideal(g, blk));
    CHECK(verify_hexagonal(g, hex).ok);
}

TEST_CASE("derivation_to_grading recovers the standard grading") {
    LieAlgebra g = n23();
    HexGrading h = derivation_to_grading(g, n23_standard_derivation());
    CHECK(h == n23_standard_grading());
}

TEST_CASE("derivation_to_grading on scalar zeta_6 over abelian") {
    LieAlgebra c2 = LieAlgebra::abelian("C2", 2, 6);
    auto z6 = -(W() * W());
    HexGrading h = derivation_to_grading(c2, Matrix::identity(2, 6).scaled(z6));
    // single eigenvalue: everything normalizes to the part labeled 1
    CHECK(h.part(0).dim() == 2);
}

TEST_CASE("derivation_to_grading on the integral h1 derivation") {
    LieAlgebra h1 = heisenberg(1);
    Matrix d(3, 3, 6);
    d.at(0, 1) = CycloScalar::from_int(-1, 6);
    d.at(1, 0) = one6();
    d.at(1, 1) = one6();
    d.at(2, 2) = one6();
    // eigenvalues 1+w (= -w^2), 1+w^2 (= -w), 1: parts of dims 1, 1, 1
    HexGrading h = derivation_to_grading(h1, d);
    unsigned nonzero = 0;
    for (unsigned k = 0; k < 6; ++k)
        if (h.part(k).dim() > 0) {
            CHECK(h.part(k).dim() == 1);
            ++nonzero;
        }
    CHECK(nonzero == 3);
    CHECK(verify_hexagonal(h1, h).ok);
    // factorization oracle: x^2 - x + 1 = (x + w^2)(x + w) over Q(w), so the
    // plane block contributes the eigenvalues -w^2 and -w
    CycloScalar w = W();
    Poly p(6, {one6(), CycloScalar::from_int(-1, 6), one6()});
    CHECK(p.eval(-(w * w)).is_zero());
    CHECK(p.eval(-w).is_zero());
}

TEST_CASE("grading roundtrip is the identity on catalog-style gradings") {
    struct Case {
        LieAlgebra g;
        HexGrading h;
    };
    std::vector<Case> cases;
    cases.push_back({n23(), n23_standard_grading()});
    {
        HexGrading h(3, 6);
        h.set_part(0, Subspace::span({unit_vec(3, 0)}, 3, 6));
        h.set_part(2, Subspace::span({unit_vec(3, 1)}, 3, 6));
        h.set_part(1, Subspace::span({unit_vec(3, 2)}, 3, 6));
        cases.push_back({heisenberg(1), h});
    }
    {
        HexGrading h(5, 6);
        h.set_part(0, Subspace::span({unit_vec(5, 0), unit_vec(5, 1)}, 5, 6));
        h.set_part(2, Subspace::span({unit_vec(5, 2), unit_vec(5, 3)}, 5, 6));
        h.set_part(1, Subspace::span({unit_vec(5, 4)}, 5, 6));
        cases.push_back({heisenberg(2), h});
    }
    for (const auto& c : cases) {
        GradingDerivation gd = grading_to_derivation(c.g, c.h);
        HexGrading back = derivation_to_grading(c.g, gd.matrix);
        CHECK(back == c.h);
    }
}

TEST_CASE("hexagonally graded nonabelian algebras are two-step") {
    LieAlgebra g = n23();
    CHECK(verify_hexagonal(g, n23_standard_grading()).ok);
    CHECK(series(g).nilpotency_class.value() <= 2);
}

TEST_CASE("equivalence on instances: derivation, grading, inverse witness") {
    // starting from each kind of witness on N(2,3), the other two verify
    LieAlgebra g = n23();
    Matrix d = n23_standard_derivation();
    HexGrading h = n23_standard_grading();

    // derivation -> grading, inverse
    CHECK(derivation_to_grading(g, d) == h);
    CHECK(inverse_derivation_check(g, d).ok());

    // grading -> derivation (periodic), inverse
    GradingDerivation gd = grading_to_derivation(g, h);
    CHECK(periodic_order(gd.matrix).order() == 6);
    CHECK(inverse_derivation_check(g, gd.matrix).ok());

    // inverse witness -> periodic here, so grading reconstructs
    InverseCheckResult inv = inverse_derivation_check(g, d);
    REQUIRE(inv.ok());
    CHECK(verify_hexagonal(g, derivation_to_grading(g, *inv.inverse_matrix)).ok);
}
