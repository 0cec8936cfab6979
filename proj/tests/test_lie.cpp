#include "doctest.h"
#include "fixtures.hpp"
#include "hexad/error.hpp"
#include "hexad/lie.hpp"

using namespace hexad;
using namespace hexad::fixtures;

TEST_CASE("make_algebra validates structure") {
    LieAlgebra h1 = heisenberg(1);
    CHECK(h1.dim() == 3);

    LieAlgebra g = n24_mod_i5();
    CHECK(g.dim() == 7);
    CHECK(vec_eq(g.bracket_basis(2, 3), vec_scale(-CycloScalar::one(6), unit_vec(7, 4))));

    // [x1,x2]=x3, [x1,x3]=x1 violates Jacobi: direct triple-sum oracle on
    // (1,2,3) gives [[x1,x2],x3] + [[x2,x3],x1] + [[x3,x1],x2]
    //             = [x3,x3] + 0 + [-x1,x2] = -x3, nonzero.
    LieAlgebra::BracketMap bad;
    bad[{0, 1}] = unit_vec(3, 2);
    bad[{0, 2}] = unit_vec(3, 0);
    CHECK_THROWS_AS(LieAlgebra::make("bad", 3, 6, std::move(bad)), StructureError);

    LieAlgebra::BracketMap oob;
    oob[{1, 0}] = unit_vec(3, 2);
    CHECK_THROWS_AS(LieAlgebra::make("oob", 3, 6, std::move(oob)), StructureError);
}

TEST_CASE("bracket bilinearity") {
    LieAlgebra g = n23();
    // [x1, x2] = x4
    CHECK(vec_eq(g.bracket(unit_vec(6, 0), unit_vec(6, 1)), unit_vec(6, 3)));
    // [u, u] = 0
    Vec u = vec_add(unit_vec(6, 0), vec_scale(CycloScalar::omega(6), unit_vec(6, 2)));
    CHECK(vec_is_zero(g.bracket(u, u)));
    // [x1+x2, x3] = x5 + x6
    CHECK(vec_eq(g.bracket(vec_add(unit_vec(6, 0), unit_vec(6, 1)), unit_vec(6, 2)),
                 vec_add(unit_vec(6, 4), unit_vec(6, 5))));
    // bilinearity on a random-ish combination, expanded by hand
    Vec a = vec_add(unit_vec(6, 0), vec_scale(CycloScalar::from_int(2, 6), unit_vec(6, 1)));
    Vec lhs = g.bracket(a, unit_vec(6, 2));
    Vec rhs = vec_add(g.bracket(unit_vec(6, 0), unit_vec(6, 2)),
                      vec_scale(CycloScalar::from_int(2, 6),
                                g.bracket(unit_vec(6, 1), unit_vec(6, 2))));
    CHECK(vec_eq(lhs, rhs));
}

TEST_CASE("series") {
    SeriesReport r23 = series(n23());
    CHECK(r23.nilpotency_class == 2u);
    CHECK(r23.generator_count == 3);
    CHECK(r23.center.dim() == 3);

    SeriesReport r513 = series(example_513());
    CHECK(r513.nilpotency_class == 5u);
    std::vector<unsigned> dims;
    for (const auto& t : r513.terms) dims.push_back(t.dim());
    CHECK(dims == std::vector<unsigned>{8, 6, 5, 3, 1, 0});

    SeriesReport rab = series(LieAlgebra::abelian("C4", 4, 6));
    CHECK(rab.nilpotency_class == 1u);
    CHECK(rab.center.dim() == 4);
    CHECK(rab.generator_count == 4);

    // sl2 is not nilpotent: the series stabilizes at the whole algebra
    SeriesReport rsl2 = series(sl2_demo());
    CHECK(!rsl2.nilpotency_class.has_value());
}

TEST_CASE("series terms are ideals and bracket into the next term") {
    for (const LieAlgebra& g : {n23(), example_513(), filiform_g2(), n32()}) {
        SeriesReport rep = series(g);
        for (size_t k = 0; k + 1 < rep.terms.size(); ++k) {
            CHECK(is_ideal(g, rep.terms[k]));
            // [g, term_k] <= term_{k+1}
            for (unsigned i = 0; i < g.dim(); ++i)
                for (const Vec& b : rep.terms[k].basis())
                    CHECK(rep.terms[k + 1].contains(g.bracket(unit_vec(g.dim(), i), b)));
        }
    }
}

TEST_CASE("quotient") {
    LieAlgebra g = n23();
    // N(2,3) / span([x2,x3]) has dimension 5
    Subspace i1 = Subspace::span({unit_vec(6, 5)}, 6, 6);
    auto [q1, p1] = quotient(g, i1, "N23_mod_x2x3");
    CHECK(q1.dim() == 5);
    CHECK(series(q1).nilpotency_class == 2u);

    // g / g is the zero algebra
    auto [q2, p2] = quotient(g, Subspace::full(6, 6), "zero");
    CHECK(q2.dim() == 0);

    // not an ideal: span(x1) in N(2,3)
    CHECK_THROWS_AS(quotient(g, Subspace::span({unit_vec(6, 0)}, 6, 6), "no"), StructureError);
}

TEST_CASE("quotient projection is a Lie homomorphism") {
    LieAlgebra g = example_513();
    // the center span(x8) is an ideal
    Subspace z = Subspace::span({unit_vec(8, 7)}, 8, 6);
    auto [q, p] = quotient(g, z, "q513");
    CHECK(q.dim() == 7);
    for (unsigned i = 0; i < 8; ++i) {
        for (unsigned j = i + 1; j < 8; ++j) {
            Vec lhs = p.apply(g.bracket_basis(i, j));
            Vec rhs = q.bracket(p.apply(unit_vec(8, i)), p.apply(unit_vec(8, j)));
            CHECK(vec_eq(lhs, rhs));
        }
    }
}

TEST_CASE("direct sum") {
    LieAlgebra h1 = heisenberg(1);
    LieAlgebra c2 = LieAlgebra::abelian("C2", 2, 6);
    LieAlgebra s = direct_sum(h1, c2, "h1_plus_C2");
    CHECK(s.dim() == 5);
    CHECK(commutator_subalgebra(s).dim() == 1);
    CHECK(series(s).nilpotency_class == 2u);

    LieAlgebra zero = LieAlgebra::abelian("0", 0, 6);
    LieAlgebra same = direct_sum(zero, h1, "0_plus_h1");
    CHECK(same.dim() == h1.dim());
    CHECK(same.brackets() == h1.brackets());

    CHECK_THROWS_AS(direct_sum(h1, LieAlgebra::abelian("C1", 1, 4), "x"), FieldOrderError);
}

TEST_CASE("ad matrices") {
    LieAlgebra g = filiform_g1();
    Matrix ad1 = g.ad_basis(0);
    // ad(x1): x2 -> x3 -> x4 -> x5 -> 0
    CHECK(vec_eq(ad1.apply(unit_vec(5, 1)), unit_vec(5, 2)));
    CHECK(vec_eq(ad1.apply(unit_vec(5, 2)), unit_vec(5, 3)));
    CHECK(ad1.pow(4).is_zero());
    CHECK(!ad1.pow(3).is_zero());
}
