#include "doctest.h"
#include "hexad/catalog.hpp"
#include "hexad/enumerate.hpp"
#include "hexad/error.hpp"

using namespace hexad;

#ifndef HEXAD_DEFAULT_CATALOG_DIR
#error "catalog dir not configured"
#endif

namespace {

Catalog the_catalog() { return Catalog(HEXAD_DEFAULT_CATALOG_DIR); }

}  // namespace

TEST_CASE("catalog lists the expected entries") {
    Catalog cat = the_catalog();
    auto names = cat.names();
    for (const char* required :
         {"abelian_C4", "heisenberg_1", "heisenberg_3", "N22", "N23", "N24", "N25", "N32", "N33",
          "N42", "N52", "N23_mod_x2x3", "N23_mod_x1x2_x1x3", "N24_mod_x1x2", "N24_mod_x1x2_x3x4",
          "N24_mod_x2x4_x3x4", "N25_mod_x1x2_x3x4", "N24_mod_I5", "filiform_g1", "filiform_g2",
          "decomposable_C2_zeta12", "sl2_adnilpotent_demo", "example_513"}) {
        CAPTURE(required);
        CHECK(std::find(names.begin(), names.end(), required) != names.end());
    }
    CHECK_THROWS_AS(cat.get("no_such_algebra"), Error);
}

TEST_CASE("catalog spot checks") {
    Catalog cat = the_catalog();

    CatalogEntry h1 = cat.get("heisenberg_1");
    CHECK(h1.algebra.dim() == 3);
    REQUIRE(h1.periodic_derivation.has_value());
    REQUIRE(h1.integral_derivation.has_value());
    CHECK(periodic_order(*h1.periodic_derivation).order() == 6);
    CHECK(periodic_order(*h1.integral_derivation).order() == 6);

    CatalogEntry i5 = cat.get("N24_mod_I5");
    CHECK(i5.algebra.dim() == 7);
    REQUIRE(i5.obstruction.has_value());
    CHECK(solve_units(*i5.obstruction).status == UnitStatus::UNSAT);
    CHECK(i5.expected.at("has_periodic_derivation") == false);

    CatalogEntry e513 = cat.get("example_513");
    CHECK(e513.algebra.dim() == 8);
    CHECK(series(e513.algebra).nilpotency_class == 5u);
    REQUIRE(e513.periodic_prederivation.has_value());
    CHECK(periodic_order(*e513.periodic_prederivation).order() == 2);

    CatalogEntry n32 = cat.get("N32");
    REQUIRE(n32.periodic_prederivation.has_value());
    CHECK(periodic_order(*n32.periodic_prederivation).order() == 2);
}

// Full sweep: every entry's expected map re-verifies; the loader has
// already re-verified each stored witness.
TEST_CASE("catalog sweep") {
    Catalog cat = the_catalog();
    for (const std::string& name : cat.names()) {
        CAPTURE(name);
        CatalogEntry e = cat.get(name);
        const LieAlgebra& g = e.algebra;
        const Json& exp = e.expected;
        REQUIRE(!exp.is_null());

        CHECK(g.dim() == exp.at("dim").get<unsigned>());
        CHECK(g.field_order() == exp.at("field_order").get<unsigned>());

        SeriesReport rep = series(g);
        if (exp.at("class").is_null())
            CHECK(!rep.nilpotency_class.has_value());
        else
            CHECK(rep.nilpotency_class == exp.at("class").get<unsigned>());
        if (exp.contains("generator_count") && rep.nilpotency_class)
            CHECK(rep.generator_count == exp.at("generator_count").get<unsigned>());

        if (exp.contains("derivation_space_dim"))
            CHECK(derivation_space(g).dim() == exp.at("derivation_space_dim").get<unsigned>());
        if (exp.contains("prederivation_space_dim"))
            CHECK(prederivation_space(g).dim() ==
                  exp.at("prederivation_space_dim").get<unsigned>());

        if (exp.contains("periodic_derivation_order")) {
            REQUIRE(e.periodic_derivation.has_value());
            PeriodicResult pr = periodic_order(*e.periodic_derivation);
            REQUIRE(pr.periodic());
            CHECK(pr.order() == exp.at("periodic_derivation_order").get<unsigned>());
            // structural consequences of a periodic derivation
            CHECK(rep.nilpotency_class.value() <= 2);
            if (!g.is_abelian()) CHECK(pr.order() % 6 == 0);
            CHECK(inverse_derivation_check(g, *e.periodic_derivation).ok());
        }
        if (exp.contains("integral_derivation_order")) {
            REQUIRE(e.integral_derivation.has_value());
            CHECK(periodic_order(*e.integral_derivation).order() ==
                  exp.at("integral_derivation_order").get<unsigned>());
        }
        if (exp.contains("prederivation_order")) {
            REQUIRE(e.periodic_prederivation.has_value());
            PeriodicResult pr = periodic_order(*e.periodic_prederivation);
            REQUIRE(pr.periodic());
            CHECK(pr.order() == exp.at("prederivation_order").get<unsigned>());
            // odd order forces class <= 2
            if (pr.order() % 2 == 1) CHECK(rep.nilpotency_class.value() <= 2);
            // the eigenbasis of a periodic prederivation is ad-nilpotent of
            // degree 4 (stored witnesses are diagonal: the standard basis)
            if (e.periodic_prederivation->is_diagonal())
                CHECK(pre_engel_witness(g, Matrix::identity(g.dim(), g.field_order()), 4));
        }

        if (e.hex_grading) {
            // roundtrip: grading -> derivation -> grading is the identity
            GradingDerivation gd = grading_to_derivation(g, *e.hex_grading);
            CHECK(derivation_to_grading(g, gd.matrix) == *e.hex_grading);
        }

        if (exp.contains("obstruction_verdict")) {
            REQUIRE(e.obstruction.has_value());
            UnitVerdict v = solve_units(*e.obstruction);
            CHECK(v.status == UnitStatus::UNSAT);
            CHECK(replay_certificate(*e.obstruction, v));
        }

        if (exp.contains("engel_4_identity")) {
            EngelDecision dec = engel_identity(g, 4);
            CHECK(dec.holds == exp.at("engel_4_identity").get<bool>());
            if (!dec.holds && exp.contains("engel_4_violator")) {
                auto coords = exp.at("engel_4_violator").get<std::vector<long>>();
                Vec v = vec_zero(g.dim(), g.field_order());
                for (unsigned k = 0; k < g.dim(); ++k)
                    v[k] = CycloScalar::from_int(coords[k], g.field_order());
                CHECK(vec_eq(*dec.violator, v));
            }
        }
        if (exp.contains("pre_engel_4_standard_basis"))
            CHECK(pre_engel_witness(g, Matrix::identity(g.dim(), g.field_order()), 4) ==
                  exp.at("pre_engel_4_standard_basis").get<bool>());
        if (exp.contains("pre_engel_degree")) {
            REQUIRE(e.pre_engel_basis.has_value());
            CHECK(*e.pre_engel_degree == exp.at("pre_engel_degree").get<unsigned>());
        }
        if (exp.contains("property_f_falsified"))
            CHECK(e.property_f_witness.has_value() ==
                  exp.at("property_f_falsified").get<bool>());

        if (exp.contains("has_periodic_prederivation") &&
            !exp.at("has_periodic_prederivation").get<bool>()) {
            // honesty sampling: inner derivations are prederivations and must
            // never come out periodic
            for (unsigned i = 0; i < g.dim(); ++i) {
                PeriodicResult pr = periodic_order(g.ad_basis(i), 60);
                CHECK(!pr.periodic());
            }
        }

        if (exp.contains("relations") && exp.contains("estimates_ok")) {
            unsigned gens = exp.at("generator_count").get<unsigned>();
            unsigned rel = exp.at("relations").get<unsigned>();
            CHECK(gens + gens * (gens - 1) / 2 - rel == g.dim());
            CHECK(check_estimates(g.dim(), gens, rel).ok() ==
                  exp.at("estimates_ok").get<bool>());
        }

        if (exp.contains("no_scalar_multiple_has_order_6")) {
            REQUIRE(e.periodic_derivation.has_value());
            unsigned ord = g.field_order();
            unsigned N = lcm_u(2, ord);
            unsigned count = 0;
            for (unsigned j = 0; j < N; ++j) {
                CycloScalar lambda = CycloScalar::zeta(ord, j % ord);
                if (N != ord && j >= ord) lambda = -lambda;
                Matrix scaled = e.periodic_derivation->scaled(lambda);
                PeriodicResult pr = periodic_order(scaled);
                REQUIRE(pr.periodic());
                CHECK(pr.order() != 6);
                ++count;
            }
            CHECK(count == 12);
        }
    }
}

TEST_CASE("catalog free-nilpotent entries match the construction") {
    Catalog cat = the_catalog();
    for (auto [name, c, g] : std::vector<std::tuple<std::string, unsigned, unsigned>>{
             {"N22", 2, 2}, {"N23", 2, 3}, {"N24", 2, 4}, {"N25", 2, 5},
             {"N32", 3, 2}, {"N33", 3, 3}, {"N42", 4, 2}, {"N52", 5, 2}}) {
        CAPTURE(name);
        CatalogEntry e = cat.get(name);
        HallBasis hb = free_nilpotent(c, g);
        CHECK(e.algebra.dim() == hb.dim());
        CHECK(e.algebra.brackets() == hb.algebra.brackets());
    }
}

TEST_CASE("catalog JSON round-trips through serialization") {
    Catalog cat = the_catalog();
    CatalogEntry e = cat.get("N24_mod_I5");
    Json j = algebra_to_json(e.algebra);
    LieAlgebra back = algebra_from_json(j);
    CHECK(back.brackets() == e.algebra.brackets());
    CHECK(back.dim() == e.algebra.dim());

    REQUIRE(e.obstruction.has_value());
    UnitSystem s = unit_system_from_json(unit_system_to_json(*e.obstruction));
    CHECK(s.vars == e.obstruction->vars);
    CHECK(s.forms == e.obstruction->forms);
}
