#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "hexad/enumerate.hpp"
#include "hexad/error.hpp"
#include "hexad/json_io.hpp"
#include "hexad/unitsolver.hpp"

using namespace hexad;
using namespace hexad::fixtures;

namespace {

UnitSystem make_system(std::vector<std::string> vars, std::vector<std::vector<long>> forms) {
    UnitSystem s;
    s.vars = std::move(vars);
    s.forms = std::move(forms);
    return s;
}

}  // namespace

TEST_CASE("solve_units: SAT with the equilateral witness") {
    UnitSystem s = make_system({"a", "b"}, {{1, 1}});
    UnitVerdict v = solve_units(s);
    REQUIRE(v.status == UnitStatus::SAT);
    REQUIRE(v.witness.has_value());
    CHECK((*v.witness)[0] == CycloScalar::one(12));
    CHECK((*v.witness)[1] == CycloScalar::omega(12));
    CHECK(replay_certificate(s, v));
}

TEST_CASE("solve_units: three-scalar system is UNSAT") {
    UnitSystem s = make_system({"a", "b", "g"}, {{1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    UnitVerdict v = solve_units(s);
    CHECK(v.status == UnitStatus::UNSAT);
    CHECK(replay_certificate(s, v));
    bool has_exhaust = false;
    for (const auto& st : v.certificate)
        if (st.kind == CertStep::Kind::EXHAUST) has_exhaust = true;
    CHECK(has_exhaust);
}

TEST_CASE("solve_units: dimension-7 obstruction system is UNSAT") {
    // forms a, b, g, b-a, a+g, b-g, a+b-g
    UnitSystem s = make_system(
        {"a", "b", "g"},
        {{-1, 1, 0}, {1, 0, 1}, {0, 1, -1}, {1, 1, -1}});
    UnitVerdict v = solve_units(s);
    CHECK(v.status == UnitStatus::UNSAT);
    CHECK(replay_certificate(s, v));
}

TEST_CASE("solve_units: four scalars with all pair sums is UNSAT") {
    std::vector<std::vector<long>> forms;
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = i + 1; j < 4; ++j) {
            std::vector<long> f(4, 0);
            f[i] = f[j] = 1;
            forms.push_back(std::move(f));
        }
    UnitSystem s = make_system({"a1", "a2", "a3", "a4"}, forms);
    UnitVerdict v = solve_units(s);
    CHECK(v.status == UnitStatus::UNSAT);
    CHECK(replay_certificate(s, v));
}

TEST_CASE("solve_units: |4a + b| >= 3 prunes by TRIANGLE") {
    UnitSystem s = make_system({"a", "b"}, {{4, 1}});
    UnitVerdict v = solve_units(s);
    REQUIRE(v.status == UnitStatus::UNSAT);
    REQUIRE(!v.certificate.empty());
    CHECK(v.certificate[0].kind == CertStep::Kind::TRIANGLE);
    CHECK(v.certificate[0].lower_bound == 3);
    CHECK(replay_certificate(s, v));
}

TEST_CASE("solve_units: the filiform prederivation obstruction is UNSAT") {
    // a, b, 2b-a, 2a-b, a+2b: the first two ratio constraints force a = b,
    // the last forces a = -b
    UnitSystem s = make_system({"a", "b"}, {{-1, 2}, {2, -1}, {1, 2}});
    UnitVerdict v = solve_units(s);
    REQUIRE(v.status == UnitStatus::UNSAT);
    CHECK(replay_certificate(s, v));
    // closes purely by ratio conflict, no exhaustive branching needed
    bool conflict_step = false;
    for (const auto& st : v.certificate)
        if (st.kind == CertStep::Kind::EQUILATERAL && st.form.empty()) conflict_step = true;
    CHECK(conflict_step);
}

TEST_CASE("solve_units: disconnected systems") {
    // {a, b, g, a+b+g} has no two-variable form; the heuristic search finds
    // the even-order witness (1, 1, -1)
    UnitSystem s = make_system({"a", "b", "g"}, {{1, 1, 1}});
    UnitVerdict v = solve_units(s);
    REQUIRE(v.status == UnitStatus::SAT);
    CHECK((*v.witness)[0] == CycloScalar::one(12));
    CHECK((*v.witness)[1] == CycloScalar::one(12));
    CHECK((*v.witness)[2] == -CycloScalar::one(12));
    CHECK(replay_certificate(s, v));

    // 2(a+b+g) can never be a root of unity (it would have modulus-squared
    // 1, but the modulus-squared of twice an algebraic integer is divisible
    // by 4), yet the solver has no rule for it: disconnected search failure
    // reports UNKNOWN, never a false verdict
    UnitSystem u = make_system({"a", "b", "g"}, {{2, 2, 2}});
    UnitVerdict vu = solve_units(u);
    CHECK(vu.status == UnitStatus::UNKNOWN);
    CHECK(!vu.note.empty());
    for (unsigned m : {2u, 6u, 12u}) CHECK(!oracle_enumerate(u, m).sat);
}

TEST_CASE("solve_units: scaling invariance of witnesses") {
    UnitSystem s = make_system({"a", "b"}, {{1, 1}});
    UnitVerdict v = solve_units(s);
    REQUIRE(v.status == UnitStatus::SAT);
    for (unsigned e = 0; e < 12; e += 2) {
        CycloScalar z = CycloScalar::zeta(12, e);
        for (const auto& f : s.all_forms()) {
            CycloScalar val = CycloScalar::zero(12);
            for (size_t k = 0; k < f.size(); ++k)
                if (f[k] != 0)
                    val = val + CycloScalar::from_int(f[k], 12) * (z * (*v.witness)[k]);
            CHECK(val.unit_order().has_value());
        }
    }
}

TEST_CASE("oracle_enumerate agrees with the serial reference") {
    std::vector<UnitSystem> systems = {
        make_system({"a", "b"}, {{1, 1}}),
        make_system({"a", "b"}, {{1, -1}}),
        make_system({"a", "b", "g"}, {{1, 1, 1}}),
        make_system({"a", "b", "g"}, {{1, 0, 1}, {0, 1, 1}, {1, 1, 1}}),
        make_system({"a", "b"}, {{2, -1}}),
    };
    for (const auto& s : systems) {
        for (unsigned m : {1u, 2u, 3u, 4u, 6u}) {
            EnumerateResult fast = oracle_enumerate(s, m);
            EnumerateResult ref = oracle_enumerate_reference(s, m);
            CHECK(fast.sat == ref.sat);
            if (fast.sat) CHECK(*fast.witness_exponents == *ref.witness_exponents);
        }
    }
}

TEST_CASE("oracle: equilateral lemma for all m <= 36") {
    // for every pair of m-th roots whose sum is a unit, the ratio is a
    // primitive third root of unity
    for (unsigned m = 1; m <= 36; ++m) {
        unsigned N = lcm_u(m, 6);
        CycloIntContext ctx(N);
        unsigned step = N / m;
        for (unsigned a = 0; a < m; ++a) {
            for (unsigned b = 0; b < m; ++b) {
                std::vector<long> sum(ctx.degree(), 0);
                const auto& ra = ctx.root(a * step);
                const auto& rb = ctx.root(b * step);
                for (unsigned k = 0; k < ctx.degree(); ++k) sum[k] = ra[k] + rb[k];
                if (!ctx.unit_exponent(sum)) continue;
                unsigned ratio = ((b + m - a) % m) * step;  // exponent of beta/alpha
                CHECK((ratio == N / 3 || ratio == 2 * N / 3));
            }
        }
    }
}

TEST_CASE("oracle: three- and four-scalar corollaries for all m <= 24") {
    UnitSystem three = make_system({"a", "b", "g"}, {{1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    for (unsigned m = 1; m <= 24; ++m) CHECK(!oracle_enumerate(three, m).sat);

    std::vector<std::vector<long>> forms;
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = i + 1; j < 4; ++j) {
            std::vector<long> f(4, 0);
            f[i] = f[j] = 1;
            forms.push_back(std::move(f));
        }
    UnitSystem four = make_system({"a1", "a2", "a3", "a4"}, forms);
    for (unsigned m = 1; m <= 24; ++m) CHECK(!oracle_enumerate(four, m).sat);
}

TEST_CASE("oracle: rhombus lemma parity for m <= 21") {
    UnitSystem s = make_system({"a", "b", "g"}, {{1, 1, 1}});
    for (unsigned m = 1; m <= 21; ++m) {
        EnumerateResult r = oracle_enumerate(s, m);
        CHECK(r.sat == (m % 2 == 0));
    }
    // even witness: alpha = beta = 1, gamma = -1
    EnumerateResult r2 = oracle_enumerate(s, 2);
    REQUIRE(r2.sat);
    CHECK(*r2.witness_exponents == std::vector<unsigned>{0, 0, 1});
}

TEST_CASE("solver agrees with the oracle on random small systems") {
    std::mt19937_64 rng(20240612u);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<size_t> nvars(1, 4);
    std::uniform_int_distribution<size_t> nforms(1, 5);
    unsigned checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        size_t nv = nvars(rng);
        UnitSystem s;
        for (size_t v = 0; v < nv; ++v) s.vars.push_back("v" + std::to_string(v));
        size_t nf = nforms(rng);
        for (size_t f = 0; f < nf; ++f) {
            std::vector<long> form(nv, 0);
            for (auto& c : form) c = coef(rng);
            s.forms.push_back(std::move(form));
        }
        UnitVerdict v = solve_units(s);
        if (v.status == UnitStatus::UNSAT) {
            // scan depth tiered by variable count to keep the grid fast
            unsigned depth = nv <= 2 ? 36 : (nv == 3 ? 24 : 12);
            for (unsigned m = 1; m <= depth; ++m) CHECK(!oracle_enumerate(s, m).sat);
            CHECK(replay_certificate(s, v));
            ++checked;
        } else if (v.status == UnitStatus::SAT) {
            CHECK(replay_certificate(s, v));
            // the witness lives in mu_12, so the mu_12 oracle must agree
            CHECK(oracle_enumerate(s, 12).sat);
            ++checked;
        }
    }
    CHECK(checked >= 200);
}

TEST_CASE("solver output is deterministic across runs") {
    UnitSystem s = make_system(
        {"a", "b", "g"},
        {{-1, 1, 0}, {1, 0, 1}, {0, 1, -1}, {1, 1, -1}});
    UnitVerdict v1 = solve_units(s);
    UnitVerdict v2 = solve_units(s);
    CHECK(unit_verdict_to_json(s, v1).dump() == unit_verdict_to_json(s, v2).dump());
}

TEST_CASE("eigenform families validate as derivations / prederivations") {
    // dimension-7 obstruction family: positions (g, b-g, a, b-a, b, a+g, a+b-g)
    LieAlgebra g7 = n24_mod_i5();
    UnitSystem fam = make_system({"a", "b", "g"}, {});
    std::vector<std::vector<long>> pos = {{0, 0, 1}, {0, 1, -1}, {1, 0, 0}, {-1, 1, 0},
                                          {0, 1, 0}, {1, 0, 1},  {1, 1, -1}};
    CHECK(eigenform_family_check(g7, fam, pos, MapKind::derivation));
    // as a set these are the stated seven forms
    std::vector<std::vector<long>> stated = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 1, 0},
                                             {1, 0, 1}, {0, 1, -1}, {1, 1, -1}};
    auto sorted = [](std::vector<std::vector<long>> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(pos) == sorted(stated));

    // filiform g2 prederivation family (a, b, 2b-a, 2a+b, a+2b)
    LieAlgebra g2 = filiform_g2();
    UnitSystem fam2 = make_system({"a", "b"}, {});
    std::vector<std::vector<long>> pos2 = {{1, 0}, {0, 1}, {-1, 2}, {2, 1}, {1, 2}};
    CHECK(eigenform_family_check(g2, fam2, pos2, MapKind::prederivation));
    // the printed sign variant 2a-b fails: the triple identity pins 2a+b
    std::vector<std::vector<long>> pos2bad = {{1, 0}, {0, 1}, {-1, 2}, {2, -1}, {1, 2}};
    CHECK(!eigenform_family_check(g2, fam2, pos2bad, MapKind::prederivation));

    // dim-8 example prederivation family
    LieAlgebra g513 = example_513();
    UnitSystem fam3 = make_system({"a", "b", "g"}, {});
    std::vector<std::vector<long>> pos3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 1, 0},
                                           {1, 2, 0}, {1, 1, 1}, {0, 2, 1}, {2, 3, 0}};
    CHECK(eigenform_family_check(g513, fam3, pos3, MapKind::prederivation));
}

TEST_CASE("guards") {
    UnitSystem s;
    for (int i = 0; i < 9; ++i) s.vars.push_back("v" + std::to_string(i));
    CHECK_THROWS_AS(solve_units(s), GuardError);
    UnitSystem big = make_system({"a", "b", "c", "d", "e"}, {});
    CHECK_THROWS_AS(oracle_enumerate(big, 64), GuardError);
}
