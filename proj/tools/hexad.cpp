// hexad: exact certificates for periodic derivations and prederivations of
// finite-dimensional nilpotent Lie algebras.
//
// Exit codes: 0 verified / SAT / true, 1 refuted / UNSAT / false / absent,
// 2 usage error or UNKNOWN.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "hexad/acceptance.hpp"
#include "hexad/enumerate.hpp"
#include "hexad/error.hpp"

using namespace hexad;

namespace {

struct Report {
    Json data = Json::object();
    std::string verdict;
    int exit_code = 0;
    bool json_mode = false;
    std::vector<std::string> lines;

    void line(const std::string& s) { lines.push_back(s); }
    void set(const std::string& key, const Json& value) { data[key] = value; }

    int finish(const std::string& command, double seconds) const {
        if (json_mode) {
            Json out = data;
            out["command"] = command;
            out["verdict"] = verdict;
            out["elapsed_seconds"] = seconds;
            out["exit_code"] = exit_code;
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& s : lines) std::cout << s << "\n";
            std::cout << "verdict: " << verdict << "\n";
        }
        return exit_code;
    }
};

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += " ";
        s += argv[i];
    }
    return s;
}

Matrix load_map(const std::string& path, const LieAlgebra& g) {
    auto [name, m] = linear_map_from_json(load_json_file(path), g.field_order());
    if (m.rows() != g.dim() || m.cols() != g.dim())
        throw Error("map in " + path + " does not match the algebra dimension");
    return m;
}

Subspace load_ideal(const std::string& path, const HallBasis& f) {
    Json j = load_json_file(path.c_str());
    auto vectors = vectors_from_json(j, f.algebra.field_order());
    unsigned deg2 = f.generators * (f.generators - 1) / 2;
    std::vector<Vec> lifted;
    for (Vec& v : vectors) {
        if (v.size() == f.dim()) {
            lifted.push_back(std::move(v));
        } else if (v.size() == deg2) {
            Vec w = vec_zero(f.dim(), f.algebra.field_order());
            for (unsigned k = 0; k < deg2; ++k) w[f.generators + k] = v[k];
            lifted.push_back(std::move(w));
        } else {
            throw Error("ideal vectors must have length " + std::to_string(f.dim()) +
                        " (full) or " + std::to_string(deg2) + " (degree-2 coordinates)");
        }
    }
    return Subspace::span(lifted, f.dim(), f.algebra.field_order());
}

std::string series_text(const SeriesReport& rep) {
    std::string s = "lower central series dims:";
    for (const auto& t : rep.terms) s += " " + std::to_string(t.dim());
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates for periodic derivations of nilpotent Lie algebras"};
    app.require_subcommand(1);

    bool json_mode = false;
    unsigned long seed = 0;
    unsigned bound = 720;
    unsigned field_order = 6;
    std::string catalog_dir = Catalog::default_root();
    app.add_flag("--json", json_mode, "emit a JSON report");
    app.add_option("--seed", seed, "seed for sampling checks (default 0)");
    app.add_option("--bound", bound, "periodicity scan bound (default 720)");
    app.add_option("--field-order", field_order, "cyclotomic field order for new algebras");
    app.add_option("--catalog", catalog_dir, "catalog data directory");

    std::string algebra_ref, map_file, grading_file, ideal_file, system_file, witness_file,
        presentation_file, family_file, basis_file, name_arg, tri_file, candidates_file;
    unsigned m_arg = 4, k_arg = 1, cls_arg = 2, gens_arg = 3, dim_arg = 0, relations_arg = 0;
    unsigned samples_arg = 50;
    bool use_reference = false;

    // algebra
    auto* alg = app.add_subcommand("algebra", "structure constants, series, quotients");
    auto* alg_show = alg->add_subcommand("show", "print an algebra");
    alg_show->add_option("--algebra", algebra_ref)->required();
    auto* alg_check = alg->add_subcommand("check", "validate the Jacobi identity");
    alg_check->add_option("--algebra", algebra_ref)->required();
    auto* alg_series = alg->add_subcommand("series", "lower central series and center");
    alg_series->add_option("--algebra", algebra_ref)->required();
    auto* alg_quot = alg->add_subcommand("quotient", "quotient by an ideal");
    alg_quot->add_option("--algebra", algebra_ref)->required();
    alg_quot->add_option("--ideal", ideal_file, "vectors JSON")->required();
    alg_quot->add_option("--name", name_arg);

    // deriv / prederiv
    auto* dv = app.add_subcommand("deriv", "derivation space, membership, periodicity");
    auto* dv_space = dv->add_subcommand("space", "basis of the derivation algebra");
    dv_space->add_option("--algebra", algebra_ref)->required();
    auto* dv_check = dv->add_subcommand("check", "is the map a derivation");
    dv_check->add_option("--algebra", algebra_ref)->required();
    dv_check->add_option("--map", map_file)->required();
    auto* dv_per = dv->add_subcommand("periodic", "certify the periodic order");
    dv_per->add_option("--algebra", algebra_ref)->required();
    dv_per->add_option("--map", map_file)->required();
    auto* dv_inv = dv->add_subcommand("inverse-check", "invertible with derivation inverse");
    dv_inv->add_option("--algebra", algebra_ref)->required();
    dv_inv->add_option("--map", map_file)->required();
    auto* dv_ext = dv->add_subcommand("extend-order", "order 6 -> order 6k");
    dv_ext->add_option("--algebra", algebra_ref)->required();
    dv_ext->add_option("--map", map_file)->required();
    dv_ext->add_option("--k", k_arg)->required();

    auto* pv = app.add_subcommand("prederiv", "prederivation space, membership, periodicity");
    auto* pv_space = pv->add_subcommand("space", "basis of the prederivation space");
    pv_space->add_option("--algebra", algebra_ref)->required();
    auto* pv_check = pv->add_subcommand("check", "is the map a prederivation");
    pv_check->add_option("--algebra", algebra_ref)->required();
    pv_check->add_option("--map", map_file)->required();
    auto* pv_per = pv->add_subcommand("periodic", "certify the periodic order");
    pv_per->add_option("--algebra", algebra_ref)->required();
    pv_per->add_option("--map", map_file)->required();

    // grading
    auto* gr = app.add_subcommand("grading", "sixth-root gradings");
    auto* gr_verify = gr->add_subcommand("verify", "check a hexagonal grading");
    gr_verify->add_option("--algebra", algebra_ref)->required();
    gr_verify->add_option("--grading", grading_file)->required();
    auto* gr_from = gr->add_subcommand("from-deriv", "eigenspace grading of a periodic derivation");
    gr_from->add_option("--algebra", algebra_ref)->required();
    gr_from->add_option("--map", map_file)->required();
    auto* gr_to = gr->add_subcommand("to-deriv", "block-scalar derivation of a grading");
    gr_to->add_option("--algebra", algebra_ref)->required();
    gr_to->add_option("--grading", grading_file)->required();
    auto* gr_tri = gr->add_subcommand("tri-to-hex", "convert a triangular grading");
    gr_tri->add_option("--algebra", algebra_ref)->required();
    gr_tri->add_option("--tri", tri_file)->required();

    // freenil
    auto* fn = app.add_subcommand("freenil", "free-nilpotent algebras and partitions");
    auto* fn_build = fn->add_subcommand("build", "construct N(c, g)");
    fn_build->add_option("--class", cls_arg)->required();
    fn_build->add_option("--gens", gens_arg)->required();
    auto* fn_ideal = fn->add_subcommand("ideal", "validate a partitioning ideal");
    fn_ideal->add_option("--gens", gens_arg)->required();
    fn_ideal->add_option("--presentation", presentation_file)->required();
    auto* fn_quot = fn->add_subcommand("quotient", "quotient with its induced grading");
    fn_quot->add_option("--gens", gens_arg)->required();
    fn_quot->add_option("--presentation", presentation_file)->required();
    fn_quot->add_option("--name", name_arg);
    auto* fn_search = fn->add_subcommand("search-partition", "search homogeneous partitions");
    fn_search->add_option("--gens", gens_arg)->required();
    fn_search->add_option("--ideal", ideal_file)->required();
    fn_search->add_option("--name", name_arg);
    auto* fn_est = fn->add_subcommand("estimates", "dimension and relation estimates");
    fn_est->add_option("--dim", dim_arg)->required();
    fn_est->add_option("--gens", gens_arg)->required();
    fn_est->add_option("--relations", relations_arg)->required();

    // engel
    auto* en = app.add_subcommand("engel", "Engel identities and property F");
    auto* en_id = en->add_subcommand("identity", "decide ad(x)^m = 0 for all x");
    en_id->add_option("--algebra", algebra_ref)->required();
    en_id->add_option("--m", m_arg)->required();
    auto* en_wit = en->add_subcommand("witness", "ad-nilpotent basis check");
    en_wit->add_option("--algebra", algebra_ref)->required();
    en_wit->add_option("--m", m_arg)->required();
    en_wit->add_option("--basis", basis_file, "basis matrix JSON (default standard)");
    auto* en_span = en->add_subcommand("span", "verified lower bound on dim E_m");
    en_span->add_option("--algebra", algebra_ref)->required();
    en_span->add_option("--m", m_arg)->required();
    en_span->add_option("--candidates", candidates_file, "vectors JSON pool");
    auto* en_ff = en->add_subcommand("falsify-f", "verify a property-F falsification witness");
    en_ff->add_option("--algebra", algebra_ref)->required();
    en_ff->add_option("--witness", witness_file)->required();

    // units
    auto* un = app.add_subcommand("units", "root-of-unity form systems");
    auto* un_solve = un->add_subcommand("solve", "decide with certificates");
    un_solve->add_option("--system", system_file)->required();
    auto* un_oracle = un->add_subcommand("oracle", "exhaustive mu_m scan");
    un_oracle->add_option("--system", system_file)->required();
    un_oracle->add_option("--m", m_arg)->required();
    un_oracle->add_flag("--reference", use_reference, "use the serial reference implementation");
    auto* un_fam = un->add_subcommand("family-check", "validate an eigenvalue family");
    un_fam->add_option("--algebra", algebra_ref)->required();
    un_fam->add_option("--family", family_file)->required();
    un_fam->add_option("--samples", samples_arg);

    // catalog
    auto* ct = app.add_subcommand("catalog", "named algebras and witnesses");
    auto* ct_list = ct->add_subcommand("list", "list entries");
    auto* ct_get = ct->add_subcommand("get", "load and re-verify one entry");
    ct_get->add_option("--name", name_arg)->required();

    auto* vp = app.add_subcommand("verify-paper", "run the full acceptance suite");

    CLI11_PARSE(app, argc, argv);

    Report rep;
    rep.json_mode = json_mode;
    auto started = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    };

    try {
        Catalog catalog(catalog_dir);
        auto resolve = [&](const std::string& ref) { return resolve_algebra(ref, catalog); };

        if (*alg_show) {
            LieAlgebra g = resolve(algebra_ref);
            rep.set("algebra", algebra_to_json(g));
            rep.line(g.name() + ": dim " + std::to_string(g.dim()) + " over Q(zeta_" +
                     std::to_string(g.field_order()) + "), " +
                     std::to_string(g.brackets().size()) + " bracket entries");
            rep.verdict = "ok";
        } else if (*alg_check) {
            try {
                LieAlgebra g = resolve(algebra_ref);
                rep.set("dim", g.dim());
                rep.verdict = "valid";
            } catch (const StructureError& e) {
                rep.verdict = std::string("invalid: ") + e.what();
                rep.exit_code = 1;
            }
        } else if (*alg_series) {
            LieAlgebra g = resolve(algebra_ref);
            SeriesReport sr = series(g);
            rep.line(series_text(sr));
            Json dims = Json::array();
            for (const auto& t : sr.terms) dims.push_back(t.dim());
            rep.set("series_dims", dims);
            rep.set("nilpotency_class",
                    sr.nilpotency_class ? Json(*sr.nilpotency_class) : Json(nullptr));
            rep.set("center_dim", sr.center.dim());
            rep.set("generator_count", sr.generator_count);
            rep.line(sr.nilpotency_class
                         ? "nilpotency class " + std::to_string(*sr.nilpotency_class)
                         : std::string("not nilpotent"));
            rep.verdict = "ok";
        } else if (*alg_quot) {
            LieAlgebra g = resolve(algebra_ref);
            auto vectors = vectors_from_json(load_json_file(ideal_file), g.field_order());
            Subspace ideal = Subspace::span(vectors, g.dim(), g.field_order());
            try {
                auto [q, proj] = quotient(g, ideal, name_arg.empty() ? g.name() + "_quot" : name_arg);
                rep.set("quotient", algebra_to_json(q));
                rep.set("projection", matrix_to_json(proj));
                rep.line("quotient dimension " + std::to_string(q.dim()));
                rep.verdict = "ok";
            } catch (const StructureError& e) {
                rep.verdict = std::string("refused: ") + e.what();
                rep.exit_code = 1;
            }
        } else if (*dv_space || *pv_space) {
            LieAlgebra g = resolve(algebra_ref);
            Subspace sp = *dv_space ? derivation_space(g) : prederivation_space(g);
            rep.set("dimension", sp.dim());
            Json basis = Json::array();
            for (const Vec& b : sp.basis())
                basis.push_back(matrix_to_json(Matrix::from_vectorized(b, g.dim(), g.dim())));
            rep.set("basis", basis);
            rep.line("space dimension " + std::to_string(sp.dim()));
            rep.verdict = "ok";
        } else if (*dv_check || *pv_check) {
            LieAlgebra g = resolve(algebra_ref);
            Matrix m = load_map(map_file, g);
            MapKind kind = *dv_check ? MapKind::derivation : MapKind::prederivation;
            MemberResult r = is_member(g, m, kind);
            if (r.ok) {
                rep.verdict = *dv_check ? "derivation" : "prederivation";
            } else {
                std::string viol = "violates on (" + std::to_string(r.violation[0]) + "," +
                                   std::to_string(r.violation[1]);
                if (!r.is_pair) viol += "," + std::to_string(r.violation[2]);
                viol += ")";
                rep.set("violation", viol);
                rep.verdict = "not a " + std::string(*dv_check ? "derivation" : "prederivation") +
                              "; " + viol;
                rep.exit_code = 1;
            }
        } else if (*dv_per || *pv_per) {
            LieAlgebra g = resolve(algebra_ref);
            Matrix m = load_map(map_file, g);
            MapKind kind = *dv_per ? MapKind::derivation : MapKind::prederivation;
            MemberResult mr = is_member(g, m, kind);
            if (!mr.ok) {
                rep.verdict = std::string("map is not a ") +
                              (*dv_per ? "derivation" : "prederivation");
                rep.exit_code = 1;
            } else {
                PeriodicResult pr = periodic_order(m, bound);
                rep.set("min_poly", pr.min_poly.str());
                if (pr.periodic()) {
                    rep.set("order", pr.order());
                    rep.set("semisimple", true);
                    rep.line("periodic of order " + std::to_string(pr.order()));
                    rep.line("minimal polynomial " + pr.min_poly.str());
                    rep.verdict = "periodic";
                } else {
                    rep.verdict = pr.failure == PeriodicFailure::non_semisimple
                                      ? "not periodic: minimal polynomial is not squarefree"
                                      : "not periodic within bound " + std::to_string(bound);
                    rep.exit_code = 1;
                }
            }
        } else if (*dv_inv) {
            LieAlgebra g = resolve(algebra_ref);
            Matrix m = load_map(map_file, g);
            InverseCheckResult r = inverse_derivation_check(g, m);
            rep.set("invertible", r.invertible);
            rep.set("inverse_is_derivation", r.inverse_is_derivation);
            if (r.inverse_matrix) rep.set("inverse", matrix_to_json(*r.inverse_matrix));
            rep.verdict = r.ok() ? "inverse is a derivation"
                                 : (r.invertible ? "inverse is not a derivation" : "singular");
            rep.exit_code = r.ok() ? 0 : 1;
        } else if (*dv_ext) {
            LieAlgebra g = resolve(algebra_ref);
            Matrix m = load_map(map_file, g);
            auto [lifted, dk] = extend_order(g, m, k_arg);
            rep.set("field_order", lifted.field_order());
            rep.set("order", periodic_order(dk).order());
            rep.set("map", linear_map_to_json(lifted.name(), dk));
            rep.line("order " + std::to_string(6 * k_arg) + " over Q(zeta_" +
                     std::to_string(lifted.field_order()) + ")");
            rep.verdict = "ok";
        } else if (*gr_verify) {
            LieAlgebra g = resolve(algebra_ref);
            HexGrading h =
                grading_from_json(load_json_file(grading_file), g.dim(), g.field_order());
            VerifyReport vr = verify_hexagonal(g, h);
            for (const auto& v : vr.violations) rep.line(v);
            rep.set("violations", vr.violations);
            rep.verdict = vr.ok ? "valid hexagonal grading" : "invalid";
            rep.exit_code = vr.ok ? 0 : 1;
        } else if (*gr_from) {
            LieAlgebra g = resolve(algebra_ref);
            Matrix m = load_map(map_file, g);
            try {
                HexGrading h = derivation_to_grading(g, m);
                rep.set("grading", grading_to_json(g.name(), h));
                rep.verdict = "ok";
            } catch (const StructureError& e) {
                rep.verdict = std::string("refused: ") + e.what();
                rep.exit_code = 1;
            }
        } else if (*gr_to) {
            LieAlgebra g = resolve(algebra_ref);
            HexGrading h =
                grading_from_json(load_json_file(grading_file), g.dim(), g.field_order());
            GradingDerivation gd = grading_to_derivation(g, h);
            rep.set("map", linear_map_to_json(g.name(), gd.matrix));
            rep.set("order", gd.order);
            rep.set("degenerate", gd.degenerate);
            rep.line("order " + std::to_string(gd.order) +
                     (gd.degenerate ? " (degenerate grading)" : ""));
            rep.verdict = "ok";
        } else if (*gr_tri) {
            LieAlgebra g = resolve(algebra_ref);
            TriGrading t = tri_grading_from_json(load_json_file(tri_file), g.dim(), g.field_order());
            try {
                auto [hex, trace] = triangular_to_hexagonal(g, t);
                rep.set("grading", grading_to_json(g.name(), hex));
                Json blocks = Json::array();
                for (const auto& b : trace.blocks) blocks.push_back(b.dim());
                rep.set("block_dims", blocks);
                Json reps = Json::array();
                for (const auto& r : trace.class_representatives) reps.push_back(r.str());
                rep.set("class_representatives", reps);
                rep.line(std::to_string(trace.blocks.size()) + " label classes");
                rep.verdict = "ok";
            } catch (const StructureError& e) {
                rep.verdict = std::string("refused: ") + e.what();
                rep.exit_code = 1;
            }
        } else if (*fn_build) {
            HallBasis hb = free_nilpotent(cls_arg, gens_arg, field_order);
            rep.set("algebra", algebra_to_json(hb.algebra));
            Json words = Json::array();
            for (const auto& w : hb.words) {
                Json jw = Json::array();
                for (unsigned i : w) jw.push_back(i + 1);
                words.push_back(jw);
            }
            rep.set("words", words);
            rep.line("dim " + std::to_string(hb.dim()));
            rep.verdict = "ok";
        } else if (*fn_ideal || *fn_quot) {
            HallBasis f = free_nilpotent(2, gens_arg, field_order);
            PresentationData pd =
                presentation_from_json(load_json_file(presentation_file), field_order);
            try {
                FreePresentation p = build_partition_ideal(f, pd.partition, pd.cross_vectors);
                rep.set("ideal_dim", p.ideal.dim());
                if (*fn_quot) {
                    auto [q, h] = presentation_to_grading(
                        f, p, name_arg.empty() ? "quotient" : name_arg);
                    rep.set("quotient", algebra_to_json(q));
                    rep.set("grading", grading_to_json(q.name(), h));
                    rep.line("quotient dimension " + std::to_string(q.dim()));
                }
                rep.verdict = "ok";
            } catch (const StructureError& e) {
                rep.verdict = std::string("refused: ") + e.what();
                rep.exit_code = 1;
            }
        } else if (*fn_search) {
            HallBasis f = free_nilpotent(2, gens_arg, field_order);
            Subspace ideal = load_ideal(ideal_file, f);
            PartitionSearchResult r =
                partition_search(f, ideal, name_arg.empty() ? "quotient" : name_arg);
            rep.set("partitions_tried", r.partitions_tried);
            if (r.found()) {
                PresentationData pd;
                pd.generators = gens_arg;
                pd.partition = r.presentation->partition;
                unsigned deg2 = gens_arg * (gens_arg - 1) / 2;
                for (unsigned c = 0; c < 3; ++c)
                    for (const Vec& v : r.presentation->cross_parts[c].basis())
                        pd.cross_vectors[c].push_back(
                            Vec(v.begin() + gens_arg, v.begin() + gens_arg + deg2));
                rep.set("presentation", presentation_to_json(pd));
                rep.set("quotient", algebra_to_json(*r.quotient));
                rep.set("grading", grading_to_json(r.quotient->name(), *r.grading));
                rep.verdict = "found";
            } else {
                rep.verdict =
                    "not found over the given generators (not a proof of non-existence; "
                    "changes of generators are not searched)";
                rep.exit_code = 1;
            }
        } else if (*fn_est) {
            EstimateReport er = check_estimates(dim_arg, gens_arg, relations_arg);
            rep.set("n_within", er.n_within);
            rep.set("r_within", er.r_within);
            rep.set("n_upper", rat_str(er.n_upper));
            rep.set("r_lower", rat_str(er.r_lower));
            rep.set("r_upper", rat_str(er.r_upper));
            rep.line("g <= n <= g^2/3 + g: " + std::to_string(er.generators) + " <= " +
                     std::to_string(er.n) + " <= " + rat_str(er.n_upper) +
                     (er.n_within ? " holds" : " fails"));
            rep.line("g(g-3)/6 <= r <= g(g-1)/2: " + rat_str(er.r_lower) + " <= " +
                     std::to_string(er.relations) + " <= " + rat_str(er.r_upper) +
                     (er.r_within ? " holds" : " fails"));
            rep.verdict = er.ok() ? "estimates hold" : "estimates fail";
            rep.exit_code = er.ok() ? 0 : 1;
        } else if (*en_id) {
            LieAlgebra g = resolve(algebra_ref);
            EngelDecision dec = engel_identity(g, m_arg, seed);
            if (dec.holds) {
                rep.verdict = "identity holds";
            } else {
                rep.set("violator", vec_to_json(*dec.violator));
                rep.verdict = "identity fails";
                rep.exit_code = 1;
            }
        } else if (*en_wit) {
            LieAlgebra g = resolve(algebra_ref);
            Matrix basis = basis_file.empty()
                               ? Matrix::identity(g.dim(), g.field_order())
                               : matrix_from_json(load_json_file(basis_file).contains("basis")
                                                      ? load_json_file(basis_file).at("basis")
                                                      : load_json_file(basis_file),
                                                  g.field_order());
            bool ok = pre_engel_witness(g, basis, m_arg);
            rep.verdict = ok ? "ad-nilpotent basis of degree " + std::to_string(m_arg)
                             : "basis is not ad-nilpotent of degree " + std::to_string(m_arg);
            rep.exit_code = ok ? 0 : 1;
        } else if (*en_span) {
            LieAlgebra g = resolve(algebra_ref);
            std::vector<Vec> pool;
            if (!candidates_file.empty())
                pool = vectors_from_json(load_json_file(candidates_file), g.field_order());
            EngelReport er = em_span_bound(g, m_arg, pool, seed);
            rep.set("em_span_lower_bound", er.em_span_lower_bound);
            rep.set("identity_holds", er.identity_holds);
            if (er.witness_violator) rep.set("violator", vec_to_json(*er.witness_violator));
            rep.line("dim E_" + std::to_string(m_arg) +
                     " >= " + std::to_string(er.em_span_lower_bound) + " of " +
                     std::to_string(g.dim()));
            rep.verdict = "ok";
        } else if (*en_ff) {
            LieAlgebra g = resolve(algebra_ref);
            PropertyFWitness w = property_f_from_json(load_json_file(witness_file), g.field_order());
            PropertyFResult r = property_f_falsify(g, w);
            if (r.falsified) {
                rep.verdict = "property F falsified";
            } else {
                if (r.failing_triple) {
                    Json t = Json::array();
                    for (unsigned x : *r.failing_triple) t.push_back(x);
                    rep.set("failing_triple", t);
                }
                rep.set("reason", r.reason);
                rep.verdict = "witness fails: " + r.reason;
                rep.exit_code = 1;
            }
        } else if (*un_solve) {
            UnitSystem s = unit_system_from_json(load_json_file(system_file));
            UnitVerdict v = solve_units(s);
            if (!replay_certificate(s, v) && v.status != UnitStatus::UNKNOWN)
                throw InternalError("certificate failed to replay");
            rep.set("result", unit_verdict_to_json(s, v));
            for (const auto& st : v.certificate) rep.line(st.describe(s));
            if (!v.note.empty()) rep.line(v.note);
            switch (v.status) {
                case UnitStatus::SAT: {
                    std::string w = "witness:";
                    for (size_t k = 0; k < s.vars.size(); ++k)
                        w += " " + s.vars[k] + " = " + (*v.witness)[k].str();
                    rep.line(w);
                    rep.verdict = "SAT";
                    break;
                }
                case UnitStatus::UNSAT:
                    rep.verdict = "UNSAT";
                    rep.exit_code = 1;
                    break;
                case UnitStatus::UNKNOWN:
                    rep.verdict = "UNKNOWN";
                    rep.exit_code = 2;
                    break;
            }
        } else if (*un_oracle) {
            UnitSystem s = unit_system_from_json(load_json_file(system_file));
            EnumerateResult r =
                use_reference ? oracle_enumerate_reference(s, m_arg) : oracle_enumerate(s, m_arg);
            rep.set("assignments_scanned", r.assignments_scanned);
            if (r.sat) {
                Json w = Json::object();
                std::string wl = "witness exponents:";
                for (size_t k = 0; k < s.vars.size(); ++k) {
                    w[s.vars[k]] = (*r.witness_exponents)[k];
                    wl += " " + s.vars[k] + " = zeta_" + std::to_string(m_arg) + "^" +
                          std::to_string((*r.witness_exponents)[k]);
                }
                rep.set("witness", w);
                rep.line(wl);
                rep.verdict = "SAT";
            } else {
                rep.verdict = "UNSAT over mu_" + std::to_string(m_arg);
                rep.exit_code = 1;
            }
        } else if (*un_fam) {
            LieAlgebra g = resolve(algebra_ref);
            EigenformData fam = eigenform_from_json(load_json_file(family_file));
            UnitSystem sys;
            sys.vars = fam.vars;
            bool ok = eigenform_family_check(g, sys, fam.positions, fam.kind, samples_arg, seed);
            rep.set("samples", samples_arg);
            rep.verdict = ok ? "family verified" : "family fails";
            rep.exit_code = ok ? 0 : 1;
        } else if (*ct_list) {
            Json entries = Json::array();
            for (const std::string& n : catalog.names()) {
                CatalogEntry e = catalog.get(n);
                Json item = {{"name", n},
                             {"dim", e.algebra.dim()},
                             {"field_order", e.algebra.field_order()}};
                entries.push_back(item);
                rep.line(n + " (dim " + std::to_string(e.algebra.dim()) + ")");
            }
            rep.set("entries", entries);
            rep.verdict = "ok";
        } else if (*ct_get) {
            CatalogEntry e = catalog.get(name_arg);
            rep.set("algebra", algebra_to_json(e.algebra));
            rep.set("expected", e.expected);
            Json witnesses = Json::array();
            if (e.periodic_derivation) witnesses.push_back("derivation");
            if (e.integral_derivation) witnesses.push_back("derivation_integral");
            if (e.periodic_prederivation) witnesses.push_back("prederivation");
            if (e.hex_grading) witnesses.push_back("grading");
            if (e.presentation) witnesses.push_back("presentation");
            if (e.obstruction) witnesses.push_back("obstruction");
            if (e.eigenform) witnesses.push_back("eigenform");
            if (e.pre_engel_basis) witnesses.push_back("pre_engel_basis");
            if (e.property_f_witness) witnesses.push_back("property_f");
            rep.set("witnesses", witnesses);
            rep.line(name_arg + ": dim " + std::to_string(e.algebra.dim()) + ", witnesses " +
                     std::to_string(witnesses.size()) + " (all re-verified)");
            rep.verdict = "ok";
        } else if (*vp) {
            auto results = run_acceptance(catalog, seed);
            Json jr = Json::array();
            for (const auto& r : results) {
                Json item = {{"criterion", r.number},
                             {"title", r.title},
                             {"passed", r.passed},
                             {"seconds", r.seconds},
                             {"failures", r.failures}};
                jr.push_back(item);
                std::string line = "criterion " + std::to_string(r.number) + ": " +
                                   (r.passed ? "PASS" : "FAIL") + " - " + r.title;
                rep.line(line);
                for (const auto& f : r.failures) rep.line("    " + f);
            }
            rep.set("criteria", jr);
            int failures = 0;
            for (const auto& r : results)
                if (!r.passed) ++failures;
            rep.verdict = failures == 0 ? "all criteria passed"
                                        : std::to_string(failures) + " criteria failed";
            rep.exit_code = failures == 0 ? 0 : 1;
        }
        return rep.finish(join_args(argc, argv), elapsed());
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
