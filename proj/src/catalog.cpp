#include "hexad/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

#include "hexad/error.hpp"

namespace fs = std::filesystem;

namespace hexad {

Catalog::Catalog(std::string root_dir) : root_(std::move(root_dir)) {
    if (!fs::is_directory(root_)) throw Error("catalog directory not found: " + root_);
}

std::string Catalog::default_root() {
    if (const char* env = std::getenv("HEXAD_CATALOG")) return env;
    if (fs::is_directory("catalog")) return "catalog";
#ifdef HEXAD_DEFAULT_CATALOG_DIR
    return HEXAD_DEFAULT_CATALOG_DIR;
#else
    return "catalog";
#endif
}

std::vector<std::string> Catalog::names() const {
    std::vector<std::string> out;
    for (const auto& e : fs::directory_iterator(root_))
        if (e.is_directory() && fs::exists(e.path() / "algebra.json"))
            out.push_back(e.path().filename().string());
    std::sort(out.begin(), out.end());
    return out;
}

CatalogEntry Catalog::get(const std::string& name) const {
    fs::path dir = fs::path(root_) / name;
    if (!fs::exists(dir / "algebra.json")) throw Error("unknown catalog entry: " + name);

    CatalogEntry e;
    e.name = name;
    e.algebra = algebra_from_json(load_json_file((dir / "algebra.json").string()));
    if (fs::exists(dir / "expected.json"))
        e.expected = load_json_file((dir / "expected.json").string());

    unsigned ord = e.algebra.field_order();
    fs::path w = dir / "witnesses";
    auto have = [&](const char* f) { return fs::exists(w / f); };
    auto load = [&](const char* f) { return load_json_file((w / f).string()); };

    if (have("derivation.json")) {
        e.periodic_derivation = linear_map_from_json(load("derivation.json"), ord).second;
        MemberResult mr = is_member(e.algebra, *e.periodic_derivation, MapKind::derivation);
        if (!mr.ok) throw StructureError(name + ": stored derivation fails the identity");
    }
    if (have("derivation_integral.json")) {
        e.integral_derivation =
            linear_map_from_json(load("derivation_integral.json"), ord).second;
        if (!is_member(e.algebra, *e.integral_derivation, MapKind::derivation).ok)
            throw StructureError(name + ": stored integral derivation fails the identity");
    }
    if (have("prederivation.json")) {
        e.periodic_prederivation = linear_map_from_json(load("prederivation.json"), ord).second;
        if (!is_member(e.algebra, *e.periodic_prederivation, MapKind::prederivation).ok)
            throw StructureError(name + ": stored prederivation fails the identity");
    }
    if (have("grading.json")) {
        e.hex_grading = grading_from_json(load("grading.json"), e.algebra.dim(), ord);
        VerifyReport rep = verify_hexagonal(e.algebra, *e.hex_grading);
        if (!rep.ok)
            throw StructureError(name + ": stored grading fails: " + rep.violations.front());
    }
    if (have("presentation.json")) {
        e.presentation = presentation_from_json(load("presentation.json"), ord);
        HallBasis f = free_nilpotent(2, e.presentation->generators, ord);
        FreePresentation p =
            build_partition_ideal(f, e.presentation->partition, e.presentation->cross_vectors);
        auto [q, h] = presentation_to_grading(f, p, name);
        if (q.dim() != e.algebra.dim() || !(q.brackets() == e.algebra.brackets()))
            throw StructureError(name + ": stored presentation does not rebuild the algebra");
    }
    if (have("obstruction.json")) e.obstruction = unit_system_from_json(load("obstruction.json"));
    if (have("eigenform.json")) {
        e.eigenform = eigenform_from_json(load("eigenform.json"));
        UnitSystem family;
        family.vars = e.eigenform->vars;
        if (!eigenform_family_check(e.algebra, family, e.eigenform->positions, e.eigenform->kind))
            throw StructureError(name + ": stored eigenform family fails validation");
    }
    if (have("pre_engel_basis.json")) {
        Json j = load("pre_engel_basis.json");
        e.pre_engel_basis = matrix_from_json(j.at("basis"), ord);
        e.pre_engel_degree = j.at("m").get<unsigned>();
        if (!pre_engel_witness(e.algebra, *e.pre_engel_basis, *e.pre_engel_degree))
            throw StructureError(name + ": stored ad-nilpotent basis fails");
    }
    if (have("property_f.json")) {
        e.property_f_witness = property_f_from_json(load("property_f.json"), ord);
        if (!property_f_falsify(e.algebra, *e.property_f_witness).falsified)
            throw StructureError(name + ": stored property-F witness fails");
    }
    return e;
}

LieAlgebra resolve_algebra(const std::string& ref, const Catalog& catalog) {
    if (ref.rfind("catalog:", 0) == 0) return catalog.get(ref.substr(8)).algebra;
    return algebra_from_json(load_json_file(ref));
}

}  // namespace hexad
