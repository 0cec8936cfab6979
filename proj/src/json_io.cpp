#include "hexad/json_io.hpp"

#include <fstream>


#include "hexad/error.hpp"

namespace hexad {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

Json algebra_to_json(const LieAlgebra& g) {
    Json brackets = Json::array();
    for (const auto& [key, vec] : g.brackets()) {
        Json out = Json::object();
        for (unsigned k = 0; k < g.dim(); ++k)
            if (!vec[k].is_zero()) out[std::to_string(k + 1)] = vec[k].str();
        brackets.push_back({{"i", key.first + 1}, {"j", key.second + 1}, {"out", out}});
    }
    return {{"name", g.name()},
            {"field_order", g.field_order()},
            {"dim", g.dim()},
            {"brackets", brackets}};
}

LieAlgebra algebra_from_json(const Json& j) {
    std::string name = j.at("name").get<std::string>();
    unsigned order = j.at("field_order").get<unsigned>();
    unsigned dim = j.at("dim").get<unsigned>();
    LieAlgebra::BracketMap bm;
    for (const Json& b : j.at("brackets")) {
        unsigned i = b.at("i").get<unsigned>();
        unsigned jj = b.at("j").get<unsigned>();
        if (i < 1 || jj < 1 || i >= jj || jj > dim)
            throw ParseError("bracket indices must satisfy 1 <= i < j <= dim");
        Vec out = vec_zero(dim, order);
        for (const auto& [key, val] : b.at("out").items()) {
            unsigned k = static_cast<unsigned>(std::stoul(key));
            if (k < 1 || k > dim) throw ParseError("bracket output index out of range");
            out[k - 1] = parse_scalar(val.get<std::string>(), order);
        }
        bm[{i - 1, jj - 1}] = std::move(out);
    }
    return LieAlgebra::make(name, dim, order, std::move(bm));
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (unsigned i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (unsigned j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, unsigned field_order) {
    if (!j.is_array()) throw ParseError("matrix JSON must be an array of rows");
    unsigned rows = static_cast<unsigned>(j.size());
    unsigned cols = rows ? static_cast<unsigned>(j.at(0).size()) : 0;
    Matrix m(rows, cols, field_order);
    for (unsigned i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols) throw ParseError("ragged matrix JSON");
        for (unsigned k = 0; k < cols; ++k)
            m.at(i, k) = parse_scalar(j.at(i).at(k).get<std::string>(), field_order);
    }
    return m;
}

Json linear_map_to_json(const std::string& algebra_name, const Matrix& m) {
    return {{"algebra", algebra_name}, {"matrix", matrix_to_json(m)}};
}

std::pair<std::string, Matrix> linear_map_from_json(const Json& j, unsigned field_order) {
    return {j.value("algebra", std::string{}), matrix_from_json(j.at("matrix"), field_order)};
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(c.str());
    return out;
}

Vec vec_from_json(const Json& j, unsigned field_order) {
    Vec v;
    v.reserve(j.size());
    for (const Json& c : j) v.push_back(parse_scalar(c.get<std::string>(), field_order));
    return v;
}

Json subspace_vectors_to_json(const Subspace& s) {
    Json vecs = Json::array();
    for (const Vec& b : s.basis()) vecs.push_back(vec_to_json(b));
    return {{"ambient", s.ambient_dim()}, {"vectors", vecs}};
}

std::vector<Vec> vectors_from_json(const Json& j, unsigned field_order) {
    const Json& arr = j.is_object() ? j.at("vectors") : j;
    std::vector<Vec> out;
    for (const Json& v : arr) out.push_back(vec_from_json(v, field_order));
    return out;
}

Json grading_to_json(const std::string& algebra_name, const HexGrading& h) {
    Json parts = Json::object();
    for (unsigned k = 0; k < 6; ++k) {
        if (h.part(k).dim() == 0) continue;
        Json vecs = Json::array();
        for (const Vec& b : h.part(k).basis()) vecs.push_back(vec_to_json(b));
        parts["z6^" + std::to_string(k)] = std::move(vecs);
    }
    return {{"algebra", algebra_name}, {"parts", parts}};
}

HexGrading grading_from_json(const Json& j, unsigned ambient, unsigned field_order) {
    HexGrading h(ambient, field_order);
    for (const auto& [key, vecs] : j.at("parts").items()) {
        if (key.rfind("z6^", 0) != 0) throw ParseError("grading part keys look like z6^k");
        unsigned k = static_cast<unsigned>(std::stoul(key.substr(3)));
        if (k > 5) throw ParseError("grading part exponent out of range");
        std::vector<Vec> basis;
        for (const Json& v : vecs) basis.push_back(vec_from_json(v, field_order));
        h.set_part(k, Subspace::span(basis, ambient, field_order));
    }
    return h;
}

TriGrading tri_grading_from_json(const Json& j, unsigned ambient, unsigned field_order) {
    TriGrading t;
    for (const Json& part : j.at("parts")) {
        CycloScalar label = parse_scalar(part.at("label").get<std::string>(), field_order);
        std::vector<Vec> basis;
        for (const Json& v : part.at("vectors")) basis.push_back(vec_from_json(v, field_order));
        t.parts.emplace_back(label, Subspace::span(basis, ambient, field_order));
    }
    return t;
}

Json unit_system_to_json(const UnitSystem& s) {
    return {{"vars", s.vars}, {"forms", s.forms}};
}

UnitSystem unit_system_from_json(const Json& j) {
    UnitSystem s;
    s.vars = j.at("vars").get<std::vector<std::string>>();
    s.forms = j.at("forms").get<std::vector<std::vector<long>>>();
    for (const auto& f : s.forms)
        if (f.size() != s.vars.size())
            throw ParseError("form length does not match the variable count");
    return s;
}

Json unit_verdict_to_json(const UnitSystem& s, const UnitVerdict& v) {
    Json out;
    switch (v.status) {
        case UnitStatus::SAT: out["status"] = "SAT"; break;
        case UnitStatus::UNSAT: out["status"] = "UNSAT"; break;
        case UnitStatus::UNKNOWN: out["status"] = "UNKNOWN"; break;
    }
    if (v.witness) {
        Json w = Json::object();
        for (size_t k = 0; k < s.vars.size(); ++k) w[s.vars[k]] = (*v.witness)[k].str();
        out["witness"] = std::move(w);
    }
    Json steps = Json::array();
    for (const CertStep& st : v.certificate) {
        Json sj;
        sj["describe"] = st.describe(s);
        switch (st.kind) {
            case CertStep::Kind::TRIANGLE:
                sj["kind"] = "TRIANGLE";
                sj["form"] = st.form;
                sj["lower_bound"] = st.lower_bound;
                sj["upper_bound"] = st.upper_bound;
                break;
            case CertStep::Kind::EQUILATERAL: {
                sj["kind"] = "EQUILATERAL";
                if (!st.form.empty()) sj["form"] = st.form;
                sj["vars"] = {s.vars[st.var_i], s.vars[st.var_j]};
                sj["cosine"] = rat_str(st.cosine);
                Json ratios = Json::array();
                for (const auto& r : st.allowed_ratios) ratios.push_back(r.str());
                sj["allowed_ratios"] = std::move(ratios);
                break;
            }
            case CertStep::Kind::EXHAUST: {
                sj["kind"] = "EXHAUST";
                sj["branches"] = st.branches;
                Json refs = Json::array();
                for (const auto& [exps, form] : st.branch_refutations)
                    refs.push_back({{"exponents", exps}, {"violated_form", form}});
                sj["refutations"] = std::move(refs);
                break;
            }
        }
        steps.push_back(std::move(sj));
    }
    out["certificate"] = std::move(steps);
    out["search_bound_used"] = v.search_bound_used;
    if (!v.note.empty()) out["note"] = v.note;
    return out;
}

Json presentation_to_json(const PresentationData& p) {
    auto bump = [](const std::vector<unsigned>& v) {
        std::vector<unsigned> out;
        for (unsigned x : v) out.push_back(x + 1);
        return out;
    };
    Json cross = Json::object();
    const char* names[3] = {"XY", "XZ", "YZ"};
    for (unsigned c = 0; c < 3; ++c) {
        Json vecs = Json::array();
        for (const Vec& v : p.cross_vectors[c]) vecs.push_back(vec_to_json(v));
        cross[names[c]] = std::move(vecs);
    }
    return {{"generators", p.generators},
            {"partition",
             {{"X", bump(p.partition[0])}, {"Y", bump(p.partition[1])}, {"Z", bump(p.partition[2])}}},
            {"cross", cross}};
}

PresentationData presentation_from_json(const Json& j, unsigned field_order) {
    PresentationData p;
    p.generators = j.at("generators").get<unsigned>();
    const char* pnames[3] = {"X", "Y", "Z"};
    for (unsigned k = 0; k < 3; ++k) {
        for (unsigned idx : j.at("partition").at(pnames[k]).get<std::vector<unsigned>>()) {
            if (idx < 1 || idx > p.generators) throw ParseError("partition index out of range");
            p.partition[k].push_back(idx - 1);
        }
    }
    const char* cnames[3] = {"XY", "XZ", "YZ"};
    for (unsigned c = 0; c < 3; ++c)
        for (const Json& v : j.at("cross").at(cnames[c]))
            p.cross_vectors[c].push_back(vec_from_json(v, field_order));
    return p;
}

Json eigenform_to_json(const EigenformData& e) {
    return {{"vars", e.vars},
            {"kind", e.kind == MapKind::derivation ? "derivation" : "prederivation"},
            {"positions", e.positions}};
}

EigenformData eigenform_from_json(const Json& j) {
    EigenformData e;
    e.vars = j.at("vars").get<std::vector<std::string>>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "derivation")
        e.kind = MapKind::derivation;
    else if (kind == "prederivation")
        e.kind = MapKind::prederivation;
    else
        throw ParseError("eigenform kind must be derivation or prederivation");
    e.positions = j.at("positions").get<std::vector<std::vector<long>>>();
    return e;
}

Json property_f_to_json(const PropertyFWitness& w) {
    Json pairs = Json::array();
    for (const auto& [triple, pair] : w.pair_choice)
        pairs.push_back({{"triple", triple}, {"pair", pair}});
    return {{"basis", matrix_to_json(w.basis)}, {"pairs", pairs}};
}

PropertyFWitness property_f_from_json(const Json& j, unsigned field_order) {
    PropertyFWitness w;
    w.basis = matrix_from_json(j.at("basis"), field_order);
    for (const Json& e : j.at("pairs")) {
        auto t = e.at("triple").get<std::array<unsigned, 3>>();
        auto p = e.at("pair").get<std::array<unsigned, 2>>();
        w.pair_choice[t] = p;
    }
    return w;
}

}  // namespace hexad
