#pragma once

#include <nlohmann/json.hpp>

#include "hexad/engel.hpp"
#include "hexad/freenil.hpp"
#include "hexad/grading.hpp"
#include "hexad/unitsolver.hpp"

// JSON formats. Scalars are strings in the scalar grammar; indices are
// 1-based in every file format.
//
//   algebra:      {"name", "field_order", "dim",
//                  "brackets": [{"i", "j", "out": {"k": scalar}}]}
//   linear map:   {"algebra": name, "matrix": [[scalar, ...], ...]}
//   grading:      {"algebra": name, "parts": {"z6^k": [[scalar, ...], ...]}}
//   triangular:   {"algebra": name,
//                  "parts": [{"label": scalar, "vectors": [[...], ...]}]}
//   unit system:  {"vars": [name, ...], "forms": [[int, ...], ...]}
//   verdict:      {"status", "witness", "certificate", "search_bound_used"}
//   presentation: {"generators", "partition": {"X","Y","Z"},
//                  "cross": {"XY","XZ","YZ"}}   (degree-2 coordinates)
//   eigenform:    {"vars", "kind", "positions": [[int, ...], ...]}
//   property-F:   {"basis": [[scalar, ...], ...],
//                  "pairs": [{"triple": [i,j,k], "pair": [l,m]}, ...]}
//   vectors:      {"ambient": n, "vectors": [[scalar, ...], ...]}

namespace hexad {

using Json = nlohmann::json;

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

Json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, unsigned field_order);

Json linear_map_to_json(const std::string& algebra_name, const Matrix& m);
/// Returns the named algebra reference and the matrix.
std::pair<std::string, Matrix> linear_map_from_json(const Json& j, unsigned field_order);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, unsigned field_order);

Json subspace_vectors_to_json(const Subspace& s);
std::vector<Vec> vectors_from_json(const Json& j, unsigned field_order);

Json grading_to_json(const std::string& algebra_name, const HexGrading& h);
HexGrading grading_from_json(const Json& j, unsigned ambient, unsigned field_order);

TriGrading tri_grading_from_json(const Json& j, unsigned ambient, unsigned field_order);

Json unit_system_to_json(const UnitSystem& s);
UnitSystem unit_system_from_json(const Json& j);

Json unit_verdict_to_json(const UnitSystem& s, const UnitVerdict& v);

struct PresentationData {
    unsigned generators = 0;
    std::array<std::vector<unsigned>, 3> partition;      // 0-based in memory
    std::array<std::vector<Vec>, 3> cross_vectors;       // degree-2 coordinates
};
Json presentation_to_json(const PresentationData& p);
PresentationData presentation_from_json(const Json& j, unsigned field_order);

struct EigenformData {
    std::vector<std::string> vars;
    MapKind kind = MapKind::derivation;
    std::vector<std::vector<long>> positions;
};
Json eigenform_to_json(const EigenformData& e);
EigenformData eigenform_from_json(const Json& j);

Json property_f_to_json(const PropertyFWitness& w);
PropertyFWitness property_f_from_json(const Json& j, unsigned field_order);

}  // namespace hexad
