#pragma once

#include <string>

#include <json.hpp>

#include "k3calc/cohomology.hpp"
#include "k3calc/mukai.hpp"
#include "k3calc/pseudoheight.hpp"
#include "k3calc/scenarios.hpp"

namespace k3calc {

using Json = nlohmann::json;

// Lattices: {"labels": ["D", "E"], "gram": [[4, 3], [3, 0]]} (labels optional).
IntLattice lattice_from_json(const Json& j);
Json lattice_to_json(const IntLattice& l);

// Vectors: [1, -2] or {"D": 1, "E": -2} resolved against the lattice labels.
Vec vector_from_json(const Json& j, const IntLattice& ambient);

// Bare 2D array, or an object carrying "matrix" (or "gram").
IntMat matrix_from_json(const Json& j);

// Models: {"name": ..., "picard": <lattice>, "polarization": <vector>,
//          "spherical_U": <mukai vector>?}.
K3Model model_from_json(const Json& j);

// Mukai vectors: {"r": 2, "c1": {"D": -1, "E": -1}, "s": 3}.
MukaiVector mukai_vector_from_json(const Json& j, const K3Model& m);

// Ext-degree tables: {"n": 2, "rel_dim": 3, "e_plain": {"1,2": 0},
//  "e_serre": {"1,1": 3, "2,2": 3, "2,1": 3}}; "inf" for +infinity; absent
// keys mean +infinity. Optional "sheaf_mode": true requests validation.
struct ParsedTable {
    ExtDegreeTable table;
    bool sheaf_mode_requested = false;
};
ParsedTable table_from_json(const Json& j);

Json reports_to_json(const std::vector<ScenarioReport>& reports);
std::vector<ScenarioReport> reports_from_json(const Json& j);

// Canonical byte serialization used everywhere a report is written; parsing
// and re-serializing is byte-identical.
std::string serialize_reports(const std::vector<ScenarioReport>& reports);

Json parse_json_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& what);

}  // namespace k3calc
