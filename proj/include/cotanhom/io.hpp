#pragma once

#include "cotanhom/cellular.hpp"
#include "cotanhom/classification.hpp"
#include "cotanhom/quiver.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>

namespace cotanhom::io {

using nlohmann::json;

// Every parser throws InputError on malformed data. Matrices are arrays of
// rows; entries are integers or strings "p" / "p/q".

/// {"0": 1, "2": 1}
GradedVectorSpace parse_graded_space(const json& j);
json to_json(const GradedVectorSpace& v);

RationalMatrix parse_matrix(const json& j, std::size_t rows, std::size_t cols);
json to_json(const RationalMatrix& m);

/// {"dims": {...}, "differential": {"<source degree>": matrix}}
CochainComplex parse_complex(const json& j);
json to_json(const CochainComplex& c);

/// {"cells": [{"id", "dim"}], "incidence": [{"from", "to", "coeff"}]}
CellComplex parse_cell_complex(const json& j);
json to_json(const CellComplex& cc);

/// "sphere", "torus", or {"name", "generators": [{"name", "degree",
/// "invertible"}], "relations": [{"generator", "terms": [{"coeff", "word"}]}]}
QuiverPresentation parse_quiver(const json& j);
json to_json(const QuiverPresentation& q);

/// {"quiver": ..., "space": {...}, "maps": {"<generator>": {"<degree>": matrix}}}
Representation parse_representation(const json& j);
json to_json(const Representation& r);

/// Degree keys as decimal strings; zero dimensions omitted.
json to_json(const CohomologyResult& h);

/// {"theorem", "checked", "skipped", "violations": [{"index", "detail"}], "tallies"}
json to_json(const TheoremReport& report);

/// Reads and parses a JSON file; InputError if unreadable or not JSON.
json read_json_file(const std::filesystem::path& path);

}  // namespace cotanhom::io
