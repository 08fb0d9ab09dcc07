#pragma once

#include "twistkit/disc_enumeration.hpp"
#include "twistkit/germ.hpp"
#include "twistkit/pearl.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace twistkit::io
{

using json = nlohmann::json;

/// {"basis": [...], "generators": optional, "boundary": [[...]],
///  "rows": [{"label": ..., "v": [...]}], "maslov": [...], "target": 2,
///  "bounds": optional [[lo, hi], ...]}
struct ProblemFile
{
    ConstraintTable table;
    std::optional<IntegerBox> bounds;
};

ProblemFile problem_from_json(const json& j);
json problem_to_json(const ProblemFile& p);

/// {"generators": [...], "names": optional, "ring": "GF2", "boundary": [[...]],
///  "terms": [{"exponent": [...], "coeff": "1"}],
///  "homs": {"h0": [hom...], "regularity": [hom...]}} where a hom is
///  {"name": ..., "target": [...], "ring": ..., "images": {"R": "z1", ...}}.
struct PotentialFile
{
    Potential potential;
    std::vector<NamedHom> h0_homs;
    std::vector<NamedHom> regularity_homs;
};

PotentialFile potential_from_json(const json& j);
json potential_to_json(const PotentialFile& p);

/// {"dim": n, "constant": "p/q", "covectors": [[...]], "note": ...}
Germ germ_from_json(const json& j);
json germ_to_json(const Germ& g);

json hom_to_json(const NamedHom& h);
NamedHom hom_from_json(const json& j, const VariableList& source);

/// Reads and parses a JSON file; failures become InvalidInput errors.
json read_json_file(const std::string& path);

} // namespace twistkit::io
