#pragma once

#include <nlohmann/json.hpp>

#include "lltlab/lltgraph.hpp"
#include "lltlab/report.hpp"
#include "lltlab/shapes.hpp"
#include "lltlab/treebij.hpp"

namespace lltlab {

// Canonical JSON forms.  Serialization is deterministic: ordered_json keeps
// insertion order, term maps are already canonically ordered, and integer
// coefficients are decimal strings so no width limit can bite.

using ojson = nlohmann::ordered_json;

// ["c0","c1",...], constant coefficient first; [] is the zero polynomial.
ojson qpoly_to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

// {"num_vars": n, "terms": [{"exponents": [...], "q_coeffs": [...]}, ...]}
ojson sympoly_to_json(const SymPoly& a);
SymPoly sympoly_from_json(const nlohmann::json& j);

// {"n": n, "e1": [[u,v],...], "e2": [...], "ed": [...]}
ojson graph_to_json(const LLTGraph& g);
LLTGraph graph_from_json(const nlohmann::json& j);

// [[u,v],...] over labels 1..m (m = max endpoint unless given).
ojson tree_to_json(const LabeledTree& t);
LabeledTree tree_from_json(const nlohmann::json& j);

// [f(1),...,f(m)]
ojson parking_to_json(const ParkingFunction& f);
ParkingFunction parking_from_json(const nlohmann::json& j);

// {"shapes": ["(3,2)/(1)", ...]}
ojson shapes_to_json(const ShapeSequence& s);

ojson report_to_json(const VerificationReport& r);

}  // namespace lltlab
