#pragma once

// JSON encodings shared by the command-line tools. Complex numbers are
// two-element arrays [re, im]; matrices are arrays of rows.

#include <json.hpp>

#include <string>

#include "doew/operator_algebra.hpp"
#include "doew/states.hpp"

namespace doew::cli {

using nlohmann::json;

json to_json(Complex z);
json to_json(const ComplexVector& v);
json to_json(const ComplexMatrix& m);
json to_json(const RealVector& v);
json to_json(const RealMatrix& m);

// { "q": {"1": 0.4, ...}, "parity": "odd" }; "q" may also be a 16-element array.
// Missing parity means "free".
MixtureWeights weights_from_json(const json& j);
json weights_to_json(const MixtureWeights& w);

// Inline JSON when the text starts with '{', otherwise a path to a JSON file.
json load_json_argument(const std::string& text);

}  // namespace doew::cli
