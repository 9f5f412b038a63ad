#pragma once

#include "ecm/braid_words.hpp"
#include "ecm/cocycle.hpp"
#include "ecm/monodromy.hpp"
#include "ecm/repdecomp.hpp"
#include "ecm/tannaka.hpp"

#include <json.hpp>

namespace ecm::io {

using json = nlohmann::json;

/// "p/q", or "p" when q = 1.
json to_json(const Rat& x);
/// Accepts a string "p/q" or an integer.
Rat rat_from_json(const json& j);

json to_json(const Mat& m);
Mat mat_from_json(const json& j);

json to_json(const GeneratorWord& w);
json to_json(const TupleDeformation& t);
GeneratorWord word_from_json(const json& j);
TupleDeformation deformation_from_json(const json& j);

/// { "rank": n, "locals": [...], "handle": [A, B] }
json to_json(const MonodromyTuple& t);
MonodromyTuple tuple_from_json(const json& j);

/// { "w_dim": d, "matrices": [...], "convention": "globals-inverted" }
json convolution_bundle(const ConvolutionMonodromy& cm);
std::vector<Mat> bundle_matrices(const json& j);

json to_json(const Constituent& c);
json constituents_report(const std::vector<Constituent>& cs);

json to_json(const BraidRelationReport& r);
json to_json(const G2Report& r);

}  // namespace ecm::io
