#pragma once

#include <json.hpp>

#include "majorlab/ext_real.hpp"
#include "majorlab/prob_vec.hpp"

namespace majorlab {

using Json = nlohmann::json;

/// {"dist": ["1/3", "1/4", ...]} — entries as exact rational literals.
Json to_json(const ProbVec& p);
ProbVec prob_vec_from_json(const Json& j);

/// {"rows": [["1","0"],["0","1"]]} — rows of exact rational literals.
Json to_json(const Channel& w);
Channel channel_from_json(const Json& j);

/// {"value": 0.4150, "exact_infinite": false, "bits": true}
/// {"value": null,   "exact_infinite": true,  "bits": true}
Json to_json(const ExtReal& v);
ExtReal ext_real_from_json(const Json& j);

}  // namespace majorlab
