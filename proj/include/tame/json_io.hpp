#pragma once

#include <json.hpp>

#include "tame/stabilize.hpp"
#include "tame/tamecheck.hpp"

namespace tame {

using Json = nlohmann::ordered_json;

Json generator_to_json(const TameGenerator& g);
TameGenerator generator_from_json(const Json& j, const Ring& ring, int nvars);

Json word_to_json(const TameWord& w);
TameWord word_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json decision_to_json(const TameDecision& d, bool with_trace);
Json length3_to_json(const Length3Data& d);

}  // namespace tame
