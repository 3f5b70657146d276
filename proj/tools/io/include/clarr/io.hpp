#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "clarr/arrangement.hpp"
#include "clarr/finquot.hpp"
#include "clarr/monodromy.hpp"
#include "clarr/presentation.hpp"

namespace clarr::io {

using json = nlohmann::json;

// Malformed input of any kind.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ["x3","X2",...], uppercase letter = inverse
json word_to_json(const FreeWord &w);
FreeWord word_from_json(const json &j);

json relation_to_json(const Relation &r);
Relation relation_from_json(const json &j);

json presentation_to_json(const GroupPresentation &p);
GroupPresentation presentation_from_json(const json &j);

json event_table_to_json(const EventTable &t);
EventTable event_table_from_json(const json &j);

json arrangement_to_json(const CLArrangement &a);
CLArrangement arrangement_from_json(const json &j);

json group_to_json(const FiniteGroupTable &g);
FiniteGroupTable group_from_json(const json &j);

json fingerprint_to_json(const Fingerprint &f);

json load_file(const std::string &path);

}  // namespace clarr::io
