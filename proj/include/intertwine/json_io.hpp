#pragma once

#include <json.hpp>

#include "intertwine/collection.hpp"
#include "intertwine/error.hpp"
#include "intertwine/oracle.hpp"
#include "intertwine/quiver.hpp"
#include "intertwine/slice.hpp"
#include "intertwine/strip.hpp"

namespace intertwine::io {

using json = nlohmann::json;

// Standalone subsets carry their ambient size: {"n": 8, "elements": [1,3,5,6]}.
json subset_json(const CyclicSubset& s);
// Plain element array, used inside collections and quivers.
json elements_json(const CyclicSubset& s);

// Accepts a bare element array (n taken from the argument) or an object with
// "elements" and an optional matching "n". Throws MalformedInput on shape
// errors and InvalidArgument on out-of-range elements.
CyclicSubset subset_from_json(const json& j, int n);

json collection_json(const Collection& c);
Collection collection_from_json(const json& j);

json certificate_json(const SliceCertificate& cert);
json vertex_json(const Vertex& v);
json quiver_json(const LabeledQuiver& q);
json strip_json(const StripCategory& cat);
json report_json(const OpenQuestionReport& rep);
json report_json(const CrossValidateReport& rep);

// {"ok": false, "error": code, "detail": message, "offending": [[...]]}
json error_json(const Error& e);

// Canonical text form shared by every front end: two-space indent, trailing newline.
std::string render(const json& j);

// Field access with MalformedInput on absence or wrong type.
const json& field(const json& j, const char* name);
int int_field(const json& j, const char* name);

}  // namespace intertwine::io
