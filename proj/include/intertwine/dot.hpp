#pragma once

#include <string>

#include "intertwine/quiver.hpp"
#include "intertwine/strip.hpp"

namespace intertwine {

// Graphviz digraph with vertices in lexicographic order; wrap arrows dashed.
std::string to_dot(const LabeledQuiver& q, const std::string& name = "quiver");
std::string to_dot(const StripCategory& cat, const std::string& name = "strip");

}  // namespace intertwine
