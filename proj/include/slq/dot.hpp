#pragma once

#include <string>

#include "slq/pair.hpp"

namespace slq {

// Renders the dual graph of the pair in DOT: one node per curve labeled
// "name (self-intersection)", one edge per positive intersection with the
// multiplicity as annotation, one cluster per component, and singular
// points as diamond nodes attached to their incident curves. Output is
// byte-identical across runs.
std::string export_dot(const LogPair& pair);

}  // namespace slq
