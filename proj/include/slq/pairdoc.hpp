#pragma once

#include <string>

#include "slq/cover.hpp"
#include "slq/pair.hpp"

namespace slq {

// Renders a pair as a line-based, human-editable document. All numbers are
// exact fractions; parse(render(pair)) == pair.
std::string render_pair(const LogPair& pair);

// Parses a pair document; errors carry the offending line number. Decimal
// notation is rejected.
LogPair parse_pair(const std::string& text);

std::string render_cover(const CoverDescriptor& cover);
CoverDescriptor parse_cover(const std::string& text);

}  // namespace slq
