#pragma once

#include <iosfwd>

#include "commands.hpp"

namespace nsg::cli {

inline constexpr std::size_t kGapDisplayLimit = 64;

/// Human-readable rendering of an output document. Everything printed is
/// taken from the JSON, so both modes carry the same numbers.
void render_table(const Json& doc, std::ostream& out);

}  // namespace nsg::cli
