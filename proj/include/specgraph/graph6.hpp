#pragma once

#include <string>
#include <string_view>

#include "specgraph/graph.hpp"

namespace specgraph {

/// graph6 encoding: order header, then the upper triangle packed column by
/// column (0-1, 0-2, 1-2, 0-3, ...) six bits per byte, each byte offset by 63.
/// Orders up to 62 use a one-byte header, up to 258047 the '~'-prefixed
/// four-byte header.
std::string g6_encode(const Graph& g);

/// Accepts an optional ">>graph6<<" prefix and a trailing newline. Throws
/// ParseError on a malformed header, wrong length or nonzero padding bits.
Graph g6_decode(std::string_view text);

}  // namespace specgraph
