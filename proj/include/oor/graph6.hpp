#pragma once

#include <string>
#include <string_view>

#include "oor/graph.hpp"

namespace oor {

/// Decodes one graph6 line (an optional ">>graph6<<" header is accepted).
/// Throws InputError naming the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding, without header or trailing newline.
std::string write_graph6(const Graph& g);

}  // namespace oor
