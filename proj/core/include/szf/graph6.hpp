#pragma once

#include <functional>
#include <istream>
#include <string>
#include <string_view>

#include "szf/graph.hpp"

namespace szf {

/// Decodes one graph6 record. An optional ">>graph6<<" prefix is accepted.
/// Errors name the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Encodes a graph in graph6 (short header for n <= 62, long header otherwise).
std::string serialize_graph6(const Graph& g);

/// Reads a newline-delimited graph6 stream. `on_record(line_number, text)` is invoked for every
/// non-blank line, in order; decoding is left to the callee so bad records can be reported
/// without aborting.
void for_each_graph6_line(std::istream& in,
                          const std::function<void(std::size_t, const std::string&)>& on_record);

}  // namespace szf
