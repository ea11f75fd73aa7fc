#ifndef RAMSEY_SERIALIZE_HPP
#define RAMSEY_SERIALIZE_HPP

#include <string>
#include <string_view>

#include "ramsey/graph.hpp"

namespace ramsey {

/// All three formats share one linearization of the upper triangle:
/// the lexicographic edge-slot order of graph.hpp.
///
/// adjacency-bits:  ASCII decimal order, '\n', C(order,2) chars '0'/'1' in
///                  slot order, trailing '\n'.
/// dimacs:          "p edge <n> <m>" then one "e u v" line per edge, 1-indexed.
///                  'c' comment lines are accepted on input.
/// json:            {"order": n, "bits": "<C(n,2) chars of 0/1>"}
enum class Format { adjacency_bits, dimacs, json };

/// Accepts "adjacency-bits", "dimacs", "json"; throws std::invalid_argument.
Format format_from_name(std::string_view name);
std::string_view format_name(Format f);

std::string encode(const Graph& g, Format f);

/// Bit-exact inverse of encode: decode(encode(g,f),f) == g.
/// Malformed input throws ParseError with the offending byte offset; well-formed
/// syntax with invalid content (bad order, out-of-range vertex, wrong bit count)
/// throws std::invalid_argument.
Graph decode(std::string_view data, Format f);

Graph read_graph_file(const std::string& path, Format f);
void write_graph_file(const std::string& path, const Graph& g, Format f);

}  // namespace ramsey

#endif
