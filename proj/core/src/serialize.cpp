#include "ramsey/serialize.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// Parses an unsigned decimal at `pos`, advancing it. Throws ParseError if no digit.
std::uint64_t parse_uint(std::string_view data, std::size_t& pos, std::uint64_t max,
                         const char* what) {
  if (pos >= data.size() || !std::isdigit(static_cast<unsigned char>(data[pos])))
    throw ParseError(pos, std::string("expected ") + what);
  std::uint64_t v = 0;
  while (pos < data.size() && std::isdigit(static_cast<unsigned char>(data[pos]))) {
    v = v * 10 + static_cast<std::uint64_t>(data[pos] - '0');
    if (v > max) throw ParseError(pos, std::string(what) + " out of range");
    ++pos;
  }
  return v;
}

void expect_char(std::string_view data, std::size_t& pos, char c) {
  if (pos >= data.size() || data[pos] != c)
    throw ParseError(pos, std::string("expected '") + c + "'");
  ++pos;
}

std::string encode_bit_string(const Graph& g) {
  Bits b = g.edge_bits();
  std::string s(b.size(), '0');
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b.test(i)) s[i] = '1';
  return s;
}

Graph graph_from_bit_chars(int order, std::string_view chars) {
  Bits b(chars.size());
  for (std::size_t i = 0; i < chars.size(); ++i)
    if (chars[i] == '1') b.set(i);
  return Graph::from_edge_bits(order, b);
}

Graph decode_adjacency_bits(std::string_view data) {
  std::size_t pos = 0;
  std::uint64_t order = parse_uint(data, pos, 1u << 30, "vertex count");
  if (order < 1) throw std::invalid_argument("graph order must be >= 1");
  expect_char(data, pos, '\n');
  std::uint64_t m = edge_slot_count(order);
  if (data.size() - pos < m) throw ParseError(data.size(), "edge string truncated");
  for (std::uint64_t i = 0; i < m; ++i)
    if (data[pos + i] != '0' && data[pos + i] != '1')
      throw ParseError(pos + i, "expected '0' or '1'");
  std::string_view chars = data.substr(pos, m);
  pos += m;
  expect_char(data, pos, '\n');
  if (pos != data.size()) throw ParseError(pos, "trailing data");
  return graph_from_bit_chars(static_cast<int>(order), chars);
}

void skip_spaces(std::string_view data, std::size_t& pos) {
  while (pos < data.size() && (data[pos] == ' ' || data[pos] == '\t')) ++pos;
}

Graph decode_dimacs(std::string_view data) {
  std::size_t pos = 0;
  int order = -1;
  std::uint64_t declared_edges = 0;
  std::uint64_t seen_edges = 0;
  Graph g;
  while (pos < data.size()) {
    std::size_t line_start = pos;
    if (data[pos] == 'c') {  // comment line
      while (pos < data.size() && data[pos] != '\n') ++pos;
      if (pos < data.size()) ++pos;
      continue;
    }
    if (data[pos] == '\n') {
      ++pos;
      continue;
    }
    if (data[pos] == 'p') {
      if (order >= 0) throw ParseError(line_start, "duplicate problem line");
      ++pos;
      skip_spaces(data, pos);
      while (pos < data.size() && std::isalpha(static_cast<unsigned char>(data[pos]))) ++pos;
      skip_spaces(data, pos);
      std::uint64_t n = parse_uint(data, pos, 1u << 30, "vertex count");
      if (n < 1) throw std::invalid_argument("graph order must be >= 1");
      skip_spaces(data, pos);
      declared_edges = parse_uint(data, pos, ~std::uint64_t{0} >> 1, "edge count");
      skip_spaces(data, pos);
      if (pos < data.size()) expect_char(data, pos, '\n');
      order = static_cast<int>(n);
      g = Graph(order);
      continue;
    }
    if (data[pos] == 'e') {
      if (order < 0) throw ParseError(line_start, "edge before problem line");
      ++pos;
      skip_spaces(data, pos);
      std::uint64_t u = parse_uint(data, pos, 1u << 30, "vertex index");
      skip_spaces(data, pos);
      std::uint64_t v = parse_uint(data, pos, 1u << 30, "vertex index");
      skip_spaces(data, pos);
      if (pos < data.size()) expect_char(data, pos, '\n');
      if (u < 1 || v < 1 || u > static_cast<std::uint64_t>(order) ||
          v > static_cast<std::uint64_t>(order))
        throw std::invalid_argument("vertex index out of range in dimacs edge");
      if (u == v) throw std::invalid_argument("self-loop in dimacs edge list");
      if (!g.adjacent(static_cast<int>(u - 1), static_cast<int>(v - 1))) ++seen_edges;
      g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
      continue;
    }
    throw ParseError(line_start, "unknown line type");
  }
  if (order < 0) throw ParseError(data.size(), "missing problem line");
  if (seen_edges != declared_edges)
    throw std::invalid_argument("dimacs edge count mismatch: declared " +
                                std::to_string(declared_edges) + ", found " +
                                std::to_string(seen_edges));
  return g;
}

Graph decode_json(std::string_view data) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(data);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann byte positions are 1-based
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0, e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("bits"))
    throw std::invalid_argument("json graph must be an object with 'order' and 'bits'");
  if (!j["order"].is_number_unsigned() && !j["order"].is_number_integer())
    throw std::invalid_argument("json 'order' must be an integer");
  std::int64_t order = j["order"].get<std::int64_t>();
  if (order < 1 || order > (1 << 30)) throw std::invalid_argument("json 'order' out of range");
  if (!j["bits"].is_string()) throw std::invalid_argument("json 'bits' must be a string");
  std::string chars = j["bits"].get<std::string>();
  if (chars.size() != edge_slot_count(static_cast<std::uint64_t>(order)))
    throw std::invalid_argument("json 'bits' length does not match C(order,2)");
  for (char c : chars)
    if (c != '0' && c != '1') throw std::invalid_argument("json 'bits' must contain only 0/1");
  return graph_from_bit_chars(static_cast<int>(order), chars);
}

}  // namespace

Format format_from_name(std::string_view name) {
  if (name == "adjacency-bits") return Format::adjacency_bits;
  if (name == "dimacs") return Format::dimacs;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

std::string_view format_name(Format f) {
  switch (f) {
    case Format::adjacency_bits: return "adjacency-bits";
    case Format::dimacs: return "dimacs";
    case Format::json: return "json";
  }
  return "?";
}

std::string encode(const Graph& g, Format f) {
  switch (f) {
    case Format::adjacency_bits:
      return std::to_string(g.order()) + "\n" + encode_bit_string(g) + "\n";
    case Format::dimacs: {
      std::ostringstream os;
      os << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
      for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
          if (g.adjacent(i, j)) os << "e " << i + 1 << ' ' << j + 1 << '\n';
      return os.str();
    }
    case Format::json: {
      nlohmann::json j;
      j["order"] = g.order();
      j["bits"] = encode_bit_string(g);
      return j.dump();
    }
  }
  throw std::logic_error("unreachable");
}

Graph decode(std::string_view data, Format f) {
  switch (f) {
    case Format::adjacency_bits: return decode_adjacency_bits(data);
    case Format::dimacs: return decode_dimacs(data);
    case Format::json: return decode_json(data);
  }
  throw std::logic_error("unreachable");
}

Graph read_graph_file(const std::string& path, Format f) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return decode(buf.str(), f);
}

void write_graph_file(const std::string& path, const Graph& g, Format f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << encode(g, f);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace ramsey
