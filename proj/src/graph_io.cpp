#include "distpoly/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "distpoly/errors.hpp"

namespace distpoly {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<std::uint64_t> parse_index(std::string_view token) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) return std::nullopt;
  return value;
}

constexpr std::uint64_t kMaxEdgeListVertex = 1u << 24;
constexpr std::size_t kMaxGraph6Order = 258047;
constexpr std::string_view kGraph6Header = ">>graph6<<";

}  // namespace

Graph from_edge_list(std::string_view text) {
  std::optional<std::uint64_t> declared;
  std::vector<Edge> edges;
  std::uint64_t max_index = 0;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const auto raw = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto where = " on line " + std::to_string(line_no);

    if (line.starts_with("n=")) {
      if (declared) throw ParseError("repeated order header" + where);
      const auto value = parse_index(trim(line.substr(2)));
      if (!value || *value == 0 || *value > kMaxEdgeListVertex) {
        throw ParseError("malformed order header '" + std::string(line) + "'" + where);
      }
      declared = value;
      continue;
    }

    std::istringstream in{std::string(line)};
    std::string a, b, extra;
    if (!(in >> a >> b) || (in >> extra)) {
      throw ParseError("expected 'u v', got '" + std::string(line) + "'" + where);
    }
    const auto u = parse_index(a);
    const auto v = parse_index(b);
    if (!u || !v || *u >= kMaxEdgeListVertex || *v >= kMaxEdgeListVertex) {
      throw ParseError("malformed vertex index in '" + std::string(line) + "'" + where);
    }
    max_index = std::max({max_index, *u, *v});
    edges.push_back({static_cast<Vertex>(*u), static_cast<Vertex>(*v)});
  }

  if (!declared && edges.empty()) throw ParseError("edge list is empty");
  const std::uint64_t order = declared ? *declared : max_index + 1;
  return Graph(order, edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Graph from_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  if (line.empty()) throw ParseError("graph6: empty string");
  for (char ch : line) {
    if (ch < 63 || ch > 126) {
      throw ParseError(std::string("graph6: invalid character '") + ch + "'");
    }
  }
  auto byte = [&](std::size_t i) { return static_cast<std::uint64_t>(line[i] - 63); };

  std::uint64_t n = 0;
  std::size_t offset = 0;
  if (line[0] != 126) {
    n = byte(0);
    offset = 1;
  } else if (line.size() >= 2 && line[1] != 126) {
    if (line.size() < 4) throw ParseError("graph6: truncated order field");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    offset = 4;
  } else {
    if (line.size() < 8) throw ParseError("graph6: truncated order field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    offset = 8;
  }
  if (n > kMaxGraph6Order) throw ParseError("graph6: order " + std::to_string(n) + " exceeds limit");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t expected = offset + (bits + 5) / 6;
  if (line.size() != expected) {
    throw ParseError("graph6: length mismatch, expected " + std::to_string(expected) +
                     " characters for n=" + std::to_string(n) + ", got " +
                     std::to_string(line.size()));
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const auto chunk = byte(offset + k / 6);
      if ((chunk >> (5 - k % 6)) & 1u) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= kMaxGraph6Order) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  unsigned chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> graphs_from_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto eol = text.find('\n', pos);
    const auto line = trim(text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos));
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    if (!line.empty()) out.push_back(from_graph6(line));
  }
  if (out.empty()) throw ParseError("graph6: no graphs in input");
  return out;
}

}  // namespace distpoly
