#include "ktsp/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "ktsp/errors.hpp"

namespace ktsp {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kSparse6Header = ">>sparse6<<";

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int char_value(std::string_view s, std::size_t pos, std::size_t base) {
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("invalid graph6 byte 0x" + std::to_string(c), base + pos);
  }
  return c - 63;
}

// Reads N(n); returns n and advances pos.
std::uint64_t read_size(std::string_view s, std::size_t& pos, std::size_t base) {
  if (pos >= s.size()) throw ParseError("missing graph6 size", base + pos);
  auto take = [&](int count) {
    std::uint64_t value = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= s.size()) throw ParseError("truncated graph6 size", base + pos);
      value = (value << 6) | static_cast<std::uint64_t>(char_value(s, pos, base));
      ++pos;
    }
    return value;
  };
  if (s[pos] != '~') return take(1);
  ++pos;
  if (pos < s.size() && s[pos] == '~') {
    ++pos;
    return take(6);
  }
  return take(3);
}

Graph parse_sparse6_body(std::string_view s, std::size_t base) {
  std::size_t pos = 1;  // skip ':'
  const std::uint64_t n64 = read_size(s, pos, base);
  if (n64 == 0) throw ParseError("graph of order 0 rejected", base);
  if (n64 > (1u << 30)) throw ParseError("graph order too large", base + 1);
  const auto n = static_cast<std::int64_t>(n64);
  int k = 1;
  while ((std::int64_t{1} << k) < n) ++k;

  std::vector<Edge> edges;
  std::int64_t v = 0;
  std::size_t byte = pos;
  int bits_left = 0;
  int current = 0;
  auto next_bit = [&](int& out) {
    if (bits_left == 0) {
      if (byte >= s.size()) return false;
      current = char_value(s, byte, base);
      ++byte;
      bits_left = 6;
    }
    --bits_left;
    out = (current >> bits_left) & 1;
    return true;
  };
  while (true) {
    int b = 0;
    if (!next_bit(b)) break;
    std::int64_t x = 0;
    bool complete = true;
    for (int i = 0; i < k; ++i) {
      int bit = 0;
      if (!next_bit(bit)) {
        complete = false;
        break;
      }
      x = (x << 1) | bit;
    }
    if (!complete) break;
    if (b == 1) ++v;
    if (x >= n || v >= n) break;
    if (x > v) {
      v = x;
    } else {
      edges.push_back({static_cast<Vertex>(x), static_cast<Vertex>(v)});
    }
  }
  for (Edge& e : edges) {
    if (e.u == e.v) throw ParseError("sparse6 self-loop not supported", base);
  }
  std::sort(edges.begin(), edges.end(), [](Edge a, Edge b) {
    return std::minmax(a.u, a.v) < std::minmax(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (std::minmax(edges[i].u, edges[i].v) == std::minmax(edges[i - 1].u, edges[i - 1].v)) {
      throw ParseError("sparse6 multigraph not supported", base);
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_graph6_at(std::string_view text, std::size_t base) {
  std::string_view s = trim_right(text);
  if (s.starts_with(kGraph6Header)) {
    s.remove_prefix(kGraph6Header.size());
    base += kGraph6Header.size();
  } else if (s.starts_with(kSparse6Header)) {
    s.remove_prefix(kSparse6Header.size());
    base += kSparse6Header.size();
  }
  if (s.empty()) throw ParseError("empty graph6 string", base);
  if (s.front() == ':') return parse_sparse6_body(s, base);

  std::size_t pos = 0;
  const std::uint64_t n64 = read_size(s, pos, base);
  if (n64 == 0) throw ParseError("graph of order 0 rejected", base);
  if (n64 > 100000) throw ParseError("graph6 order too large for a dense encoding", base);
  const auto n = static_cast<std::size_t>(n64);
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (s.size() - pos != bytes) {
    throw ParseError("graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                         std::to_string(bytes),
                     base + std::min(s.size(), pos + bytes));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const std::size_t at = pos + bit / 6;
      const int value = char_value(s, at, base);
      if ((value >> (5 - bit % 6)) & 1) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  if (bits % 6 != 0) {
    const std::size_t at = pos + bytes - 1;
    const int value = char_value(s, at, base);
    if ((value & ((1 << (6 - bits % 6)) - 1)) != 0) {
      throw ParseError("nonzero graph6 padding bits", base + at);
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

void append_size(std::string& out, std::uint64_t n) {
  auto put = [&](int count) {
    for (int i = count - 1; i >= 0; --i) {
      out.push_back(static_cast<char>(63 + ((n >> (6 * i)) & 63)));
    }
  };
  if (n <= 62) {
    put(1);
  } else if (n <= 258047) {
    out.push_back('~');
    put(3);
  } else {
    out += "~~";
    put(6);
  }
}

}  // namespace

Graph parse_graph6(std::string_view text) { return parse_graph6_at(text, 0); }

std::string encode_graph6(const Graph& g) {
  if (g.weighted()) throw PreconditionError("graph6 cannot encode weighted graphs");
  const auto n = static_cast<std::size_t>(g.order());
  std::string out;
  append_size(out, n);
  const std::size_t bits = n * (n - 1) / 2;
  std::vector<std::uint8_t> packed((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    const auto i = static_cast<std::size_t>(e.u);
    const auto j = static_cast<std::size_t>(e.v);
    const std::size_t bit = j * (j - 1) / 2 + i;
    packed[bit / 6] |= static_cast<std::uint8_t>(1u << (5 - bit % 6));
  }
  for (std::uint8_t b : packed) out.push_back(static_cast<char>(63 + b));
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> graphs;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim_right(text.substr(start, end - start));
    if (!line.empty()) graphs.push_back(parse_graph6_at(line, start));
    start = end + 1;
  }
  return graphs;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split_tokens(std::string_view line, std::size_t base) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({line.substr(start, i - start), base + start});
  }
  return tokens;
}

Vertex parse_vertex(const Token& t) {
  long long value = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0 || value > (1 << 30)) {
    throw ParseError("invalid vertex index '" + std::string(t.text) + "'", t.offset);
  }
  return static_cast<Vertex>(value);
}

template <bool Directed>
BasicGraph<Directed> parse_edge_list_impl(std::string_view text) {
  std::optional<int> declared;
  std::vector<Edge> edges;
  std::vector<Rational> weights;
  std::optional<bool> weighted;
  std::map<std::pair<Vertex, Vertex>, std::size_t> seen;
  Vertex max_index = -1;
  std::vector<std::size_t> first_line_offset;

  std::size_t start = 0;
  bool first_content_line = true;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_tokens(line, start);
    const std::size_t line_start = start;
    start = end + 1;
    if (tokens.empty()) continue;

    if (first_content_line && tokens[0].text == "n") {
      first_content_line = false;
      if (tokens.size() != 2) throw ParseError("header must be 'n <count>'", line_start);
      const Vertex count = parse_vertex(tokens[1]);
      if (count < 1) throw ParseError("declared vertex count must be at least 1", tokens[1].offset);
      declared = count;
      continue;
    }
    first_content_line = false;
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError("expected 'u v' or 'u v w'", line_start);
    }
    const bool has_weight = tokens.size() == 3;
    if (weighted && *weighted != has_weight) {
      throw ParseError("mixed weighted and unweighted lines", line_start);
    }
    weighted = has_weight;
    Vertex u = parse_vertex(tokens[0]);
    Vertex v = parse_vertex(tokens[1]);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), tokens[0].offset);
    if (declared && (u >= *declared || v >= *declared)) {
      throw ParseError("vertex index exceeds declared count " + std::to_string(*declared),
                       u >= *declared ? tokens[0].offset : tokens[1].offset);
    }
    const std::pair<int, int> key = Directed ? std::pair<int, int>{u, v} : std::pair<int, int>{std::min(u, v), std::max(u, v)};
    if (!seen.emplace(key, line_start).second) {
      throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v),
                       line_start);
    }
    if (has_weight) {
      Rational w = parse_decimal(tokens[2].text);
      if (w < 0) throw ParseError("negative weight " + std::string(tokens[2].text), tokens[2].offset);
      weights.push_back(std::move(w));
    }
    max_index = std::max({max_index, u, v});
    edges.push_back({u, v});
  }

  int order = 0;
  if (declared) {
    order = *declared;
  } else {
    if (edges.empty()) throw ParseError("edge list is empty", 0);
    order = max_index + 1;
    std::vector<bool> used(static_cast<std::size_t>(order), false);
    for (const Edge& e : edges) used[e.u] = used[e.v] = true;
    for (int v = 0; v < order; ++v) {
      if (!used[v]) {
        throw ParseError("vertex " + std::to_string(v) +
                             " never occurs; declare isolated vertices with 'n <count>'",
                         0);
      }
    }
  }
  return BasicGraph<Directed>(order, std::move(edges), std::move(weights));
}

}  // namespace

Graph parse_edge_list_graph(std::string_view text) { return parse_edge_list_impl<false>(text); }
Digraph parse_edge_list_digraph(std::string_view text) { return parse_edge_list_impl<true>(text); }

AnyGraph parse_edge_list(std::string_view text, bool directed) {
  if (directed) return parse_edge_list_digraph(text);
  return parse_edge_list_graph(text);
}

template <bool Directed>
std::string encode_edge_list(const BasicGraph<Directed>& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Edge e = g.edges()[i];
    out += std::to_string(e.u) + " " + std::to_string(e.v);
    if (g.weighted()) out += " " + to_string(g.weight(i));
    out += "\n";
  }
  return out;
}

template std::string encode_edge_list(const Graph&);
template std::string encode_edge_list(const Digraph&);

AnyGraph read_graph(std::string_view text, GraphFormat format, bool directed) {
  if (format == GraphFormat::Auto) {
    std::size_t start = 0;
    std::string_view first;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      first = trim_right(text.substr(start, end - start));
      if (!first.empty()) break;
      start = end + 1;
    }
    const bool looks_graph6 =
        !first.empty() && first.find(' ') == std::string_view::npos &&
        (first.starts_with(">>") || first.starts_with(":") ||
         std::all_of(first.begin(), first.end(), [](unsigned char c) { return c >= 63 && c <= 126; }));
    format = looks_graph6 ? GraphFormat::Graph6 : GraphFormat::EdgeList;
  }
  if (format == GraphFormat::Graph6) {
    if (directed) throw PreconditionError("graph6 encodes undirected graphs only");
    const auto graphs = parse_graph6_lines(text);
    if (graphs.size() != 1) {
      throw ParseError("expected exactly one graph6 line, found " + std::to_string(graphs.size()), 0);
    }
    return graphs.front();
  }
  return parse_edge_list(text, directed);
}

}  // namespace ktsp
