#include "ktsp/families.hpp"

#include <charconv>

#include "ktsp/errors.hpp"

namespace ktsp {

namespace {

constexpr std::array<std::pair<std::string_view, FamilyId>, 7> kNames{{
    {"path", FamilyId::Path},
    {"cycle", FamilyId::Cycle},
    {"star", FamilyId::Star},
    {"clique", FamilyId::Clique},
    {"kab", FamilyId::Kab},
    {"broom", FamilyId::Broom},
    {"dp", FamilyId::Dp},
}};

std::size_t arity(FamilyId id) { return id == FamilyId::Kab || id == FamilyId::Dp ? 2 : 1; }

void require(bool ok, const std::string& constraint) {
  if (!ok) throw PreconditionError("family parameter out of range: requires " + constraint);
}

}  // namespace

std::string_view family_name(FamilyId id) {
  for (const auto& [name, value] : kNames) {
    if (value == id) return name;
  }
  return "?";
}

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  FamilySpec spec;
  bool found = false;
  for (const auto& [n, value] : kNames) {
    if (n == name) {
      spec.id = value;
      found = true;
    }
  }
  if (!found) {
    throw ParseError("unknown family '" + std::string(name) +
                         "' (expected path, cycle, star, clique, kab, broom or dp)",
                     0);
  }
  if (colon == std::string_view::npos) throw ParseError("family spec needs ':' and parameters", name.size());
  std::size_t pos = colon + 1;
  while (true) {
    const auto comma = text.find(',', pos);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    int value = 0;
    const auto* first = text.data() + pos;
    const auto* last = text.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw ParseError("invalid family parameter '" + std::string(text.substr(pos, end - pos)) + "'", pos);
    }
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (spec.params.size() != arity(spec.id)) {
    throw ParseError("family '" + std::string(name) + "' takes " + std::to_string(arity(spec.id)) +
                         " parameter(s)",
                     colon + 1);
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out(family_name(id));
  for (std::size_t i = 0; i < params.size(); ++i) {
    out += (i == 0 ? ":" : ",") + std::to_string(params[i]);
  }
  return out;
}

void FamilySpec::validate() const {
  require(params.size() == arity(id), std::to_string(arity(id)) + " parameter(s)");
  switch (id) {
    case FamilyId::Path:
    case FamilyId::Star:
    case FamilyId::Clique:
      require(params[0] >= 1, "n >= 1");
      break;
    case FamilyId::Cycle:
      require(params[0] >= 3, "n >= 3 for a cycle");
      break;
    case FamilyId::Kab:
      require(params[0] >= 1 && params[1] >= 1, "a >= 1 and b >= 1");
      break;
    case FamilyId::Broom:
      require(params[0] >= 6 && params[0] % 6 == 0, "d >= 6 and d = 0 (mod 6)");
      break;
    case FamilyId::Dp:
      require(params[1] >= 3, "d >= 3");
      require(params[0] >= params[1] + 1, "n >= d + 1");
      break;
  }
}

int FamilySpec::order() const {
  validate();
  switch (id) {
    case FamilyId::Kab:
      return params[0] + params[1];
    case FamilyId::Broom:
      return 2 * params[0] + 1;
    default:
      return params[0];
  }
}

AnyGraph make_family(const FamilySpec& spec) {
  spec.validate();
  const auto& p = spec.params;
  switch (spec.id) {
    case FamilyId::Path:
      return path_graph(p[0]);
    case FamilyId::Cycle:
      return cycle_graph(p[0]);
    case FamilyId::Star:
      return star_graph(p[0]);
    case FamilyId::Clique:
      return complete_graph(p[0]);
    case FamilyId::Kab:
      return complete_bipartite(p[0], p[1]);
    case FamilyId::Broom:
      return broom_tree(p[0]).graph;
    case FamilyId::Dp:
      return dp_digraph(p[0], p[1]).graph;
  }
  throw PreconditionError("unknown family");
}

Graph path_graph(int n) {
  require(n >= 1, "n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  require(n >= 3, "n >= 3 for a cycle");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, std::move(edges));
}

Graph star_graph(int n) {
  require(n >= 1, "n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  require(n >= 1, "n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "a >= 1 and b >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
  }
  return Graph(a + b, std::move(edges));
}

BroomTree broom_tree(int d) {
  require(d >= 6 && d % 6 == 0, "d >= 6 and d = 0 (mod 6)");
  BroomTree t;
  t.handle_length = d / 2 - 1;
  t.leaves_per_tip = d / 6 + 1;
  std::vector<Edge> edges;
  Vertex next = 1;
  for (int b = 0; b < 3; ++b) {
    Vertex prev = t.center;
    for (int i = 0; i < t.handle_length; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
    t.tips[b] = prev;
    for (int i = 0; i < t.leaves_per_tip; ++i) {
      edges.push_back({prev, next});
      t.leaves.push_back(next++);
    }
  }
  t.graph = Graph(next, std::move(edges));
  return t;
}

DpDigraph dp_digraph(int n, int d) {
  require(d >= 3, "d >= 3");
  require(n >= d + 1, "n >= d + 1");
  std::vector<Edge> arcs;
  DpDigraph out;
  for (Vertex v = 0; v <= d - 2; ++v) out.path.push_back(v);
  for (Vertex v = 0; v + 1 <= d - 2; ++v) arcs.push_back({v, v + 1});
  for (Vertex l = d - 1; l < n; ++l) {
    out.leaves.push_back(l);
    arcs.push_back({d - 2, l});
    arcs.push_back({l, 0});
  }
  out.graph = Digraph(n, std::move(arcs));
  return out;
}

Digraph directed_cycle(int n) {
  require(n >= 2, "n >= 2 for a directed cycle");
  std::vector<Edge> arcs;
  for (Vertex v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
  return Digraph(n, std::move(arcs));
}

}  // namespace ktsp
