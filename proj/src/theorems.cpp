#include "ktsp/theorems.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "aggregate.hpp"
#include "ktsp/enumerate.hpp"
#include "ktsp/errors.hpp"
#include "ktsp/families.hpp"
#include "ktsp/io.hpp"

namespace ktsp {

namespace {

constexpr int kTableMaxOrder = 16;

std::string set_text(std::span<const Vertex> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

Claim make_claim(std::string name, std::string relation, Rational lhs, Rational rhs) {
  Claim c;
  c.name = std::move(name);
  c.relation = std::move(relation);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.equality = c.lhs == c.rhs;
  if (c.relation == "<=") c.holds = c.lhs <= c.rhs;
  else if (c.relation == ">=") c.holds = c.lhs >= c.rhs;
  else if (c.relation == "<") c.holds = c.lhs < c.rhs;
  else if (c.relation == ">") c.holds = c.lhs > c.rhs;
  else c.holds = c.equality;
  return c;
}

void require_unweighted(const Graph& g, const char* what) {
  if (g.weighted()) throw PreconditionError(std::string(what) + " is stated for unweighted graphs");
}

// Visits every k-set in rank order, split into chunks. visit(part, eval,
// set) fills a per-chunk Part; parts come back in chunk order.
template <class Part, class MakeEval, class Visit>
std::vector<Part> run_sets(int n, int k, int threads, const std::string& what, MakeEval&& make_eval,
                           Visit&& visit) {
  const std::uint64_t total = detail::checked_subset_count(n, k, what);
  const std::uint64_t chunks = (total + detail::kSubsetChunk - 1) / detail::kSubsetChunk;
  std::vector<Part> parts(chunks);
  parallel_for_chunks(chunks, threads, [&](std::size_t c) {
    auto eval = make_eval();
    const std::uint64_t first = c * detail::kSubsetChunk;
    const std::uint64_t last = std::min(total, first + detail::kSubsetChunk);
    std::vector<Vertex> comb = unrank_combination(n, k, first);
    for (std::uint64_t r = first; r < last; ++r) {
      visit(parts[c], eval, std::span<const Vertex>(comb));
      next_combination(comb, n);
    }
  });
  return parts;
}

std::uint32_t mask_of(std::span<const Vertex> s) {
  std::uint32_t mask = 0;
  for (Vertex v : s) mask |= 1u << v;
  return mask;
}

}  // namespace

bool TheoremVerdict::holds() const noexcept {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.holds; });
}

bool TheoremVerdict::agreement() const noexcept {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.agreement(); });
}

std::string instance_descriptor(const Graph& g) {
  if (!g.weighted() && g.order() <= 62) return "graph6:" + encode_graph6(g);
  std::string out = "edges:n=" + std::to_string(g.order()) + ";";
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Edge e = g.edges()[i];
    out += (i ? "," : "") + std::to_string(e.u) + "-" + std::to_string(e.v);
    if (g.weighted()) out += ":" + to_string(g.weight(i));
  }
  return out;
}

std::string instance_descriptor(const Digraph& d) {
  std::string out = "arcs:n=" + std::to_string(d.order()) + ";";
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Edge e = d.edges()[i];
    out += (i ? "," : "") + std::to_string(e.u) + ">" + std::to_string(e.v);
    if (d.weighted()) out += ":" + to_string(d.weight(i));
  }
  return out;
}

GraphAnalysis::GraphAnalysis(const Graph& g, int max_k, int threads)
    : g_(g), max_k_(std::clamp(max_k, 1, g.order())), threads_(threads), m_(apsp(g, threads)) {
  if (!m_.all_reachable()) throw PreconditionError("graph not connected");
  if (g_.order() <= kTableMaxOrder) {
    tsp_ = tsp_table(m_, max_k_);
    steiner_ = steiner_table(g_, m_, max_k_);
  } else if (is_tree(g_)) {
    tree_.emplace(g_);
  }
}

GraphAnalysis::Evaluator::Evaluator(const GraphAnalysis& a) : a_(a) {
  if (!a.has_tables()) {
    tsp_.emplace(a.m_);
    if (!a.tree_) steiner_.emplace(a.g_, a.m_);
  }
}

Length GraphAnalysis::Evaluator::tsp(std::span<const Vertex> s) {
  if (a_.has_tables() && static_cast<int>(s.size()) <= a_.max_k_) return a_.tsp_[mask_of(s)];
  if (!tsp_) tsp_.emplace(a_.m_);
  return tsp_->length(s);
}

Length GraphAnalysis::Evaluator::steiner(std::span<const Vertex> s) {
  if (a_.has_tables() && static_cast<int>(s.size()) <= a_.max_k_) return a_.steiner_[mask_of(s)];
  if (a_.tree_) return a_.tree_->length(s, scratch_);
  if (!steiner_) steiner_.emplace(a_.g_, a_.m_);
  return steiner_->length(s);
}

Rational GraphAnalysis::wiener() const { return ktsp::wiener(m_); }
Rational GraphAnalysis::mean_distance() const { return ktsp::mean_distance(m_); }

Rational GraphAnalysis::tsp_wiener(int k) const {
  detail::check_k_range(order(), k, 2);
  const auto agg = detail::aggregate_subsets(order(), k, threads_, false, "TSP index",
                                             [&] { return [ev = evaluator()](std::span<const Vertex> c) mutable {
                                                     return ev.tsp(c);
                                                   }; });
  return detail::aggregate_sum(agg, m_.scale());
}

Rational GraphAnalysis::steiner_wiener(int k) const {
  detail::check_k_range(order(), k, 2);
  const auto agg = detail::aggregate_subsets(order(), k, threads_, false, "Steiner index",
                                             [&] { return [ev = evaluator()](std::span<const Vertex> c) mutable {
                                                     return ev.steiner(c);
                                                   }; });
  return detail::aggregate_sum(agg, m_.scale());
}

Rational GraphAnalysis::tsp_mean(int k) const { return tsp_wiener(k) / Rational(binomial(order(), k)); }

bool is_hamiltonian_subset(const Graph& g, std::span<const Vertex> s) {
  const std::size_t k = s.size();
  if (k > 20) throw ResourceError("Hamiltonicity check supports sets of size <= 20");
  if (k <= 1) return true;
  if (k == 2) return g.has_edge(s[0], s[1]);
  std::vector<std::uint32_t> adj(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && g.has_edge(s[i], s[j])) adj[i] |= 1u << j;
    }
  }
  // ends[mask]: endpoints of paths from member 0 covering exactly mask.
  const std::size_t masks = std::size_t{1} << k;
  std::vector<std::uint32_t> ends(masks, 0);
  ends[1] = 1;
  for (std::size_t mask = 1; mask < masks; mask += 2) {
    const std::uint32_t e = ends[mask];
    if (e == 0) continue;
    for (std::uint32_t it = e; it != 0; it &= it - 1) {
      const int v = __builtin_ctz(it);
      const std::uint32_t next = adj[v] & ~static_cast<std::uint32_t>(mask);
      for (std::uint32_t jt = next; jt != 0; jt &= jt - 1) {
        const int w = __builtin_ctz(jt);
        ends[mask | (std::size_t{1} << w)] |= 1u << w;
      }
    }
  }
  return (ends[masks - 1] & adj[0]) != 0;
}

TripleConditionResult check_triple_condition(const GraphAnalysis& a) {
  const Graph& g = a.graph();
  const int n = g.order();
  if (n < 3) throw PreconditionError("triple condition requires n >= 3");
  require_unweighted(g, "the triple condition");
  const DistanceMatrix& m = a.distances();
  const std::size_t words = (g.size() + 63) / 64;
  // Edges lying on some shortest x-y path, per unordered pair.
  std::vector<std::vector<std::uint64_t>> on_path(static_cast<std::size_t>(n) * n);
  auto pair_edges = [&](Vertex x, Vertex y) -> const std::vector<std::uint64_t>& {
    auto& slot = on_path[static_cast<std::size_t>(x) * n + y];
    if (slot.empty()) {
      slot.assign(words, 0);
      const Length dxy = m.row(x)[y];
      for (std::size_t i = 0; i < g.size(); ++i) {
        const Edge e = g.edges()[i];
        const Length w = g.scaled_weight(i);
        if (m.row(x)[e.u] + w + m.row(e.v)[y] == dxy || m.row(x)[e.v] + w + m.row(e.u)[y] == dxy) {
          slot[i / 64] |= std::uint64_t{1} << (i % 64);
        }
      }
    }
    return slot;
  };
  auto intersect = [&](const std::vector<std::uint64_t>& p, const std::vector<std::uint64_t>& q) {
    for (std::size_t i = 0; i < words; ++i) {
      if (p[i] & q[i]) return true;
    }
    return false;
  };
  TripleConditionResult out;
  for (Vertex u = 0; u < n && !out.certificate; ++u) {
    for (Vertex v = u + 1; v < n && !out.certificate; ++v) {
      for (Vertex w = v + 1; w < n; ++w) {
        const Length duv = m.row(u)[v], duw = m.row(u)[w], dvw = m.row(v)[w];
        const Length sum = duv + duw + dvw;
        const Length mx = std::max({duv, duw, dvw});
        if (2 * mx >= sum) continue;
        const auto& puv = pair_edges(u, v);
        const auto& puw = pair_edges(u, w);
        const auto& pvw = pair_edges(v, w);
        if (intersect(puv, puw) || intersect(puv, pvw) || intersect(puw, pvw)) continue;
        TripleCertificate c;
        c.u = u;
        c.v = v;
        c.w = w;
        c.d_uv = m.to_rational(duv);
        c.d_uw = m.to_rational(duw);
        c.d_vw = m.to_rational(dvw);
        c.strict = true;
        c.disjoint = true;
        out.certificate = c;
        break;
      }
    }
  }
  out.equality_predicted = !out.certificate.has_value();
  out.w3 = a.steiner_wiener(3);
  out.half_bound = Rational(n - 2) * a.wiener() / 2;
  out.equality_observed = out.w3 == out.half_bound;
  return out;
}

TripleConditionResult check_triple_condition(const Graph& g) { return check_triple_condition(GraphAnalysis(g, 3)); }

namespace {

std::string triple_text(const TripleConditionResult& t) {
  if (!t.certificate) return "no strict triple with edge-disjoint shortest paths";
  const auto& c = *t.certificate;
  return "strict edge-disjoint triple (" + std::to_string(c.u) + "," + std::to_string(c.v) + "," +
         std::to_string(c.w) + ") with distances " + to_string(c.d_uv) + "," + to_string(c.d_uw) + "," +
         to_string(c.d_vw);
}

}  // namespace

TheoremVerdict verify_triple(const GraphAnalysis& a) {
  const TripleConditionResult t = check_triple_condition(a);
  TheoremVerdict v;
  v.theorem = "triple";
  v.instance = instance_descriptor(a.graph());
  v.k = 3;
  Claim c = make_claim("W_3 >= (n-2)/2 W", ">=", t.w3, t.half_bound);
  c.predicted_equality = t.equality_predicted;
  c.certificate = triple_text(t);
  v.claims.push_back(std::move(c));
  if (t.certificate) {
    v.details.emplace_back("triple", set_text(std::vector<Vertex>{t.certificate->u, t.certificate->v, t.certificate->w}));
  }
  return v;
}

TheoremVerdict check_tsp_le_2steiner(const GraphAnalysis& a, int k) {
  const Graph& g = a.graph();
  const int n = g.order();
  detail::check_k_range(n, k, 2);
  struct Part {
    __int128 tsp = 0, steiner = 0;
    std::optional<std::string> failure;
  };
  const auto parts = run_sets<Part>(
      n, k, a.threads(), "TSP/Steiner comparison", [&] { return a.evaluator(); },
      [&](Part& p, GraphAnalysis::Evaluator& ev, std::span<const Vertex> s) {
        const Length t = ev.tsp(s);
        const Length st = ev.steiner(s);
        p.tsp += t;
        p.steiner += st;
        if ((t > 2 * st || st > t) && !p.failure) {
          p.failure = "set " + set_text(s) + ": tsp = " + to_string(a.distances().to_rational(t)) +
                      ", d_k = " + to_string(a.distances().to_rational(st));
        }
      });
  __int128 tsum = 0, ssum = 0;
  std::optional<std::string> failure;
  for (const Part& p : parts) {
    tsum += p.tsp;
    ssum += p.steiner;
    if (!failure && p.failure) failure = p.failure;
  }
  const Rational scale(a.distances().scale());
  const Rational wt = Rational(to_bigint(tsum)) / scale;
  const Rational ws = Rational(to_bigint(ssum)) / scale;
  TheoremVerdict v;
  v.theorem = "tsp2steiner";
  v.instance = instance_descriptor(g);
  v.k = k;
  Claim c = make_claim("W_tsp,k <= 2 W_k", "<=", wt, 2 * ws);
  if (!g.weighted()) {
    if (k == 2) {
      c.predicted_equality = true;
      c.certificate = "k = 2";
    } else if (k == 3) {
      const TripleConditionResult t = check_triple_condition(a);
      c.predicted_equality = t.equality_predicted;
      c.certificate = triple_text(t);
    } else {
      c.predicted_equality = is_tree(g);
      c.certificate = *c.predicted_equality ? "tree" : "not a tree";
    }
  }
  if (failure) {
    c.holds = false;
    c.certificate = *failure;
  }
  v.claims.push_back(std::move(c));
  v.details.emplace_back("W_k", to_string(ws));
  return v;
}

TheoremVerdict check_tsp_le_2steiner(const Graph& g, int k) { return check_tsp_le_2steiner(GraphAnalysis(g, std::max(k, 3)), k); }

TheoremVerdict check_bounds(const GraphAnalysis& a, int k) {
  const Graph& g = a.graph();
  const int n = g.order();
  detail::check_k_range(n, k, 2);
  require_unweighted(g, "the mean bounds");
  struct Part {
    __int128 tsp = 0;
    std::uint64_t hamiltonian = 0, tight = 0;
    std::optional<std::string> first_non_hamiltonian, mismatch;
  };
  const auto parts = run_sets<Part>(
      n, k, a.threads(), "mean bounds", [&] { return a.evaluator(); },
      [&](Part& p, GraphAnalysis::Evaluator& ev, std::span<const Vertex> s) {
        const Length t = ev.tsp(s);
        p.tsp += t;
        const bool ham = is_hamiltonian_subset(g, s);
        const bool tight = t == k;
        p.hamiltonian += ham;
        p.tight += tight;
        if (!ham && !p.first_non_hamiltonian) p.first_non_hamiltonian = set_text(s);
        if (ham != tight && !p.mismatch) p.mismatch = set_text(s);
      });
  __int128 tsum = 0;
  std::uint64_t ham = 0, tight = 0;
  std::optional<std::string> non_ham, mismatch;
  for (const Part& p : parts) {
    tsum += p.tsp;
    ham += p.hamiltonian;
    tight += p.tight;
    if (!non_ham && p.first_non_hamiltonian) non_ham = p.first_non_hamiltonian;
    if (!mismatch && p.mismatch) mismatch = p.mismatch;
  }
  const Rational mu = Rational(to_bigint(tsum)) / Rational(binomial(n, k));
  TheoremVerdict v;
  v.theorem = "bounds";
  v.instance = instance_descriptor(g);
  v.k = k;
  Claim lower = make_claim("mu_tsp,k >= k", ">=", mu, Rational(k));
  lower.predicted_equality = !non_ham.has_value();
  lower.certificate = non_ham ? "non-Hamiltonian subset " + *non_ham : "every k-subset is Hamiltonian";
  Claim upper = make_claim("mu_tsp,k <= 2(k-1)(n+1)/(k+1)", "<=", mu, Rational(2 * (k - 1) * (n + 1), k + 1));
  const bool path = is_path_graph(g);
  const bool tree_all = k == n && is_tree(g);
  upper.predicted_equality = path || tree_all;
  upper.certificate = path ? "path" : tree_all ? "tree with k = n" : "neither a path nor a tree with k = n";
  Claim cross = make_claim("#Hamiltonian k-subsets == #k-subsets with tsp_k = k", "==", Rational(ham), Rational(tight));
  if (mismatch) {
    cross.holds = false;
    cross.certificate = "set " + *mismatch + " disagrees";
  }
  v.claims.push_back(std::move(lower));
  v.claims.push_back(std::move(upper));
  v.claims.push_back(std::move(cross));
  return v;
}

TheoremVerdict check_bounds(const Graph& g, int k) { return check_bounds(GraphAnalysis(g, k), k); }

TheoremVerdict check_perm_average_bound(const GraphAnalysis& a, int k) {
  const Graph& g = a.graph();
  const int n = g.order();
  detail::check_k_range(n, k, 2);
  const DistanceMatrix& m = a.distances();
  struct Part {
    __int128 tsp = 0;
    std::optional<std::string> failure;
  };
  const auto parts = run_sets<Part>(
      n, k, a.threads(), "permutation-average bound", [&] { return a.evaluator(); },
      [&](Part& p, GraphAnalysis::Evaluator& ev, std::span<const Vertex> s) {
        const Length t = ev.tsp(s);
        p.tsp += t;
        __int128 pairs = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
          for (std::size_t j = i + 1; j < s.size(); ++j) pairs += m.row(s[i])[s[j]];
        }
        // tsp <= mean cyclic sum over all orders = 2/(k-1) * sum of pair distances.
        if (static_cast<__int128>(k - 1) * t > 2 * pairs && !p.failure) {
          p.failure = "set " + set_text(s) + " beats its permutation average";
        }
      });
  __int128 tsum = 0;
  std::optional<std::string> failure;
  for (const Part& p : parts) {
    tsum += p.tsp;
    if (!failure && p.failure) failure = p.failure;
  }
  const Rational wt = Rational(to_bigint(tsum)) / Rational(m.scale());
  const Rational rhs = Rational(k) * Rational(binomial(n, k)) * a.mean_distance();
  TheoremVerdict v;
  v.theorem = "permavg";
  v.instance = instance_descriptor(g);
  v.k = k;
  Claim c = make_claim("W_tsp,k <= k C(n,k) mu(G)", "<=", wt, rhs);
  if (!g.weighted()) {
    const bool small_k = k <= 3;
    const bool star = is_star_graph(g);
    const bool clique = is_complete_graph(g);
    c.predicted_equality = small_k || star || clique;
    c.certificate = small_k ? "k in {2,3}" : star ? "star" : clique ? "clique" : "k > 3, neither star nor clique";
  }
  if (failure) {
    c.holds = false;
    c.certificate = *failure;
  }
  v.claims.push_back(std::move(c));
  return v;
}

TheoremVerdict check_perm_average_bound(const Graph& g, int k) {
  return check_perm_average_bound(GraphAnalysis(g, k), k);
}

TheoremVerdict check_wtsp3_identity(const GraphAnalysis& a) {
  const int n = a.order();
  if (n < 3) throw PreconditionError("identity requires n >= 3");
  TheoremVerdict v;
  v.theorem = "wtsp3";
  v.instance = instance_descriptor(a.graph());
  v.k = 3;
  v.claims.push_back(make_claim("W_tsp,3 = (n-2) W", "==", a.tsp_wiener(3), Rational(n - 2) * a.wiener()));
  return v;
}

TheoremVerdict check_digraph_tsp_ge_steiner(const Digraph& d, int k, int threads) {
  const int n = d.order();
  detail::check_k_range(n, k, 2);
  const DistanceMatrix m = apsp(d, threads);
  if (!m.all_reachable()) throw PreconditionError("digraph not strongly connected");
  std::vector<Length> table;
  if (n <= 14) table = digraph_steiner_table(d, m, k);
  struct Part {
    __int128 tsp = 0, steiner = 0;
    std::optional<std::string> failure;
  };
  struct Eval {
    TspSolver tsp;
  };
  const auto parts = run_sets<Part>(
      n, k, threads, "digraph TSP/Steiner comparison", [&] { return Eval{TspSolver(m)}; },
      [&](Part& p, Eval& ev, std::span<const Vertex> s) {
        const Length t = ev.tsp.length(s);
        Length st = 0;
        if (!table.empty()) {
          st = table[mask_of(s)];
        } else {
          const SteinerResult r = steiner_distance_digraph(d, VertexSet(std::vector<Vertex>(s.begin(), s.end())));
          st = static_cast<Length>(boost::multiprecision::numerator(Rational(r.value * m.scale())));
        }
        Length maxd = 0;
        for (Vertex x : s) {
          for (Vertex y : s) maxd = std::max(maxd, m.row(x)[y]);
        }
        p.tsp += t;
        p.steiner += st;
        if (p.failure) return;
        if (st > t) {
          p.failure = "set " + set_text(s) + ": d_k > tsp_k";
        } else if (t > static_cast<Length>(s.size()) * maxd) {
          p.failure = "set " + set_text(s) + ": tsp_k > k max d";
        } else if (!d.weighted() && st < maxd + 1) {
          p.failure = "set " + set_text(s) + ": d_k < max d + 1";
        }
      });
  __int128 tsum = 0, ssum = 0;
  std::optional<std::string> failure;
  for (const Part& p : parts) {
    tsum += p.tsp;
    ssum += p.steiner;
    if (!failure && p.failure) failure = p.failure;
  }
  const Rational scale(m.scale());
  const Rational wt = Rational(to_bigint(tsum)) / scale;
  const Rational ws = Rational(to_bigint(ssum)) / scale;
  TheoremVerdict v;
  v.theorem = "digraph";
  v.instance = instance_descriptor(d);
  v.k = k;
  Claim lower = make_claim("W_tsp,k >= W_k", ">=", wt, ws);
  Claim upper = make_claim("W_tsp,k <= k W_k", "<=", wt, Rational(k) * ws);
  Claim per_set = make_claim("per-set d_k <= tsp_k <= k max d" + std::string(d.weighted() ? "" : ", d_k >= max d + 1"),
                             "==", Rational(failure ? 1 : 0), Rational(0));
  per_set.certificate = failure ? *failure : "every k-set";
  if (failure) per_set.holds = false;
  v.claims.push_back(std::move(lower));
  v.claims.push_back(std::move(upper));
  v.claims.push_back(std::move(per_set));
  return v;
}

namespace {

TheoremVerdict subadditivity(const DistanceMatrix& m, const std::string& instance, int j, int k, int threads) {
  const int n = m.order();
  if (j < 2 || k < 2 || j + k - 1 > n) {
    throw PreconditionError("subadditivity requires j, k >= 2 and j + k - 1 <= n");
  }
  const Rational big = tsp_mean(m, j + k - 1, threads);
  const Rational mj = tsp_mean(m, j, threads);
  const Rational mk = tsp_mean(m, k, threads);
  TheoremVerdict v;
  v.theorem = "subadd";
  v.instance = instance;
  v.k = k;
  v.j = j;
  v.claims.push_back(make_claim("mu_tsp,j+k-1 <= mu_tsp,j + mu_tsp,k", "<=", big, mj + mk));
  v.details.emplace_back("mu_tsp,j", to_string(mj));
  v.details.emplace_back("mu_tsp,k", to_string(mk));
  return v;
}

}  // namespace

TheoremVerdict check_subadditivity(const Graph& g, int j, int k, int threads) {
  return subadditivity(apsp(g, threads), instance_descriptor(g), j, k, threads);
}

TheoremVerdict check_subadditivity(const Digraph& d, int j, int k, int threads) {
  return subadditivity(apsp(d, threads), instance_descriptor(d), j, k, threads);
}

TheoremVerdict check_tree_eccentricity(const Graph& t, int k, int threads) {
  if (!is_tree(t)) throw PreconditionError("input is not a tree");
  const EccentricityProfile et = tsp_eccentricity(t, k, threads);
  const EccentricityProfile es = steiner_eccentricity(t, k, threads);
  Rational lhs = 0, rhs = 0;
  std::optional<Vertex> bad;
  for (int v = 0; v < t.order(); ++v) {
    lhs += et.ecc[v];
    rhs += 2 * es.ecc[v];
    if (et.ecc[v] != 2 * es.ecc[v] && !bad) bad = v;
  }
  TheoremVerdict v;
  v.theorem = "treeecc";
  v.instance = instance_descriptor(t);
  v.k = k;
  Claim c = make_claim("sum ecc_tsp,k = sum 2 ecc_k (per vertex)", "==", lhs, rhs);
  if (bad) {
    c.holds = false;
    c.certificate = "vertex " + std::to_string(*bad) + ": ecc_tsp,k = " + to_string(et.ecc[*bad]) +
                    ", ecc_k = " + to_string(es.ecc[*bad]);
  } else {
    c.certificate = "every vertex";
  }
  v.claims.push_back(std::move(c));
  v.details.emplace_back("rad_tsp,k", to_string(et.radius));
  v.details.emplace_back("diam_tsp,k", to_string(et.diameter));
  return v;
}

TheoremVerdict check_spanning_monotonicity(const Graph& g, const Graph& h, int k, int threads) {
  if (g.order() != h.order()) throw PreconditionError("spanning subgraph must have the same order");
  for (const Edge& e : h.edges()) {
    if (!g.has_edge(e.u, e.v)) throw PreconditionError("H is not a subgraph of G");
  }
  const EccentricityProfile eg = tsp_eccentricity(g, k, threads);
  const EccentricityProfile eh = tsp_eccentricity(h, k, threads);
  Rational lhs = 0, rhs = 0;
  std::optional<Vertex> bad;
  for (int v = 0; v < g.order(); ++v) {
    lhs += eg.ecc[v];
    rhs += eh.ecc[v];
    if (eg.ecc[v] > eh.ecc[v] && !bad) bad = v;
  }
  TheoremVerdict v;
  v.theorem = "spanmono";
  v.instance = instance_descriptor(g) + " | " + instance_descriptor(h);
  v.k = k;
  Claim c = make_claim("sum ecc_tsp,k(G) <= sum ecc_tsp,k(H) (per vertex)", "<=", lhs, rhs);
  if (bad) {
    c.holds = false;
    c.certificate = "vertex " + std::to_string(*bad);
  }
  v.claims.push_back(std::move(c));
  return v;
}

TheoremVerdict check_ecc_observations(int n, int k, int threads) {
  if (k < 3 || k > n || n > 8) throw PreconditionError("eccentricity sweep requires 3 <= k <= n <= 8");
  const int lo = k, hi = 2 * (n - 1);
  std::set<Length> covered;
  std::vector<Length> tracked;
  bool monotone = true;
  bool in_range = true;
  auto profile = [&](const Graph& g) {
    const EccentricityProfile p = tsp_eccentricity(g, k, threads);
    std::vector<Length> out;
    for (const Rational& x : p.ecc) {
      const Length value = static_cast<Length>(boost::multiprecision::numerator(x));
      out.push_back(value);
      covered.insert(value);
      if (value < lo || value > hi) in_range = false;
    }
    return out;
  };
  // Canonical sweep: delete edges by decreasing span v - u, then increasing u.
  // Each deleted edge {u, v} closes the triangle u, u+1, v of shorter edges.
  Graph g = complete_graph(n);
  std::vector<Edge> order;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = u + 2; w < n; ++w) order.push_back({u, w});
  }
  std::stable_sort(order.begin(), order.end(), [](Edge a, Edge b) { return a.v - a.u > b.v - b.u; });
  std::vector<Length> prev = profile(g);
  const Length clique_ecc = prev[0];
  tracked.push_back(prev[0]);
  std::vector<Graph> sweep{g};
  for (const Edge& e : order) {
    g = without_edge(g, e);
    sweep.push_back(g);
    const std::vector<Length> cur = profile(g);
    for (int v = 0; v < n; ++v) {
      if (cur[v] < prev[v]) monotone = false;
    }
    tracked.push_back(cur[0]);
    prev = cur;
  }
  const Length path_ecc = prev[0];
  // Broader search over triangle-edge deletions when the sweep skips values.
  std::uint64_t searched = 0;
  constexpr std::uint64_t kSearchBudget = 20000;
  if (static_cast<Length>(covered.size()) < hi - lo + 1) {
    std::set<std::uint64_t> seen;
    std::vector<std::uint64_t> frontier;
    for (const Graph& s : sweep) {
      const std::uint64_t mask = edge_mask_of(s);
      if (seen.insert(mask).second) frontier.push_back(mask);
    }
    while (!frontier.empty() && searched < kSearchBudget && static_cast<Length>(covered.size()) < hi - lo + 1) {
      std::vector<std::uint64_t> next;
      for (std::uint64_t mask : frontier) {
        const Graph cur = graph_from_edge_mask(n, mask);
        for (const Edge& e : cur.edges()) {
          bool triangle = false;
          for (Vertex w = 0; w < n && !triangle; ++w) triangle = cur.has_edge(e.u, w) && cur.has_edge(e.v, w);
          if (!triangle) continue;
          const Graph smaller = without_edge(cur, e);
          const std::uint64_t m2 = edge_mask_of(smaller);
          if (!seen.insert(m2).second) continue;
          profile(smaller);
          ++searched;
          next.push_back(m2);
          if (searched >= kSearchBudget) break;
        }
        if (searched >= kSearchBudget) break;
      }
      frontier = std::move(next);
    }
  }
  std::vector<Length> missing;
  for (Length x = lo; x <= hi; ++x) {
    if (!covered.count(x)) missing.push_back(x);
  }
  TheoremVerdict v;
  v.theorem = "ecc";
  v.instance = "sweep:n=" + std::to_string(n);
  v.k = k;
  Claim mono = make_claim("ecc_tsp,k non-decreasing along the deletion sweep", "==", Rational(monotone ? 1 : 0),
                          Rational(1));
  mono.certificate = "every vertex, " + std::to_string(order.size()) + " deletions";
  Claim ends_lo = make_claim("ecc_tsp,k(K_n, 0) = k", "==", Rational(clique_ecc), Rational(k));
  Claim ends_hi = make_claim("ecc_tsp,k(P_n, endpoint) = 2(n-1)", "==", Rational(path_ecc), Rational(hi));
  Claim range = make_claim("every observed value lies in [k, 2(n-1)]", "==", Rational(in_range ? 1 : 0), Rational(1));
  Claim cover = make_claim("values of [k, 2(n-1)] attained", "==", Rational(static_cast<long>(hi - lo + 1 - missing.size())),
                           Rational(hi - lo + 1));
  if (missing.empty()) {
    cover.certificate = searched == 0 ? "canonical sweep" : "sweep plus " + std::to_string(searched) + " searched graphs";
  } else {
    std::string list;
    for (Length x : missing) list += (list.empty() ? "" : ",") + std::to_string(x);
    cover.certificate = "not attained after searching " + std::to_string(searched) + " graphs: " + list;
  }
  v.claims.push_back(std::move(mono));
  v.claims.push_back(std::move(ends_lo));
  v.claims.push_back(std::move(ends_hi));
  v.claims.push_back(std::move(range));
  v.claims.push_back(std::move(cover));
  std::string trace;
  for (Length x : tracked) trace += (trace.empty() ? "" : ",") + std::to_string(x);
  v.details.emplace_back("tracked_vertex_0", trace);
  v.details.emplace_back("searched_graphs", std::to_string(searched));
  return v;
}

}  // namespace ktsp
