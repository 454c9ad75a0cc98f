#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ktsp/families.hpp"
#include "ktsp/graph.hpp"
#include "ktsp/rational.hpp"

namespace ktsp {

/// k * C(n,k), 2 <= k <= n.
BigInt wtspk_clique(int n, int k);
/// 2k C(n-1,k) + 2(k-1) C(n-1,k-1) for the star of order n.
BigInt wtspk_star(int n, int k);
/// C(n,k) * 2(k-1)(n+1)/(k+1); always integral.
BigInt wtspk_path(int n, int k);
/// Exact W_tsp,k(C_n), n >= 3, 2 <= k <= n. A set whose minimal enclosing
/// arc has L < n/2 edges costs 2L; every other set costs n.
BigInt wtspk_cycle_exact(int n, int k);
/// 1 - 2^(1-k): the limit of mu_tsp,k(C_n) / n.
Rational mutspk_cycle_asymptotic(int k);
/// 6 * integral over [1/12, 1/3] of (1 - x^k - (1-x)^k) dx. The broom tree
/// heuristic estimate is broom_integral(k) * 2d.
Rational broom_integral(int k);

/// (W_tsp,3(G), (n-2) W(G)); equal for every connected G.
std::pair<BigInt, BigInt> wtsp3_identity(const Graph& g, int threads = 1);

struct FormulaValue {
  FamilySpec family;
  int k = 0;
  /// W_tsp,k when the family has a closed form.
  std::optional<Rational> exact;
  /// Leading coefficient of mu_tsp,k: per n for cycles, per d for brooms.
  std::optional<Rational> asymptotic;
  std::string asymptotic_unit;
};

/// Throws PreconditionError when the family has neither an exact nor an
/// asymptotic formula.
FormulaValue formula(const FamilySpec& family, int k);

}  // namespace ktsp
