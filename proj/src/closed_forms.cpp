#include "ktsp/closed_forms.hpp"

#include <stdexcept>

#include "ktsp/errors.hpp"
#include "ktsp/metric.hpp"
#include "ktsp/tsp.hpp"

namespace ktsp {

namespace {

void require_range(int n, int k) {
  if (k < 2 || k > n) {
    throw PreconditionError("requires 2 <= k <= n (k = " + std::to_string(k) + ", n = " + std::to_string(n) + ")");
  }
}

Rational power(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

BigInt wtspk_clique(int n, int k) {
  require_range(n, k);
  return BigInt(k) * binomial(n, k);
}

BigInt wtspk_star(int n, int k) {
  require_range(n, k);
  return 2 * BigInt(k) * binomial(n - 1, k) + 2 * BigInt(k - 1) * binomial(n - 1, k - 1);
}

BigInt wtspk_path(int n, int k) {
  require_range(n, k);
  const BigInt num = binomial(n, k) * 2 * (k - 1) * (n + 1);
  if (num % (k + 1) != 0) throw std::logic_error("path formula is not integral");
  return num / (k + 1);
}

BigInt wtspk_cycle_exact(int n, int k) {
  if (n < 3) throw PreconditionError("cycle requires n >= 3");
  require_range(n, k);
  BigInt inside = 0;  // sets with a minimal arc shorter than n/2
  BigInt total = 0;
  for (int len = k - 1; 2 * len < n; ++len) {
    const BigInt count = BigInt(n) * binomial(len - 1, k - 2);
    inside += count;
    total += count * 2 * len;
  }
  total += (binomial(n, k) - inside) * n;
  return total;
}

Rational mutspk_cycle_asymptotic(int k) {
  if (k < 2) throw PreconditionError("requires k >= 2");
  return 1 - power(Rational(1, 2), k - 1);
}

Rational broom_integral(int k) {
  if (k < 2) throw PreconditionError("requires k >= 2");
  auto antiderivative = [k](const Rational& x) {
    return x - power(x, k + 1) / (k + 1) + power(1 - x, k + 1) / (k + 1);
  };
  return 6 * (antiderivative(Rational(1, 3)) - antiderivative(Rational(1, 12)));
}

std::pair<BigInt, BigInt> wtsp3_identity(const Graph& g, int threads) {
  if (g.order() < 3) throw PreconditionError("requires n >= 3");
  if (g.weighted()) throw PreconditionError("identity is stated for unweighted graphs");
  const DistanceMatrix m = apsp(g, threads);
  const Rational lhs = tsp_wiener(m, 3, threads);
  const Rational rhs = Rational(g.order() - 2) * wiener(m);
  return {boost::multiprecision::numerator(lhs), boost::multiprecision::numerator(rhs)};
}

FormulaValue formula(const FamilySpec& family, int k) {
  family.validate();
  FormulaValue out;
  out.family = family;
  out.k = k;
  const int n = family.order();
  switch (family.id) {
    case FamilyId::Clique:
      out.exact = Rational(wtspk_clique(n, k));
      break;
    case FamilyId::Star:
      out.exact = Rational(wtspk_star(n, k));
      break;
    case FamilyId::Path:
      out.exact = Rational(wtspk_path(n, k));
      break;
    case FamilyId::Cycle:
      out.exact = Rational(wtspk_cycle_exact(n, k));
      out.asymptotic = mutspk_cycle_asymptotic(k);
      out.asymptotic_unit = "n";
      break;
    case FamilyId::Broom:
      require_range(n, k);
      out.asymptotic = 2 * broom_integral(k);
      out.asymptotic_unit = "d";
      break;
    default:
      throw PreconditionError("no closed form for family '" + std::string(family_name(family.id)) + "'");
  }
  return out;
}

}  // namespace ktsp
