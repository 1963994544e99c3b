#include "sgp/construct.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "sgp/error.hpp"

namespace sgp {

namespace {

[[noreturn]] void post_failed(const std::string& what) {
  throw Error(ErrorKind::PostconditionFailed, what);
}

std::string join(std::span<const Int> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

bool is_proper(const NumericalSemigroup& s) { return s.multiplicity() > 1; }

}  // namespace

RelativeIdeal maximal_ideal(const NumericalSemigroup& s) {
  RelativeIdeal m;
  m.conductor = std::max<Int>(s.frobenius() + 1, 1);
  for (Int x = 1; x < m.conductor; ++x) {
    if (s.contains(x)) m.below_conductor.push_back(x);
  }
  return m;
}

bool duplication_contains(const DuplicationSpec& spec, Int x) {
  if (x < 0) return false;
  if (x % 2 == 0) return spec.base.contains(x / 2);
  const Int e = x - spec.b;
  return e >= 0 && spec.ideal.contains(e / 2) && (e % 2 == 0);
}

NumericalSemigroup numerical_duplication(const DuplicationSpec& spec) {
  const NumericalSemigroup& s = spec.base;
  const RelativeIdeal& e = spec.ideal;
  if (spec.b % 2 == 0) throw Error(ErrorKind::BNotOdd, std::to_string(spec.b) + " is even");
  if (!s.contains(spec.b)) throw Error(ErrorKind::BNotInS, std::to_string(spec.b) + " is not in S");

  // Everything at or above max(F(S), conductor(E)) + 1 is in both sets.
  const Int top = std::max(s.frobenius(), e.conductor) + 1;
  std::vector<Int> members;
  for (Int x = 0; x <= top; ++x) {
    if (!e.contains(x)) continue;
    if (!s.contains(x)) throw Error(ErrorKind::NotAnIdeal, std::to_string(x) + " is in E but not in S");
    members.push_back(x);
  }
  for (Int x : e.below_conductor) {
    if (x < 0) throw Error(ErrorKind::NotAnIdeal, "E contains a negative element");
    for (Int n : s.generators()) {
      if (!e.contains(x + n)) {
        throw Error(ErrorKind::NotAnIdeal, "E + S is not contained in E at " + std::to_string(x + n));
      }
    }
  }

  // 2*S is generated by 2*n_i; the odd part by 2e + b for e below
  // conductor(E) + m, since larger elements of E lie in E + m.
  std::vector<Int> gens;
  for (Int n : s.generators()) gens.push_back(2 * n);
  const Int window = e.conductor + s.multiplicity();
  for (Int x = 0; x < window; ++x) {
    if (e.contains(x)) gens.push_back(2 * x + spec.b);
  }
  NumericalSemigroup d(gens);

  if (is_proper(s) && e == maximal_ideal(s)) {
    if (d.embedding_dimension() != 2 * s.embedding_dimension()) {
      post_failed("embedding dimension did not double for <" + join(s.generators()) + ">");
    }
    if (is_almost_symmetric(s)) {
      if (!is_almost_symmetric(d)) post_failed("duplication of an almost symmetric S is not almost symmetric");
      if (d.type() != 2 * s.type() + 1) {
        post_failed("type " + std::to_string(d.type()) + " != 2t(S)+1 = " +
                    std::to_string(2 * s.type() + 1));
      }
    }
  }
  return d;
}

Int smallest_odd_element(const NumericalSemigroup& s) {
  for (Int x = 1;; x += 2) {
    if (s.contains(x)) return x;
  }
}

std::vector<NumericalSemigroup> duplication_tower(const NumericalSemigroup& s, int depth,
                                                  const BSelector& select_b) {
  if (depth < 0) throw Error(ErrorKind::PreconditionViolated, "depth must be nonnegative");
  if (!is_proper(s)) throw Error(ErrorKind::PreconditionViolated, "S = N has no proper duplication tower");
  if (!is_almost_symmetric(s)) throw Error(ErrorKind::NotAlmostSymmetric, "<" + join(s.generators()) + ">");
  std::vector<NumericalSemigroup> chain{s};
  const Int base_excess = static_cast<Int>(s.type()) - 2 * static_cast<Int>(s.embedding_dimension());
  for (int i = 1; i <= depth; ++i) {
    const NumericalSemigroup& prev = chain.back();
    DuplicationSpec spec{prev, maximal_ideal(prev), select_b(prev)};
    NumericalSemigroup next = numerical_duplication(spec);
    if (!is_almost_symmetric(next)) post_failed("level " + std::to_string(i) + " is not almost symmetric");
    const Int pow = Int{1} << i;
    const Int expected = pow * base_excess + pow - 1;
    const Int actual = static_cast<Int>(next.type()) - 2 * static_cast<Int>(next.embedding_dimension());
    if (actual != expected) {
      post_failed("level " + std::to_string(i) + ": t - 2nu = " + std::to_string(actual) +
                  ", expected " + std::to_string(expected));
    }
    chain.push_back(std::move(next));
  }
  return chain;
}

std::array<Int, 4> backelin_generators(Int t) {
  const Int s = (3 * t + 2) * (3 * t + 2) + 3;
  return {s, s + 3, s + 3 * t + 1, s + 3 * t + 2};
}

Int backelin_f(Int t) {
  const auto n = backelin_generators(t);
  return (3 * t + 3) * n[3] - n[0];
}

IntMatrix backelin_rf_template(Int t, Int lambda) {
  return IntMatrix(4, {
      -1, 0, 3 * lambda, 3 * t + 3 - 3 * lambda,
      0, -1, 3 * (lambda - 1), 3 * t + 3 - 3 * (lambda - 1),
      t + 4 + lambda, 2 * t - lambda, -1, 0,
      2 * t + 3 + lambda, t - lambda, 1, -1,
  });
}

NumericalSemigroup backelin(Int t) {
  if (t < 2) throw Error(ErrorKind::TTooSmall, "T = " + std::to_string(t) + " < 2");
  const auto gens = backelin_generators(t);
  NumericalSemigroup s(gens);
  if (s.embedding_dimension() != 4) post_failed("Backelin S_T is not 4-generated");
  const Int f = backelin_f(t);
  for (Int lambda = 1; lambda <= t; ++lambda) {
    const Int p = f - 3 * lambda;
    if (!s.is_pseudo_frobenius(p)) post_failed("f - 3*" + std::to_string(lambda) + " is not in PF(S)");
    const RFMatrix expected{RFKind::Plus, p, backelin_rf_template(t, lambda), {}};
    if (!rf_plus_set(s, p).contains(expected)) {
      post_failed("template RF+ matrix missing for lambda = " + std::to_string(lambda));
    }
  }
  return s;
}

std::array<Int, 6> dim6_generators(Int t, Int d, Int k) {
  const Int sq = (t + 1) * (t + 1);
  const Int n1 = k * (sq + 1);
  const Int n2 = k * (sq + t);
  const Int n3 = k * (sq + 2 * t + 4);
  return {n1, n2, n3, n1 + d, n2 + d, n3 + d};
}

Int dim6_f(Int t, Int k) { return k * (t * (t + 1) * (t + 2) - 1); }

IntMatrix dim6_rf_template(Int t, Int l) {
  return IntMatrix(6, {
      -1, t + 1 - l, 0, 0, l, 0,
      0, -1, t - l, 0, 0, l,
      t + 2 - l, 0, -1, l, 0, 0,
      0, t - l, 0, -1, l + 1, 0,
      0, 0, t - 1 - l, 0, -1, l + 1,
      t + 1 - l, 0, 0, l + 1, 0, -1,
  });
}

IntMatrix to_sorted_order(const IntMatrix& a, std::span<const Int> construction_order) {
  const std::size_t n = a.order;
  std::vector<Int> sorted(construction_order.begin(), construction_order.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) {
    pos[i] = static_cast<std::size_t>(
        std::lower_bound(sorted.begin(), sorted.end(), construction_order[i]) - sorted.begin());
  }
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(pos[i], pos[j]) = a(i, j);
  }
  return out;
}

NumericalSemigroup family_dim6(Int t, Int d, Int k) {
  auto violated = [](const std::string& what) {
    throw Error(ErrorKind::PreconditionViolated, what);
  };
  if (t < 1 || d < 1 || k < 1) violated("T, d, k must be positive");
  if (k < t) violated("k >= T fails: k = " + std::to_string(k));
  if (d < t * t) violated("d >= T^2 fails: d = " + std::to_string(d));
  if (const Int g = std::gcd(d, k); g != 1) violated("gcd(d,k) = " + std::to_string(g));
  if (t % 5 == 1) violated("T = " + std::to_string(t) + " is 1 mod 5");

  const auto gens = dim6_generators(t, d, k);
  std::optional<NumericalSemigroup> built;
  try {
    built.emplace(gens);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::GcdNotOne) post_failed(e.what());
    throw;
  }
  const NumericalSemigroup& s = *built;
  if (s.embedding_dimension() != 6) post_failed("family member is not 6-generated");
  const Int f = dim6_f(t, k);
  for (Int lambda = 0; lambda < t; ++lambda) {
    const Int p = f + lambda * d;
    if (!s.is_pseudo_frobenius(p)) {
      post_failed("f + " + std::to_string(lambda) + "d = " + std::to_string(p) + " is not in PF(S)");
    }
    const RFMatrix expected{RFKind::Plus, p, to_sorted_order(dim6_rf_template(t, lambda), gens), {}};
    if (!rf_plus_set(s, p).contains(expected)) {
      post_failed("template RF+ matrix missing for lambda = " + std::to_string(lambda));
    }
  }
  return s;
}

}  // namespace sgp
