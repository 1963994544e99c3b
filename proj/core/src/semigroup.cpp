#include "sgp/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sgp/error.hpp"

namespace sgp {

namespace {

std::vector<Int> suffix_gcds(std::span<const Int> gens) {
  std::vector<Int> out(gens.size() + 1, 0);
  for (std::size_t i = gens.size(); i-- > 0;) out[i] = std::gcd(out[i + 1], gens[i]);
  return out;
}

// Depth-first over generator indices, largest coefficient first, so that the
// emitted vectors are lexicographically descending.
bool factor_dfs(std::span<const Int> gens, std::span<const Int> gcds, std::size_t idx,
                Int remaining, std::vector<Int>& coeffs,
                const std::function<bool(std::span<const Int>)>& visit) {
  const Int g = gens[idx];
  if (idx + 1 == gens.size()) {
    if (remaining % g != 0) return true;
    coeffs[idx] = remaining / g;
    const bool keep_going = visit(coeffs);
    coeffs[idx] = 0;
    return keep_going;
  }
  const Int next_gcd = gcds[idx + 1];
  for (Int c = remaining / g; c >= 0; --c) {
    const Int rest = remaining - c * g;
    if (rest % next_gcd != 0) continue;
    coeffs[idx] = c;
    if (!factor_dfs(gens, gcds, idx + 1, rest, coeffs, visit)) {
      coeffs[idx] = 0;
      return false;
    }
  }
  coeffs[idx] = 0;
  return true;
}

}  // namespace

void for_each_factorization(std::span<const Int> gens, Int x,
                            const std::function<bool(std::span<const Int>)>& visit) {
  if (x < 0 || gens.empty()) return;
  const auto gcds = suffix_gcds(gens);
  if (x % gcds[0] != 0) return;
  std::vector<Int> coeffs(gens.size(), 0);
  factor_dfs(gens, gcds, 0, x, coeffs, visit);
}

std::vector<Factorization> factorizations(std::span<const Int> gens, Int x) {
  std::vector<Factorization> out;
  for_each_factorization(gens, x, [&](std::span<const Int> c) {
    out.push_back({std::vector<Int>(c.begin(), c.end()), x});
    return true;
  });
  return out;
}

void relax_apery(std::vector<Int>& apery, Int generator) {
  const Int m = static_cast<Int>(apery.size());
  const Int step = generator % m;
  const Int cycles = std::gcd(step, m);
  const Int cycle_len = m / cycles;
  for (Int start = 0; start < cycles; ++start) {
    // A single lap starting from the cheapest residue of the cycle reaches
    // the fixpoint.
    Int best = start;
    for (Int k = 0, r = start; k < cycle_len; ++k, r = (r + step) % m) {
      if (apery[r] < apery[best]) best = r;
    }
    if (apery[best] >= kUnreachable) continue;
    Int r = best;
    for (Int k = 0; k < cycle_len; ++k) {
      const Int next = (r + step) % m;
      apery[next] = std::min(apery[next], apery[r] + generator);
      r = next;
    }
  }
}

NumericalSemigroup::NumericalSemigroup(std::initializer_list<Int> raw_generators)
    : NumericalSemigroup(std::span<const Int>(raw_generators.begin(), raw_generators.size())) {}

NumericalSemigroup::NumericalSemigroup(std::span<const Int> raw_generators) {
  if (raw_generators.empty()) throw Error(ErrorKind::EmptyInput, "no generators given");
  std::vector<Int> raw(raw_generators.begin(), raw_generators.end());
  Int g = 0;
  for (Int x : raw) {
    if (x < 1) throw Error(ErrorKind::InvalidGenerator, std::to_string(x) + " is not positive");
    if (x > kMaxGenerator) throw Error(ErrorKind::TooLarge, std::to_string(x) + " exceeds 2^31");
    g = std::gcd(g, x);
  }
  if (g != 1) throw Error(ErrorKind::GcdNotOne, "gcd of generators is " + std::to_string(g));
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  const Int m = raw.front();
  if (m > kMaxMultiplicity) {
    throw Error(ErrorKind::TooLarge, "multiplicity " + std::to_string(m) + " exceeds 2^24");
  }
  apery_.assign(static_cast<std::size_t>(m), kUnreachable);
  apery_[0] = 0;
  generators_.push_back(m);
  // Ascending order: a candidate can only be represented by smaller ones.
  for (std::size_t i = 1; i < raw.size(); ++i) {
    const Int x = raw[i];
    if (apery_[static_cast<std::size_t>(x % m)] <= x) continue;
    generators_.push_back(x);
    relax_apery(apery_, x);
  }

  Int max_w = 0;
  for (Int w : apery_) {
    max_w = std::max(max_w, w);
    genus_ += w / m;
  }
  frobenius_ = max_w - m;

  for (Int w : apery_) {
    bool maximal = true;
    for (std::size_t i = 1; i < generators_.size() && maximal; ++i) {
      const Int up = w + generators_[i];
      if (apery_[static_cast<std::size_t>(up % m)] == up) maximal = false;
    }
    if (maximal) pseudo_frobenius_.push_back(w - m);
  }
  std::sort(pseudo_frobenius_.begin(), pseudo_frobenius_.end());
}

std::vector<Int> NumericalSemigroup::apery_set(Int n) const {
  if (n <= 0 || !contains(n)) {
    throw Error(ErrorKind::NotAMember, std::to_string(n) + " is not a nonzero element");
  }
  if (n > kMaxMultiplicity) throw Error(ErrorKind::TooLarge, "Apéry modulus exceeds 2^24");
  std::vector<Int> table(static_cast<std::size_t>(n), kUnreachable);
  table[0] = 0;
  for (Int g : generators_) relax_apery(table, g);
  return table;
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (Int x = 1; x <= frobenius_; ++x) {
    if (!contains(x)) out.push_back(x);
  }
  return out;
}

bool NumericalSemigroup::is_pseudo_frobenius(Int x) const noexcept {
  return std::binary_search(pseudo_frobenius_.begin(), pseudo_frobenius_.end(), x);
}

std::vector<Factorization> NumericalSemigroup::factorizations(Int x) const {
  return sgp::factorizations(generators_, x);
}

}  // namespace sgp
