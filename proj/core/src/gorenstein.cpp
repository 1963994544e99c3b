#include "sgp/gorenstein.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "sgp/error.hpp"

namespace sgp {

namespace {

// Builds an ideal from its members on [0, hi]; everything above hi is a
// member by assumption.
RelativeIdeal from_window(const std::vector<char>& member, Int hi) {
  RelativeIdeal out;
  Int c = hi + 1;
  while (c - 1 >= 0 && member[static_cast<std::size_t>(c - 1)]) --c;
  out.conductor = c;
  for (Int x = 0; x < c; ++x) {
    if (member[static_cast<std::size_t>(x)]) out.below_conductor.push_back(x);
  }
  return out;
}

}  // namespace

bool RelativeIdeal::contains(Int x) const {
  if (x >= conductor) return true;
  return std::binary_search(below_conductor.begin(), below_conductor.end(), x);
}

RelativeIdeal as_ideal(const NumericalSemigroup& s) {
  const Int f = s.frobenius();
  std::vector<char> member(static_cast<std::size_t>(f + 1), 0);
  for (Int x = 0; x <= f; ++x) member[static_cast<std::size_t>(x)] = s.contains(x);
  return from_window(member, f);
}

RelativeIdeal canonical_ideal(const NumericalSemigroup& s) {
  const Int f = s.frobenius();
  std::vector<char> member(static_cast<std::size_t>(f + 1), 0);
  for (Int x = 0; x <= f; ++x) member[static_cast<std::size_t>(x)] = !s.contains(f - x);
  return from_window(member, f);
}

RelativeIdeal dual_of_canonical(const NumericalSemigroup& s) {
  const Int f = s.frobenius();
  const RelativeIdeal k = canonical_ideal(s);
  std::vector<char> member(static_cast<std::size_t>(f + 1), 0);
  // Negative x fail at k = 0; for x in [0, F] only k <= F - x can land on a gap.
  // K(S) has conductor F + 1, so its small elements cover [0, F].
  for (Int x = 0; x <= f; ++x) {
    bool ok = true;
    for (Int kk : k.below_conductor) {
      if (kk > f - x) break;
      if (!s.contains(x + kk)) {
        ok = false;
        break;
      }
    }
    member[static_cast<std::size_t>(x)] = ok;
  }
  return from_window(member, f);
}

bool is_symmetric(const NumericalSemigroup& s) {
  const bool by_ideal = canonical_ideal(s) == as_ideal(s);
  const bool by_type = s.type() == 1;
  if (by_ideal != by_type) throw std::logic_error("symmetry routes disagree");
  return by_ideal;
}

bool almost_symmetric_via_pf_duality(const NumericalSemigroup& s) {
  const Int f = s.frobenius();
  for (Int p : s.pseudo_frobenius()) {
    if (p != f && !s.is_pseudo_frobenius(f - p)) return false;
  }
  return true;
}

bool is_almost_symmetric(const NumericalSemigroup& s) {
  const Int f = s.frobenius();
  bool direct = true;
  for (Int n : s.generators()) {
    for (Int p : s.pseudo_frobenius()) {
      if (!s.contains(n + f - p)) {
        direct = false;
        break;
      }
    }
    if (!direct) break;
  }
  if (direct != almost_symmetric_via_pf_duality(s)) {
    throw std::logic_error("almost-symmetry routes disagree");
  }
  return direct;
}

std::vector<std::vector<Int>> ng_candidates(const NumericalSemigroup& s) {
  const auto& pf = s.pseudo_frobenius();
  std::vector<std::vector<Int>> out;
  out.reserve(s.embedding_dimension());
  for (Int n : s.generators()) {
    std::vector<Int> t;
    for (auto g = pf.rbegin(); g != pf.rend(); ++g) {
      const bool ok = std::all_of(pf.begin(), pf.end(),
                                  [&](Int p) { return s.contains(n + *g - p); });
      if (ok) t.push_back(*g);
    }
    out.push_back(std::move(t));
  }
  return out;
}

bool is_nearly_gorenstein(const NumericalSemigroup& s) {
  const auto t = ng_candidates(s);
  return std::none_of(t.begin(), t.end(), [](const auto& c) { return c.empty(); });
}

bool nearly_gorenstein_via_trace(const NumericalSemigroup& s) {
  const Int f = s.frobenius();
  const RelativeIdeal k = canonical_ideal(s);
  const RelativeIdeal dual = dual_of_canonical(s);
  std::vector<Int> dual_small = dual.below_conductor;
  for (Int y = dual.conductor; y <= f; ++y) dual_small.push_back(y);
  // Elements of M(S) above F are in the trace as 0 + s; only s <= F matter.
  for (Int x = 1; x <= f; ++x) {
    if (!s.contains(x)) continue;
    bool hit = false;
    for (Int y : dual_small) {
      if (y > x) break;
      if (k.contains(x - y)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

bool is_ng_vector(const NumericalSemigroup& s, const std::vector<Int>& entries) {
  if (entries.size() != s.embedding_dimension()) return false;
  const auto& pf = s.pseudo_frobenius();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!s.is_pseudo_frobenius(entries[i])) return false;
    for (Int p : pf) {
      if (!s.contains(s.generator(i) + entries[i] - p)) return false;
    }
  }
  return true;
}

NGVector annotate_ng_vector(const NumericalSemigroup& s, std::vector<Int> entries) {
  NGVector v;
  v.entries = std::move(entries);
  const Int f = s.frobenius();
  const auto& n = s.generators();
  for (std::size_t i = 0; i < v.entries.size(); ++i) {
    if (v.entries[i] == f) continue;
    if (!v.h) {
      v.h = i;
      for (std::size_t l = 0; l < i; ++l) {
        if (v.entries[i] == f - n[i] + n[l]) {
          v.ell = l;
          break;
        }
      }
      continue;
    }
    SecondDivergence second;
    second.index = i;
    for (std::size_t l = 0; l < i; ++l) {
      if (v.entries[i] == f - n[i] + n[l]) {
        second.form = SecondDivergence::Form::Generator;
        second.value = static_cast<Int>(l);
        break;
      }
    }
    if (second.form == SecondDivergence::Form::None) {
      const Int rest = v.entries[i] - f + n[i];
      const Int nh = n[*v.h];
      if (rest > 0 && rest % nh == 0) {
        second.form = SecondDivergence::Form::Multiple;
        second.value = rest / nh;
      }
    }
    v.second = second;
    break;
  }
  return v;
}

std::uint64_t ng_vector_count(const std::vector<std::vector<Int>>& candidates) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t n = 1;
  for (const auto& c : candidates) {
    if (c.empty()) return 0;
    n = n > kMax / c.size() ? kMax : n * c.size();
  }
  return n;
}

NGVector ng_vector_at(const NumericalSemigroup& s, const std::vector<std::vector<Int>>& candidates,
                      std::uint64_t index) {
  std::vector<Int> entries(candidates.size());
  for (std::size_t i = candidates.size(); i-- > 0;) {
    entries[i] = candidates[i][index % candidates[i].size()];
    index /= candidates[i].size();
  }
  return annotate_ng_vector(s, std::move(entries));
}

std::vector<NGVector> ng_vectors(const NumericalSemigroup& s, std::uint64_t cap) {
  const auto t = ng_candidates(s);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].empty()) {
      throw Error(ErrorKind::NotNearlyGorenstein,
                  "no candidate for generator " + std::to_string(s.generator(i)));
    }
  }
  const std::uint64_t count = ng_vector_count(t);
  if (count > cap) throw EnumerationCapError(count, cap);
  std::vector<NGVector> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) out.push_back(ng_vector_at(s, t, k));
  return out;
}

}  // namespace sgp
