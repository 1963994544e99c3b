// Per-semigroup claim checkers. Each checker gets the precomputed facts of one
// semigroup and returns a single ClaimResult; statements quantified over "the"
// NG-vector are checked for every NG-vector.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <map>
#include <set>
#include <tuple>

#include "sgp/error.hpp"
#include "sgp/gorenstein.hpp"
#include "sgp/json_io.hpp"
#include "sgp/rf.hpp"
#include "sgp/verify.hpp"

namespace sgp {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<ClaimId, std::string_view>, 18> kClaimNames{{
    {ClaimId::HERZOG3, "HERZOG3"},
    {ClaimId::NG4_TYPE3, "NG4_TYPE3"},
    {ClaimId::AS4_TYPE3, "AS4_TYPE3"},
    {ClaimId::THM_MAIN, "THM_MAIN"},
    {ClaimId::THM_3DISTINCT, "THM_3DISTINCT"},
    {ClaimId::PF2_BOUND, "PF2_BOUND"},
    {ClaimId::PF1_BOUND, "PF1_BOUND"},
    {ClaimId::MU_BOUND, "MU_BOUND"},
    {ClaimId::COPPIE, "COPPIE"},
    {ClaimId::FIRST_ZERO, "FIRST_ZERO"},
    {ClaimId::NGV_PROPS, "NGV_PROPS"},
    {ClaimId::AS_IMPLIES_NG, "AS_IMPLIES_NG"},
    {ClaimId::TRACE_EQ, "TRACE_EQ"},
    {ClaimId::PF2_TWO_ZEROES, "PF2_TWO_ZEROES"},
    {ClaimId::SAME2, "SAME2"},
    {ClaimId::FORM_UNIQUE, "FORM_UNIQUE"},
    {ClaimId::QUESTION_MS, "QUESTION_MS"},
    {ClaimId::PF_CLASS_VARIES, "PF_CLASS_VARIES"},
}};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Cheap deterministic stream for sampling indices.
struct SplitMix {
  std::uint64_t state;
  std::uint64_t lanes = 0;
  int left = 0;

  std::uint64_t operator()() { return splitmix64(state += 0x9e3779b97f4a7c15ULL); }

  // Value in [0, n) by multiply-shift; small n consume 16-bit lanes of one draw.
  std::size_t below(std::size_t n) {
    if (n <= 256) {
      if (left == 0) {
        lanes = (*this)();
        left = 4;
      }
      const std::uint64_t lane = lanes & 0xffff;
      lanes >>= 16;
      --left;
      return static_cast<std::size_t>((lane * n) >> 16);
    }
    __extension__ using u128 = unsigned __int128;
    return static_cast<std::size_t>((static_cast<u128>((*this)()) * n) >> 64);
  }
};

// Row options grouped by their positive off-diagonal columns. The
// product-zero condition only sees these masks, so one representative per
// mask stands for every option in its group. Masks need order <= 64.
struct RowClasses {
  std::vector<std::uint64_t> masks;
  std::vector<std::size_t> representative;
};

RowClasses row_classes(const std::vector<std::vector<Int>>& options, std::size_t i) {
  RowClasses out;
  for (std::size_t o = 0; o < options.size(); ++o) {
    std::uint64_t mask = 0;
    for (std::size_t c = 0; c < options[o].size() && c < 64; ++c) {
      if (c != i && options[o][c] > 0) mask |= std::uint64_t{1} << c;
    }
    if (std::find(out.masks.begin(), out.masks.end(), mask) == out.masks.end()) {
      out.masks.push_back(mask);
      out.representative.push_back(o);
    }
  }
  return out;
}

// Everything the checkers share for one semigroup.
struct Facts {
  const NumericalSemigroup& s;
  const CheckOptions& options;
  std::size_t nu = 0;
  bool as = false;
  bool ng = false;
  std::vector<std::vector<Int>> candidates;
  std::uint64_t vector_count = 0;
  std::vector<NGVector> vectors;  // every NG-vector, or a seeded sample of vector_cap of them
  std::vector<PFClassification> classes;
  MaxGapTable table;
  std::uint64_t hash = 0;
  mutable std::map<Int, RFMatrixSet> plus_cache;
  mutable std::map<std::pair<std::size_t, Int>, RFMatrixSet> minus_cache;
  mutable std::map<std::tuple<std::size_t, Int, Int>, std::vector<std::vector<Int>>> minus_rows;
  mutable std::map<Int, std::vector<RowClasses>> plus_classes_cache;
  mutable std::map<std::tuple<std::size_t, Int, Int>, RowClasses> minus_classes_cache;

  Facts(const NumericalSemigroup& sg, const CheckOptions& opt) : s(sg), options(opt) {
    nu = s.embedding_dimension();
    hash = opt.seed;
    for (Int g : s.generators()) hash = splitmix64(hash ^ static_cast<std::uint64_t>(g));
    as = is_almost_symmetric(s);
    ng = is_nearly_gorenstein(s);
    if (ng) {
      candidates = ng_candidates(s);
      vector_count = ng_vector_count(candidates);
      for (std::uint64_t k : vector_indices(opt)) vectors.push_back(ng_vector_at(s, candidates, k));
      for (const auto& v : vectors) classes.push_back(classify_pf(s, v));
    }
    if (nu >= 2) table = max_gap_table(s);
  }

  bool sampled() const { return vectors.size() < vector_count; }

  std::vector<std::uint64_t> vector_indices(const CheckOptions& opt) const {
    std::vector<std::uint64_t> out;
    if (vector_count <= opt.vector_cap) {
      for (std::uint64_t k = 0; k < vector_count; ++k) out.push_back(k);
      return out;
    }
    std::set<std::uint64_t> picked{0, vector_count - 1};
    SplitMix rng{hash};
    while (picked.size() < std::max<std::uint64_t>(opt.vector_cap, 2)) picked.insert(rng() % vector_count);
    return {picked.begin(), picked.end()};
  }

  const RFMatrixSet& plus(Int f) const {
    auto it = plus_cache.find(f);
    if (it == plus_cache.end()) it = plus_cache.emplace(f, rf_plus_set(s, f)).first;
    return it->second;
  }

  // RF- row k only depends on (k, f_k, f), so rows are shared between
  // NG-vectors.
  const std::vector<std::vector<Int>>& minus_row(std::size_t k, Int fk, Int f) const {
    const std::tuple<std::size_t, Int, Int> key{k, fk, f};
    auto it = minus_rows.find(key);
    if (it == minus_rows.end()) it = minus_rows.emplace(key, rf_row_options(s, k, s.generator(k) + fk - f)).first;
    return it->second;
  }

  const std::vector<RowClasses>& plus_classes(Int f) const {
    auto it = plus_classes_cache.find(f);
    if (it == plus_classes_cache.end()) {
      std::vector<RowClasses> rows;
      for (std::size_t j = 0; j < nu; ++j) rows.push_back(row_classes(plus(f).row_options(j), j));
      it = plus_classes_cache.emplace(f, std::move(rows)).first;
    }
    return it->second;
  }

  const RowClasses& minus_classes(std::size_t k, Int fk, Int f) const {
    const std::tuple<std::size_t, Int, Int> key{k, fk, f};
    auto it = minus_classes_cache.find(key);
    if (it == minus_classes_cache.end()) it = minus_classes_cache.emplace(key, row_classes(minus_row(k, fk, f), k)).first;
    return it->second;
  }

  const RFMatrixSet& minus(std::size_t vector_index, Int f) const {
    const std::pair<std::size_t, Int> key{vector_index, f};
    auto it = minus_cache.find(key);
    if (it == minus_cache.end()) {
      const auto& entries = vectors[vector_index].entries;
      std::vector<std::vector<std::vector<Int>>> rows;
      for (std::size_t k = 0; k < nu; ++k) rows.push_back(minus_row(k, entries[k], f));
      it = minus_cache.emplace(key, RFMatrixSet(RFKind::Minus, f, entries, std::move(rows))).first;
    }
    return it->second;
  }

  bool is_entry(const NGVector& v, Int f) const {
    return std::find(v.entries.begin(), v.entries.end(), f) != v.entries.end();
  }

  std::uint64_t seed_for(Int f, std::size_t vector_index, ClaimId id) const {
    return splitmix64(hash ^ splitmix64(static_cast<std::uint64_t>(f)) ^
                      splitmix64((vector_index << 8) | static_cast<std::uint64_t>(id)));
  }
};

ClaimResult pass(ClaimId id, json witness = nullptr) { return {id, Status::Pass, std::move(witness)}; }
ClaimResult fail(ClaimId id, json witness) { return {id, Status::Fail, std::move(witness)}; }
ClaimResult inapplicable(ClaimId id) { return {id, Status::Inapplicable, nullptr}; }

// The matrix that picks option digits[i] in row i.
RFMatrix matrix_from_digits(const RFMatrixSet& set, const std::vector<std::size_t>& digits) {
  RFMatrix m = set.at(0);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const auto& row = set.row_options(i)[digits[i]];
    for (std::size_t j = 0; j < row.size(); ++j) m.entries(i, j) = row[j];
  }
  return m;
}

struct PairScan {
  bool sampled = false;
  std::optional<std::pair<RFMatrix, RFMatrix>> violation;
};

// Option indices of an (RF+, RF-) pair violating a_jk * b_kj = 0.
struct ClassPairScan {
  bool sampled = false;
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> violation;
};

std::uint64_t class_count(const std::vector<const RowClasses*>& rows) {
  std::uint64_t count = 1;
  for (const RowClasses* r : rows) {
    const std::uint64_t n = r->masks.size();
    if (n == 0) return 0;
    count = count > UINT64_MAX / n ? UINT64_MAX : count * n;
  }
  return count;
}

// Checks a_jk * b_kj = 0 on (RF+, RF-) pairs up to the mask grouping: every
// pair of groups when there are at most `budget`, otherwise `budget` seeded
// samples. Needs order <= 64.
ClassPairScan scan_coppie_classes(const std::vector<const RowClasses*>& ca,
                                  const std::vector<const RowClasses*>& cb, std::uint64_t budget,
                                  std::uint64_t seed) {
  ClassPairScan out;
  const std::uint64_t na = class_count(ca);
  const std::uint64_t nb = class_count(cb);
  if (na == 0 || nb == 0 || budget == 0) return out;
  const std::size_t n = ca.size();
  std::vector<std::size_t> da(n, 0), db(n, 0);
  auto report = [&] {
    std::vector<std::size_t> ra(n), rb(n);
    for (std::size_t i = 0; i < n; ++i) {
      ra[i] = ca[i]->representative[da[i]];
      rb[i] = cb[i]->representative[db[i]];
    }
    out.violation.emplace(std::move(ra), std::move(rb));
  };
  if (na <= budget && nb <= budget / na) {
    auto clashes = [&] {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::uint64_t bits = cb[k]->masks[db[k]]; bits != 0; bits &= bits - 1) {
          const auto j = static_cast<std::size_t>(std::countr_zero(bits));
          if ((ca[j]->masks[da[j]] >> k) & 1U) return true;
        }
      }
      return false;
    };
    auto advance = [&](const std::vector<const RowClasses*>& c, std::vector<std::size_t>& d) {
      for (std::size_t k = n; k-- > 0;) {
        if (++d[k] < c[k]->masks.size()) return true;
        d[k] = 0;
      }
      return false;
    };
    do {
      std::fill(db.begin(), db.end(), 0);
      do {
        if (clashes()) {
          report();
          return out;
        }
      } while (advance(cb, db));
    } while (advance(ca, da));
    return out;
  }
  out.sampled = true;
  // Only RF- rows r with some b_rj > 0 such that some RF+ row j option has
  // a_jr > 0 can decide a sample; the other digits never change the outcome.
  std::vector<std::uint64_t> reachable(n, 0);  // reachable[j]: columns some row-j option hits
  for (std::size_t j = 0; j < n; ++j) {
    for (std::uint64_t m : ca[j]->masks) reachable[j] |= m;
  }
  std::vector<std::size_t> live;
  for (std::size_t r = 0; r < n; ++r) {
    bool can = false;
    for (std::uint64_t m : cb[r]->masks) {
      for (std::uint64_t bits = m; bits != 0 && !can; bits &= bits - 1) {
        can = (reachable[static_cast<std::size_t>(std::countr_zero(bits))] >> r) & 1U;
      }
    }
    if (can) live.push_back(r);
  }
  if (live.empty()) return out;
  SplitMix rng{seed};
  // Row digits of the RF+ side are drawn only when the test reads them.
  std::vector<char> drawn(n);
  for (std::uint64_t k = 0; k < budget; ++k) {
    std::fill(drawn.begin(), drawn.end(), 0);
    for (std::size_t r : live) db[r] = rng.below(cb[r]->masks.size());
    bool clash = false;
    for (std::size_t r : live) {
      if (clash) break;
      for (std::uint64_t bits = cb[r]->masks[db[r]]; bits != 0 && !clash; bits &= bits - 1) {
        const auto j = static_cast<std::size_t>(std::countr_zero(bits));
        if (!drawn[j]) {
          da[j] = rng.below(ca[j]->masks.size());
          drawn[j] = 1;
        }
        clash = (ca[j]->masks[da[j]] >> r) & 1U;
      }
    }
    if (clash) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!drawn[i]) da[i] = 0;
      }
      report();
      return out;
    }
  }
  return out;
}

// Same scan through materialized matrices, for orders above 64.
PairScan scan_coppie_pairs_wide(const RFMatrixSet& a, const RFMatrixSet& b, std::uint64_t budget,
                                std::uint64_t seed) {
  PairScan out;
  const std::uint64_t na = a.count();
  const std::uint64_t nb = b.count();
  if (na == 0 || nb == 0 || budget == 0) return out;
  auto clash = [&](std::uint64_t ia, std::uint64_t ib) {
    RFMatrix ma = a.at(ia);
    RFMatrix mb = b.at(ib);
    if (check_coppie(ma, mb)) return false;
    out.violation.emplace(std::move(ma), std::move(mb));
    return true;
  };
  if (na <= budget && nb <= budget / na) {
    for (std::uint64_t ia = 0; ia < na; ++ia) {
      for (std::uint64_t ib = 0; ib < nb; ++ib) {
        if (clash(ia, ib)) return out;
      }
    }
    return out;
  }
  out.sampled = true;
  SplitMix rng{seed};
  for (std::uint64_t k = 0; k < budget; ++k) {
    const std::uint64_t ia = rng() % na;
    if (clash(ia, rng() % nb)) return out;
  }
  return out;
}

// Smallest and largest number of zeroes column c can have over all matrices
// of the set; row choices are independent.
std::pair<std::size_t, std::size_t> column_zero_range(const RFMatrixSet& set, std::size_t c) {
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < set.order(); ++i) {
    bool some_zero = false, some_nonzero = false;
    for (const auto& row : set.row_options(i)) (row[c] == 0 ? some_zero : some_nonzero) = true;
    if (some_zero && !some_nonzero) ++lo;
    if (some_zero) ++hi;
  }
  return {lo, hi};
}

// Replaces row i of the first matrix of `set` by `row`.
RFMatrix with_row(const RFMatrixSet& set, std::size_t i, const std::vector<Int>& row) {
  RFMatrix m = set.at(0);
  for (std::size_t j = 0; j < row.size(); ++j) m.entries(i, j) = row[j];
  return m;
}

bool has_support_on(std::span<const Int> gens, std::size_t from, Int value) {
  bool found = false;
  for_each_factorization(gens.subspan(from), value, [&](std::span<const Int>) {
    found = true;
    return false;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Type bounds

ClaimResult check_type_bound(const Facts& x, ClaimId id, std::size_t nu, bool applies, std::size_t bound) {
  if (x.nu != nu || !applies) return inapplicable(id);
  if (x.s.type() <= bound) return pass(id);
  return fail(id, {{"type", x.s.type()}, {"bound", bound}});
}

ClaimResult check_thm_3distinct(const Facts& x) {
  const ClaimId id = ClaimId::THM_3DISTINCT;
  if (x.nu != 5 || !x.ng) return inapplicable(id);
  bool applied = false;
  for (const auto& v : x.vectors) {
    const auto& e = v.entries;
    if (e[0] == e[1] || e[0] == e[2] || e[1] == e[2]) continue;
    applied = true;
    const std::set<Int> allowed{e[0], e[1], e[2], x.table.gap_at(3, 4), x.table.gap_at(4, 3)};
    const auto& pf = x.s.pseudo_frobenius();
    const bool subset = std::all_of(pf.begin(), pf.end(), [&](Int f) { return allowed.count(f) > 0; });
    if (x.s.type() > 5 || !subset) {
      return fail(id, {{"ng", ng_vector_json(v)},
                       {"allowed", std::vector<Int>(allowed.begin(), allowed.end())},
                       {"type", x.s.type()}});
    }
  }
  return applied ? pass(id) : inapplicable(id);
}

// ---------------------------------------------------------------------------
// PF1 / PF2 bounds (nu = 5, nearly Gorenstein, not almost symmetric)

bool section_two_applies(const Facts& x) { return x.nu == 5 && x.ng && !x.as; }

std::size_t entries_off_frobenius(const Facts& x, const NGVector& v) {
  return static_cast<std::size_t>(
      std::count_if(v.entries.begin(), v.entries.end(), [&](Int e) { return e != x.s.frobenius(); }));
}

// For the row f + n_i = c_j n_j + c_l n_l with c_j, c_l > 0: the largest and
// smallest c_j over such representations, indexed [i][j][l]; 0 when none.
struct TwoSupportRange {
  Int max[5][5][5] = {};
  Int min[5][5][5] = {};
};

TwoSupportRange two_support_range(const NumericalSemigroup& s, Int f) {
  TwoSupportRange out;
  const auto& g = s.generators();
  for (std::size_t i = 0; i < 5; ++i) {
    const Int value = f + g[i];
    for (std::size_t j = 0; j < 5; ++j) {
      for (std::size_t l = 0; l < 5; ++l) {
        if (j == i || l == i || j == l) continue;
        for (Int cj = 1; cj * g[j] < value; ++cj) {
          if ((value - cj * g[j]) % g[l] != 0) continue;
          if (out.min[i][j][l] == 0) out.min[i][j][l] = cj;
          out.max[i][j][l] = cj;
        }
      }
    }
  }
  return out;
}

// At most one f in PF2 per shape (i, j, l, p, q) with
//   f = a_ij n_j + a_il n_l - n_i = a_pj n_j + a_pq n_q - n_p,
// all coefficients positive and a_ij >= a_pj.
json pf2_form_conflicts(const Facts& x, const PFClassification& cls) {
  std::map<std::array<std::size_t, 5>, std::set<Int>> by_shape;
  std::array<std::size_t, 5> shape{0, 1, 2, 3, 4};
  for (Int f : cls.pf2) {
    const TwoSupportRange r = two_support_range(x.s, f);
    do {
      const auto [i, j, l, p, q] = shape;
      if (r.max[i][j][l] > 0 && r.min[p][j][q] > 0 && r.max[i][j][l] >= r.min[p][j][q]) by_shape[shape].insert(f);
    } while (std::next_permutation(shape.begin(), shape.end()));
  }
  json conflicts = json::array();
  for (const auto& [shape, fs] : by_shape) {
    if (fs.size() > 1) {
      conflicts.push_back({{"shape", {shape[0] + 1, shape[1] + 1, shape[2] + 1, shape[3] + 1, shape[4] + 1}},
                           {"f", std::vector<Int>(fs.begin(), fs.end())}});
    }
  }
  return conflicts;
}

ClaimResult check_pf2_bound(const Facts& x) {
  const ClaimId id = ClaimId::PF2_BOUND;
  if (!section_two_applies(x)) return inapplicable(id);
  for (const auto& cls : x.classes) {
    json conflicts = pf2_form_conflicts(x, cls);
    if (cls.pf2.size() > 6 || !conflicts.empty()) {
      return fail(id, {{"classification", classification_json(cls)}, {"form_conflicts", conflicts}});
    }
  }
  return pass(id);
}

ClaimResult check_pf1_bound(const Facts& x) {
  const ClaimId id = ClaimId::PF1_BOUND;
  if (!section_two_applies(x)) return inapplicable(id);
  for (const auto& cls : x.classes) {
    const bool two_off = entries_off_frobenius(x, cls.ng) >= 2;
    const std::size_t bound = two_off ? 30 : 31;
    const MuValues mu = mu_values(x.s, cls, x.table);
    Int mu_sum = 0;
    for (Int m : mu.mu) mu_sum += m;
    const Int split_bound = mu_sum + (two_off ? 14 : 15);
    if (cls.pf1.size() > bound || static_cast<Int>(cls.pf1.size()) > split_bound) {
      return fail(id, {{"classification", classification_json(cls)},
                       {"bound", bound},
                       {"mu", mu.mu},
                       {"mu_split_bound", split_bound}});
    }
  }
  return pass(id);
}

ClaimResult check_mu_bound(const Facts& x) {
  const ClaimId id = ClaimId::MU_BOUND;
  if (!section_two_applies(x)) return inapplicable(id);
  for (const auto& cls : x.classes) {
    const MuValues mu = mu_values(x.s, cls, x.table);
    if (static_cast<Int>(cls.pf1.size()) > mu.bound) {
      return fail(id, {{"classification", classification_json(cls)}, {"mu", mu.mu}, {"bound", mu.bound}});
    }
  }
  return pass(id);
}

// ---------------------------------------------------------------------------
// RF-matrix statements

// Row choices are independent and row k of an RF- matrix only depends on the
// entry f_k, so a violating pair exists for some NG-vector iff some RF+ row j
// has a_jk > 0, some candidate g != f for position k has a factorization of
// n_k + g - f with b_kj > 0, and every position admits a candidate != f.
json coppie_row_violation(const Facts& x, Int f) {
  for (const auto& t : x.candidates) {
    if (std::all_of(t.begin(), t.end(), [&](Int g) { return g == f; })) return nullptr;
  }
  const RFMatrixSet& a = x.plus(f);
  // positive[j][k]: some RF+ row j option has a_jk > 0.
  std::vector<std::vector<char>> positive(x.nu, std::vector<char>(x.nu, 0));
  for (std::size_t j = 0; j < x.nu; ++j) {
    for (const auto& ra : a.row_options(j)) {
      for (std::size_t k = 0; k < x.nu; ++k) positive[j][k] |= (k != j && ra[k] > 0);
    }
  }
  for (std::size_t k = 0; k < x.nu; ++k) {
    for (Int g : x.candidates[k]) {
      if (g == f) continue;
      for (const auto& fb : x.minus_row(k, g, f)) {
        for (std::size_t j = 0; j < x.nu; ++j) {
          if (j == k || fb[j] == 0 || !positive[j][k]) continue;
          for (const auto& ra : a.row_options(j)) {
            if (ra[k] > 0) {
              return {{"f", f}, {"plus_row", j + 1}, {"plus_entries", ra}, {"minus_row", k + 1},
                      {"f_k", g}, {"minus_entries", fb}};
            }
          }
        }
      }
    }
  }
  return nullptr;
}

ClaimResult check_coppie_claim(const Facts& x) {
  const ClaimId id = ClaimId::COPPIE;
  if (x.nu < 2 || !x.ng) return inapplicable(id);
  for (Int f : x.s.pseudo_frobenius()) {
    json bad = coppie_row_violation(x, f);
    if (!bad.is_null()) return fail(id, bad);
  }
  // Explicit matrix pairs as a cross-check, pair_cap per f shared across the
  // NG-vectors that avoid f.
  bool applied = false;
  std::vector<Int> sampled;
  for (Int f : x.s.pseudo_frobenius()) {
    std::vector<std::size_t> users;
    for (std::size_t vi = 0; vi < x.vectors.size(); ++vi) {
      if (!x.is_entry(x.vectors[vi], f)) users.push_back(vi);
    }
    if (users.empty()) continue;
    applied = true;
    const std::uint64_t budget = std::max<std::uint64_t>(1, x.options.pair_cap / users.size());
    bool used_sampling = false;
    for (std::size_t vi : users) {
      std::optional<std::pair<RFMatrix, RFMatrix>> violation;
      if (x.nu <= 64) {
        std::vector<const RowClasses*> ca, cb;
        for (const auto& r : x.plus_classes(f)) ca.push_back(&r);
        for (std::size_t k = 0; k < x.nu; ++k) cb.push_back(&x.minus_classes(k, x.vectors[vi].entries[k], f));
        const ClassPairScan scan = scan_coppie_classes(ca, cb, budget, x.seed_for(f, vi, id));
        used_sampling |= scan.sampled;
        if (scan.violation) {
          violation.emplace(matrix_from_digits(x.plus(f), scan.violation->first),
                            matrix_from_digits(x.minus(vi, f), scan.violation->second));
        }
      } else {
        PairScan scan = scan_coppie_pairs_wide(x.plus(f), x.minus(vi, f), budget, x.seed_for(f, vi, id));
        used_sampling |= scan.sampled;
        violation = std::move(scan.violation);
      }
      if (violation) {
        return fail(id, {{"ng", ng_vector_json(x.vectors[vi])}, {"f", f},
                         {"plus", rf_matrix_json(violation->first)},
                         {"minus", rf_matrix_json(violation->second)}});
      }
    }
    if (used_sampling) sampled.push_back(f);
  }
  if (!applied) return inapplicable(id);
  if (sampled.empty()) return pass(id);
  return pass(id, {{"sampled_f", sampled}, {"pair_cap", x.options.pair_cap}});
}

ClaimResult check_first_zero(const Facts& x) {
  const ClaimId id = ClaimId::FIRST_ZERO;
  if (x.nu < 2 || !x.ng) return inapplicable(id);
  bool applied = false;
  for (std::size_t vi = 0; vi < x.vectors.size(); ++vi) {
    const auto& v = x.vectors[vi];
    if (!v.h) continue;
    if (!v.ell) return fail(id, {{"ng", ng_vector_json(v)}, {"reason", "no ell for h"}});
    const std::size_t h = *v.h;
    const std::size_t l = *v.ell;
    for (Int f : x.s.pseudo_frobenius()) {
      if (x.is_entry(v, f)) continue;
      applied = true;
      const RFMatrixSet& b = x.minus(vi, f);
      for (const auto& row : b.row_options(h)) {
        if (row[l] != 0) {
          return fail(id, {{"ng", ng_vector_json(v)}, {"f", f}, {"minus", rf_matrix_json(with_row(b, h, row))}});
        }
      }
      for (const auto& row : b.row_options(l)) {
        if (row[h] != 0) {
          return fail(id, {{"ng", ng_vector_json(v)}, {"f", f}, {"minus", rf_matrix_json(with_row(b, l, row))}});
        }
      }
      // Some RF- matrix has rows h and ell equal off columns h and ell.
      auto strip = [&](std::vector<Int> row) {
        row[h] = 0;
        row[l] = 0;
        return row;
      };
      std::set<std::vector<Int>> h_rows;
      for (const auto& row : b.row_options(h)) h_rows.insert(strip(row));
      const bool twin = std::any_of(b.row_options(l).begin(), b.row_options(l).end(),
                                    [&](const auto& row) { return h_rows.count(strip(row)) > 0; });
      if (!twin) return fail(id, {{"ng", ng_vector_json(v)}, {"f", f}, {"reason", "no matrix with twin rows h, ell"}});
    }
  }
  return applied ? pass(id) : inapplicable(id);
}

ClaimResult check_pf2_two_zeroes(const Facts& x) {
  const ClaimId id = ClaimId::PF2_TWO_ZEROES;
  if (x.nu != 5 || !x.ng) return inapplicable(id);
  bool applied = false;
  for (std::size_t vi = 0; vi < x.vectors.size(); ++vi) {
    const auto& cls = x.classes[vi];
    for (Int f : cls.pf2) {
      applied = true;
      const RFMatrixSet& a = x.plus(f);
      const RFMatrixSet& b = x.minus(vi, f);
      // Rows: every candidate row must carry exactly two zeroes.
      for (const RFMatrixSet* set : {&a, &b}) {
        for (std::size_t i = 0; i < 5; ++i) {
          for (const auto& row : set->row_options(i)) {
            const auto zeroes = std::count(row.begin(), row.end(), Int{0});
            if (zeroes != 2) {
              return fail(id, {{"ng", ng_vector_json(cls.ng)}, {"f", f},
                               {"matrix", rf_matrix_json(with_row(*set, i, row))}});
            }
          }
        }
      }
      for (const RFMatrixSet* set : {&a, &b}) {
        for (std::size_t c = 0; c < 5; ++c) {
          const auto [lo, hi] = column_zero_range(*set, c);
          if (lo != 2 || hi != 2) {
            return fail(id, {{"ng", ng_vector_json(cls.ng)}, {"f", f},
                             {"kind", set == &a ? "plus" : "minus"}, {"column", c + 1},
                             {"zeroes_min", lo}, {"zeroes_max", hi}});
          }
        }
      }
    }
  }
  return applied ? pass(id) : inapplicable(id);
}

ClaimResult check_same2(const Facts& x) {
  const ClaimId id = ClaimId::SAME2;
  if (x.nu < 3 || !x.ng) return inapplicable(id);
  bool applied = false;
  for (std::size_t vi = 0; vi < x.vectors.size(); ++vi) {
    const auto& cls = x.classes[vi];
    for (std::size_t col = 0; col < x.nu; ++col) {
      // rho = M_{r,col} in PF1, keyed by r.
      std::vector<std::size_t> rs;
      for (std::size_t r = 0; r < x.nu; ++r) {
        if (r != col && cls.in_pf1(x.table.gap_at(r, col))) rs.push_back(r);
      }
      for (std::size_t p : rs) {
        const Int f = x.table.gap_at(p, col);
        const RFMatrixSet& b = x.minus(vi, f);
        for (std::size_t q : rs) {
          if (q == p || x.table.lambda_at(p, col) < x.table.lambda_at(q, col)) continue;
          applied = true;
          for (const auto& row : b.row_options(q)) {
            if (row[p] != 0) {
              return fail(id, {{"ng", ng_vector_json(cls.ng)}, {"f", f}, {"p", p + 1}, {"q", q + 1},
                               {"i", col + 1}, {"minus", rf_matrix_json(with_row(b, q, row))}});
            }
          }
        }
        if (x.nu != 5) continue;
        // With rho sorted by lambda, rho in position j has at
        // least j - 1 rows that can carry three zeroes.
        std::size_t position = 0;
        for (std::size_t r : rs) {
          if (x.table.lambda_at(r, col) <= x.table.lambda_at(p, col)) ++position;
        }
        std::set<std::pair<RFKind, std::size_t>> rows;
        for (const auto& w : cls.witnesses.at(f)) rows.insert({w.side, w.i});
        applied = true;
        if (rows.size() + 1 < position) {
          return fail(id, {{"ng", ng_vector_json(cls.ng)}, {"f", f}, {"column", col + 1},
                           {"position", position}, {"three_zero_rows", rows.size()}});
        }
      }
    }
  }
  return applied ? pass(id) : inapplicable(id);
}

ClaimResult check_form_unique(const Facts& x) {
  const ClaimId id = ClaimId::FORM_UNIQUE;
  if (x.nu < 2) return inapplicable(id);
  const auto& g = x.s.generators();
  const auto& pf = x.s.pseudo_frobenius();
  for (std::size_t i = 0; i < x.nu; ++i) {
    for (std::size_t j = 0; j < x.nu; ++j) {
      if (i == j) continue;
      const Int lambda = x.table.lambda_at(i, j);
      if (x.s.contains(x.table.gap_at(i, j))) {
        return fail(id, {{"i", i + 1}, {"j", j + 1}, {"reason", "M_ij is in S"}});
      }
      for (Int above = lambda + 1; above * g[j] - g[i] <= x.s.frobenius(); ++above) {
        if (!x.s.contains(above * g[j] - g[i])) {
          return fail(id, {{"i", i + 1}, {"j", j + 1}, {"reason", "lambda_ij is not maximal"}});
        }
      }
      for (Int f : pf) {
        if ((f + g[i]) % g[j] == 0 && f != x.table.gap_at(i, j)) {
          return fail(id, {{"i", i + 1}, {"j", j + 1}, {"f", f}, {"M", x.table.gap_at(i, j)}});
        }
      }
      for (std::size_t k = 0; k < x.nu; ++k) {
        if (k != i && k != j && x.table.gap_at(i, j) == x.table.gap_at(k, j)) {
          return fail(id, {{"i", i + 1}, {"k", k + 1}, {"j", j + 1}, {"reason", "M_ij == M_kj"}});
        }
      }
    }
  }
  for (const auto& v : x.vectors) {
    for (std::size_t i = 0; i < x.nu; ++i) {
      for (std::size_t j = 0; j < x.nu; ++j) {
        if (i == j) continue;
        std::vector<Int> hits;
        for (Int f : pf) {
          if (x.is_entry(v, f)) continue;
          const Int value = g[i] + v.entries[i] - f;
          if (value > 0 && value % g[j] == 0) hits.push_back(f);
        }
        if (hits.size() > 1) {
          return fail(id, {{"ng", ng_vector_json(v)}, {"i", i + 1}, {"j", j + 1}, {"f", hits}});
        }
      }
    }
  }
  return pass(id);
}

// ---------------------------------------------------------------------------
// NG-vector properties

ClaimResult check_ngv_props(const Facts& x) {
  const ClaimId id = ClaimId::NGV_PROPS;
  if (x.nu < 2 || !x.ng) return inapplicable(id);
  const Int frob = x.s.frobenius();
  const auto& g = x.s.generators();
  const auto& pf = x.s.pseudo_frobenius();
  for (const auto& v : x.vectors) {
    const auto& e = v.entries;
    auto bad = [&](std::string_view reason) {
      return fail(id, {{"ng", ng_vector_json(v)}, {"reason", reason}});
    };
    if (!is_ng_vector(x.s, e)) return bad("not an NG-vector");
    if (e[0] != frob) return bad("f_1 != F(S)");
    std::set<Int> distinct(e.begin(), e.end());
    if (distinct.size() == e.size()) return bad("all entries distinct");

    std::size_t prefix = 1;
    while (prefix < e.size() &&
           std::find(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(prefix), e[prefix]) ==
               e.begin() + static_cast<std::ptrdiff_t>(prefix)) {
      ++prefix;
    }
    if (prefix >= x.nu - 1) {
      const std::set<Int> head(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(x.nu - 1));
      if (std::set<Int>(pf.begin(), pf.end()) != head || pf.size() != x.nu - 1) {
        return bad("first nu-1 entries distinct but PF differs");
      }
    }
    for (std::size_t i = 1; i <= prefix; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (e[0] - e[j] != g[j] - g[0]) return bad("f_1 - f_j != n_j - n_1");
      }
      for (Int f : pf) {
        if (std::find(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(i), f) !=
            e.begin() + static_cast<std::ptrdiff_t>(i)) {
          continue;
        }
        if (i >= x.nu || !has_support_on(g, i, e[0] - f + g[0])) {
          return fail(id, {{"ng", ng_vector_json(v)}, {"f", f}, {"prefix", i},
                           {"reason", "f_1 - f + n_1 has no factorization over n_{i+1..nu}"}});
        }
      }
    }
    if (v.h && !v.ell) return bad("no ell < h with f_h = F - n_h + n_ell");
    if (v.second && v.second->form == SecondDivergence::Form::None) {
      return bad("second divergent entry has neither form");
    }
  }
  return pass(id);
}

ClaimResult check_question_ms(const Facts& x) {
  const ClaimId id = ClaimId::QUESTION_MS;
  if (x.nu != 5 || !x.ng) return inapplicable(id);
  const std::size_t t = x.s.type();
  if (t > 5 || (t == 5 && !x.as)) {
    return {id, Status::Flagged, {{"type", t}, {"almost_symmetric", x.as}}};
  }
  return pass(id);
}

ClaimResult check_pf_class_varies(const Facts& x) {
  const ClaimId id = ClaimId::PF_CLASS_VARIES;
  if (x.nu < 2 || !x.ng || x.classes.size() < 2) return inapplicable(id);
  std::set<Int> in1, in2;
  for (const auto& cls : x.classes) {
    in1.insert(cls.pf1.begin(), cls.pf1.end());
    in2.insert(cls.pf2.begin(), cls.pf2.end());
  }
  std::vector<Int> both;
  std::set_intersection(in1.begin(), in1.end(), in2.begin(), in2.end(), std::back_inserter(both));
  if (both.empty()) return pass(id);
  json classes = json::array();
  for (const auto& cls : x.classes) classes.push_back(classification_json(cls));
  return {id, Status::Flagged, {{"f", both}, {"classifications", classes}}};
}

ClaimResult run_claim(const Facts& x, ClaimId id) {
  switch (id) {
    case ClaimId::HERZOG3: return check_type_bound(x, id, 3, true, 2);
    case ClaimId::NG4_TYPE3: return check_type_bound(x, id, 4, x.ng, 3);
    case ClaimId::AS4_TYPE3: return check_type_bound(x, id, 4, x.as, 3);
    case ClaimId::THM_MAIN: return check_type_bound(x, id, 5, x.ng && !x.as, 40);
    case ClaimId::THM_3DISTINCT: return check_thm_3distinct(x);
    case ClaimId::PF2_BOUND: return check_pf2_bound(x);
    case ClaimId::PF1_BOUND: return check_pf1_bound(x);
    case ClaimId::MU_BOUND: return check_mu_bound(x);
    case ClaimId::COPPIE: return check_coppie_claim(x);
    case ClaimId::FIRST_ZERO: return check_first_zero(x);
    case ClaimId::NGV_PROPS: return check_ngv_props(x);
    case ClaimId::AS_IMPLIES_NG:
      if (x.nu < 2 || !x.as) return inapplicable(id);
      return x.ng ? pass(id) : fail(id, {{"reason", "almost symmetric but not nearly Gorenstein"}});
    case ClaimId::TRACE_EQ: {
      if (x.nu < 2) return inapplicable(id);
      const bool via_trace = nearly_gorenstein_via_trace(x.s);
      if (via_trace == x.ng) return pass(id);
      return fail(id, {{"candidates", x.ng}, {"trace", via_trace}});
    }
    case ClaimId::PF2_TWO_ZEROES: return check_pf2_two_zeroes(x);
    case ClaimId::SAME2: return check_same2(x);
    case ClaimId::FORM_UNIQUE: return check_form_unique(x);
    case ClaimId::QUESTION_MS: return check_question_ms(x);
    case ClaimId::PF_CLASS_VARIES: return check_pf_class_varies(x);
  }
  return inapplicable(id);
}

}  // namespace

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> ids = [] {
    std::vector<ClaimId> out;
    for (const auto& [id, name] : kClaimNames) out.push_back(id);
    return out;
  }();
  return ids;
}

std::string_view to_string(ClaimId id) noexcept {
  for (const auto& [cid, name] : kClaimNames) {
    if (cid == id) return name;
  }
  return "UNKNOWN";
}

std::optional<ClaimId> parse_claim(std::string_view name) {
  for (const auto& [cid, cname] : kClaimNames) {
    if (cname == name) return cid;
  }
  return std::nullopt;
}

bool is_report_only(ClaimId id) noexcept {
  return id == ClaimId::QUESTION_MS || id == ClaimId::PF_CLASS_VARIES;
}

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inapplicable: return "inapplicable";
    case Status::Flagged: return "flagged";
  }
  return "unknown";
}

bool CheckReport::has_failure() const {
  return std::any_of(claims.begin(), claims.end(), [](const auto& c) { return c.status == Status::Fail; });
}

bool CheckReport::has_flag() const {
  return std::any_of(claims.begin(), claims.end(), [](const auto& c) { return c.status == Status::Flagged; });
}

CheckReport check_semigroup(const NumericalSemigroup& s, const std::set<ClaimId>& claims,
                            const CheckOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.generators = s.generators();
  report.genus = s.genus();
  report.frobenius = s.frobenius();
  report.pseudo_frobenius = s.pseudo_frobenius();
  const std::set<ClaimId> wanted =
      claims.empty() ? std::set<ClaimId>(all_claims().begin(), all_claims().end()) : claims;
  try {
    const Facts facts(s, options);
    report.almost_symmetric = facts.as;
    report.nearly_gorenstein = facts.ng;
    report.ng_vector_count = facts.vector_count;
    report.ng_vectors_checked = facts.vectors.size();
    for (ClaimId id : wanted) report.claims.push_back(run_claim(facts, id));
  } catch (const std::exception& e) {
    report.claims.clear();
    for (ClaimId id : wanted) report.claims.push_back(fail(id, {{"error", e.what()}}));
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace sgp
