#include "sgp/rf.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "sgp/error.hpp"

namespace sgp {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

}  // namespace

std::vector<std::vector<Int>> rf_row_options(const NumericalSemigroup& s, std::size_t i, Int value) {
  std::vector<std::vector<Int>> out;
  for_each_factorization(s.generators(), value, [&](std::span<const Int> c) {
    std::vector<Int> row(c.begin(), c.end());
    row[i] = -1;
    out.push_back(std::move(row));
    return true;
  });
  return out;
}

std::uint64_t matrix_cap_from_env() {
  const char* raw = std::getenv("SGP_MATRIX_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultMatrixCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return kDefaultMatrixCap;
  return v;
}

RFMatrixSet::RFMatrixSet(RFKind kind, Int f, std::vector<Int> ng,
                         std::vector<std::vector<std::vector<Int>>> rows)
    : kind_(kind), f_(f), ng_(std::move(ng)), rows_(std::move(rows)) {
  count_ = rows_.empty() ? 0 : 1;
  for (const auto& r : rows_) count_ = saturating_mul(count_, r.size());
}

RFMatrix RFMatrixSet::at(std::uint64_t index) const {
  const std::size_t n = rows_.size();
  RFMatrix out{kind_, f_, IntMatrix(n), ng_};
  for (std::size_t i = n; i-- > 0;) {
    const std::uint64_t radix = rows_[i].size();
    const auto& row = rows_[i][index % radix];
    index /= radix;
    std::copy(row.begin(), row.end(), out.entries.data.begin() + static_cast<std::ptrdiff_t>(i * n));
  }
  return out;
}

std::optional<std::uint64_t> RFMatrixSet::index_of(const RFMatrix& a) const {
  const std::size_t n = rows_.size();
  if (a.kind != kind_ || a.f != f_ || a.entries.order != n) return std::nullopt;
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto first = a.entries.data.begin() + static_cast<std::ptrdiff_t>(i * n);
    const std::vector<Int> row(first, first + static_cast<std::ptrdiff_t>(n));
    const auto it = std::find(rows_[i].begin(), rows_[i].end(), row);
    if (it == rows_[i].end()) return std::nullopt;
    index = index * rows_[i].size() + static_cast<std::uint64_t>(it - rows_[i].begin());
  }
  return index;
}

std::vector<RFMatrix> RFMatrixSet::materialize(std::uint64_t cap) const {
  if (count_ > cap) throw EnumerationCapError(count_, cap);
  std::vector<RFMatrix> out;
  out.reserve(count_);
  for (std::uint64_t k = 0; k < count_; ++k) out.push_back(at(k));
  return out;
}

RFMatrixSet rf_plus_set(const NumericalSemigroup& s, Int f) {
  if (!s.is_pseudo_frobenius(f)) {
    throw Error(ErrorKind::NotPseudoFrobenius, std::to_string(f) + " is not in PF(S)");
  }
  std::vector<std::vector<std::vector<Int>>> rows;
  for (std::size_t i = 0; i < s.embedding_dimension(); ++i) {
    rows.push_back(rf_row_options(s, i, f + s.generator(i)));
  }
  return RFMatrixSet(RFKind::Plus, f, {}, std::move(rows));
}

RFMatrixSet rf_minus_set(const NumericalSemigroup& s, const NGVector& ng, Int f) {
  if (!s.is_pseudo_frobenius(f)) {
    throw Error(ErrorKind::NotPseudoFrobenius, std::to_string(f) + " is not in PF(S)");
  }
  if (std::find(ng.entries.begin(), ng.entries.end(), f) != ng.entries.end()) {
    throw Error(ErrorKind::FIsNGEntry, std::to_string(f) + " is an entry of the NG-vector");
  }
  std::vector<std::vector<std::vector<Int>>> rows;
  for (std::size_t i = 0; i < s.embedding_dimension(); ++i) {
    rows.push_back(rf_row_options(s, i, s.generator(i) + ng.entries.at(i) - f));
  }
  return RFMatrixSet(RFKind::Minus, f, ng.entries, std::move(rows));
}

std::vector<RFMatrix> rf_plus(const NumericalSemigroup& s, Int f, std::uint64_t cap) {
  return rf_plus_set(s, f).materialize(cap);
}

std::vector<RFMatrix> rf_minus(const NumericalSemigroup& s, const NGVector& ng, Int f,
                               std::uint64_t cap) {
  return rf_minus_set(s, ng, f).materialize(cap);
}

bool check_coppie(const RFMatrix& plus, const RFMatrix& minus) {
  if (plus.kind != RFKind::Plus || minus.kind != RFKind::Minus || plus.f != minus.f ||
      plus.entries.order != minus.entries.order) {
    throw Error(ErrorKind::MismatchedF, "need an RF+ and an RF- matrix for the same f");
  }
  const std::size_t n = plus.entries.order;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (j != k && plus.entries(j, k) * minus.entries(k, j) != 0) return false;
    }
  }
  return true;
}

MaxGapTable max_gap_table(const NumericalSemigroup& s) {
  const std::size_t n = s.embedding_dimension();
  const auto& g = s.generators();
  MaxGapTable t{n, std::vector<Int>(n * n, 0), std::vector<Int>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      // Above this lambda, lambda * n_j - n_i exceeds F(S) and lies in S.
      Int lambda = std::max<Int>(1, (s.frobenius() + g[i]) / g[j]);
      while (lambda > 1 && s.contains(lambda * g[j] - g[i])) --lambda;
      t.lambda[i * n + j] = lambda;
      t.m[i * n + j] = lambda * g[j] - g[i];
    }
  }
  return t;
}

bool PFClassification::in_pf1(Int f) const {
  return std::binary_search(pf1.begin(), pf1.end(), f);
}

bool PFClassification::in_pf2(Int f) const {
  return std::binary_search(pf2.begin(), pf2.end(), f);
}

PFClassification classify_pf(const NumericalSemigroup& s, const NGVector& ng) {
  if (!is_ng_vector(s, ng.entries)) {
    if (!is_nearly_gorenstein(s)) {
      throw Error(ErrorKind::NotNearlyGorenstein, "S admits no NG-vector");
    }
    throw Error(ErrorKind::PreconditionViolated, "argument is not an NG-vector of S");
  }
  PFClassification cls;
  cls.ng = ng;
  const std::size_t n = s.embedding_dimension();
  const auto& g = s.generators();
  for (Int f : s.pseudo_frobenius()) {
    if (std::find(ng.entries.begin(), ng.entries.end(), f) != ng.entries.end()) continue;
    std::vector<Witness> found;
    for (std::size_t i = 0; i < n; ++i) {
      const Int plus_value = f + g[i];
      const Int minus_value = g[i] + ng.entries[i] - f;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        if (plus_value > 0 && plus_value % g[j] == 0) {
          found.push_back({RFKind::Plus, i, j, plus_value / g[j]});
        }
        if (minus_value > 0 && minus_value % g[j] == 0) {
          found.push_back({RFKind::Minus, i, j, minus_value / g[j]});
        }
      }
    }
    if (found.empty()) {
      cls.pf2.push_back(f);
    } else {
      cls.pf1.push_back(f);
      cls.witnesses.emplace(f, std::move(found));
    }
  }
  return cls;
}

MuValues mu_values(const NumericalSemigroup& s, const PFClassification& cls) {
  return mu_values(s, cls, max_gap_table(s));
}

MuValues mu_values(const NumericalSemigroup& s, const PFClassification& cls,
                   const MaxGapTable& table) {
  if (s.embedding_dimension() != 5) {
    throw Error(ErrorKind::WrongEmbeddingDimension,
                "mu values need nu = 5, got " + std::to_string(s.embedding_dimension()));
  }
  MuValues out;
  out.bound = 38;
  for (std::size_t col = 0; col < 5; ++col) {
    Int mu = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      if (i != col && cls.in_pf1(table.gap_at(i, col))) ++mu;
    }
    out.mu.push_back(mu);
    // C(mu - 1, 2), taken as 0 when mu - 1 < 2.
    if (mu >= 3) out.bound -= (mu - 1) * (mu - 2) / 2;
  }
  return out;
}

std::size_t ZeroPattern::row_zeroes(std::size_t i) const {
  std::size_t c = 0;
  for (std::size_t j = 0; j < order; ++j) c += at(i, j) ? 1 : 0;
  return c;
}

std::size_t ZeroPattern::column_zeroes(std::size_t j) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < order; ++i) c += at(i, j) ? 1 : 0;
  return c;
}

ZeroPattern zero_pattern(const IntMatrix& a) {
  ZeroPattern p{a.order, std::vector<char>(a.order * a.order, 0)};
  for (std::size_t i = 0; i < a.order; ++i) {
    for (std::size_t j = 0; j < a.order; ++j) {
      if (i != j && a(i, j) == 0) p.mask[i * a.order + j] = 1;
    }
  }
  return p;
}

}  // namespace sgp
