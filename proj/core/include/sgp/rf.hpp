#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sgp/gorenstein.hpp"
#include "sgp/semigroup.hpp"

namespace sgp {

/// Default bound on materialized RF-matrices; SGP_MATRIX_CAP overrides it.
inline constexpr std::uint64_t kDefaultMatrixCap = 1'000'000;

/// kDefaultMatrixCap unless SGP_MATRIX_CAP holds a positive integer.
std::uint64_t matrix_cap_from_env();

/// Dense square integer matrix, row-major.
struct IntMatrix {
  std::size_t order = 0;
  std::vector<Int> data;

  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : order(n), data(n * n, 0) {}
  IntMatrix(std::size_t n, std::vector<Int> values) : order(n), data(std::move(values)) {}

  Int& operator()(std::size_t i, std::size_t j) { return data[i * order + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data[i * order + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

enum class RFKind { Plus, Minus };

/// Row-factorization matrix for a pseudo-Frobenius number f. Diagonal -1,
/// off-diagonal nonnegative; row i of an RF+ matrix writes f over the
/// generators, row i of an RF- matrix writes f_i - f.
struct RFMatrix {
  RFKind kind = RFKind::Plus;
  Int f = 0;
  IntMatrix entries;
  std::vector<Int> ng;  // NG-vector entries, RF- only

  friend bool operator==(const RFMatrix&, const RFMatrix&) = default;
};

/// All RF-matrices of one kind for one f, kept as the product of per-row
/// factorization lists. Matrix k is decoded from k in mixed radix with row 0
/// most significant, so ranges of k can be handed to independent workers.
class RFMatrixSet {
 public:
  RFMatrixSet(RFKind kind, Int f, std::vector<Int> ng, std::vector<std::vector<std::vector<Int>>> rows);

  RFKind kind() const noexcept { return kind_; }
  Int f() const noexcept { return f_; }
  const std::vector<Int>& ng() const noexcept { return ng_; }
  std::size_t order() const noexcept { return rows_.size(); }

  /// Candidate rows for row i, lexicographically descending, diagonal -1.
  const std::vector<std::vector<Int>>& row_options(std::size_t i) const { return rows_.at(i); }

  /// Number of matrices; saturates at UINT64_MAX.
  std::uint64_t count() const noexcept { return count_; }

  RFMatrix at(std::uint64_t index) const;
  std::optional<std::uint64_t> index_of(const RFMatrix& a) const;
  bool contains(const RFMatrix& a) const { return index_of(a).has_value(); }

  /// Throws EnumerationCapError when count() > cap.
  std::vector<RFMatrix> materialize(std::uint64_t cap = kDefaultMatrixCap) const;

 private:
  RFKind kind_;
  Int f_;
  std::vector<Int> ng_;
  std::vector<std::vector<std::vector<Int>>> rows_;
  std::uint64_t count_ = 0;
};

/// Throws Error{NotPseudoFrobenius}.
RFMatrixSet rf_plus_set(const NumericalSemigroup& s, Int f);
/// Throws Error{NotPseudoFrobenius, FIsNGEntry}.
/// Factorizations of `value` as rows of an RF matrix for row i: coefficient i
/// replaced by -1, lexicographically descending.
std::vector<std::vector<Int>> rf_row_options(const NumericalSemigroup& s, std::size_t i, Int value);

RFMatrixSet rf_minus_set(const NumericalSemigroup& s, const NGVector& ng, Int f);

std::vector<RFMatrix> rf_plus(const NumericalSemigroup& s, Int f,
                              std::uint64_t cap = kDefaultMatrixCap);
std::vector<RFMatrix> rf_minus(const NumericalSemigroup& s, const NGVector& ng, Int f,
                               std::uint64_t cap = kDefaultMatrixCap);

/// a_{jk} * b_{kj} == 0 for every j != k. Throws Error{MismatchedF} unless
/// `plus` is RF+ and `minus` is RF- for the same f and order.
bool check_coppie(const RFMatrix& plus, const RFMatrix& minus);

/// lambda_{ij} = max{lambda >= 1 : lambda * n_j - n_i not in S} and
/// M_{i,j} = lambda_{ij} * n_j - n_i, for i != j (0-based).
struct MaxGapTable {
  std::size_t order = 0;
  std::vector<Int> lambda;
  std::vector<Int> m;

  Int lambda_at(std::size_t i, std::size_t j) const { return lambda[i * order + j]; }
  Int gap_at(std::size_t i, std::size_t j) const { return m[i * order + j]; }
};

MaxGapTable max_gap_table(const NumericalSemigroup& s);

/// A row with nu - 2 zeroes: plus side f + n_i = lambda * n_j, minus side
/// n_i + f_i - f = lambda * n_j. Indices 0-based.
struct Witness {
  RFKind side = RFKind::Plus;
  std::size_t i = 0;
  std::size_t j = 0;
  Int lambda = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// PF(S) minus the NG-vector entries, split by whether some RF+ or RF- row
/// of f has nu - 2 zeroes.
struct PFClassification {
  NGVector ng;
  std::vector<Int> pf1;
  std::vector<Int> pf2;
  std::map<Int, std::vector<Witness>> witnesses;

  bool in_pf1(Int f) const;
  bool in_pf2(Int f) const;
};

/// Throws Error{NotNearlyGorenstein} when S has no NG-vector and
/// Error{PreconditionViolated} when `ng` is not one.
PFClassification classify_pf(const NumericalSemigroup& s, const NGVector& ng);

struct MuValues {
  std::vector<Int> mu;  // mu_s = |{i : M_{i,s} in PF1}|
  Int bound = 0;        // 38 - sum_s C(mu_s - 1, 2)
};

/// Throws Error{WrongEmbeddingDimension} unless nu = 5.
MuValues mu_values(const NumericalSemigroup& s, const PFClassification& cls);
MuValues mu_values(const NumericalSemigroup& s, const PFClassification& cls,
                   const MaxGapTable& table);

/// Off-diagonal zero positions of a square matrix.
struct ZeroPattern {
  std::size_t order = 0;
  std::vector<char> mask;

  bool at(std::size_t i, std::size_t j) const { return mask[i * order + j] != 0; }
  std::size_t row_zeroes(std::size_t i) const;
  std::size_t column_zeroes(std::size_t j) const;

  friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;
};

ZeroPattern zero_pattern(const IntMatrix& a);
inline ZeroPattern zero_pattern(const RFMatrix& a) { return zero_pattern(a.entries); }

}  // namespace sgp
