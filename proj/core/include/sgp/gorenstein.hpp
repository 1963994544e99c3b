#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sgp/semigroup.hpp"

namespace sgp {

/// A set of integers that contains every integer from `conductor` on, stored
/// as its finitely many elements below the conductor.
struct RelativeIdeal {
  std::vector<Int> below_conductor;  // ascending, all < conductor
  Int conductor = 0;

  bool contains(Int x) const;

  friend bool operator==(const RelativeIdeal&, const RelativeIdeal&) = default;
};

/// S itself as a relative ideal.
RelativeIdeal as_ideal(const NumericalSemigroup& s);

/// K(S) = {x in N : F(S) - x not in S}; conductor F(S) + 1.
RelativeIdeal canonical_ideal(const NumericalSemigroup& s);

/// S - K(S) = {x in Z : x + K(S) is contained in S}.
RelativeIdeal dual_of_canonical(const NumericalSemigroup& s);

/// S = K(S). Cross-checked against PF(S) = {F(S)}; a disagreement throws
/// std::logic_error.
bool is_symmetric(const NumericalSemigroup& s);

/// n_i + F(S) - f in S for every generator and every pseudo-Frobenius number.
/// Cross-checked against the duality f -> F(S) - f on PF(S) \ {F(S)}.
bool is_almost_symmetric(const NumericalSemigroup& s);

/// Second route for almost symmetry: PF(S) \ {F} is closed under f -> F - f.
bool almost_symmetric_via_pf_duality(const NumericalSemigroup& s);

/// Every per-generator candidate set is nonempty.
bool is_nearly_gorenstein(const NumericalSemigroup& s);

/// Independent route: K(S) + (S - K(S)) contains M(S), decided on a finite
/// window.
bool nearly_gorenstein_via_trace(const NumericalSemigroup& s);

/// T_i = {g in PF(S) : n_i + g - f in S for all f in PF(S)}, each sorted
/// descending. NG-vectors are exactly the product of these sets.
std::vector<std::vector<Int>> ng_candidates(const NumericalSemigroup& s);

/// The second-smallest index h' with f_{h'} != F(S), and how it is written:
/// either F - n_{h'} + n_{ell'} with ell' < h', or F - n_{h'} + a * n_h.
struct SecondDivergence {
  enum class Form { Generator, Multiple, None };
  std::size_t index = 0;
  Form form = Form::None;
  Int value = 0;  // ell' (0-based) for Generator, a for Multiple
};

/// A nearly Gorenstein vector with its divergence annotations. Indices are
/// 0-based here; the CLI prints them 1-based.
struct NGVector {
  std::vector<Int> entries;
  std::optional<std::size_t> h;    // first index with entries[h] != F(S)
  std::optional<std::size_t> ell;  // ell < h with entries[h] == F - n_h + n_ell
  std::optional<SecondDivergence> second;

  friend bool operator==(const NGVector& a, const NGVector& b) { return a.entries == b.entries; }
};

bool is_ng_vector(const NumericalSemigroup& s, const std::vector<Int>& entries);

/// Computes h, ell and the second-divergence witness for a candidate vector.
/// Does not validate the defining condition; see is_ng_vector.
NGVector annotate_ng_vector(const NumericalSemigroup& s, std::vector<Int> entries);

/// Number of NG-vectors, saturating at UINT64_MAX. Zero when S is not
/// nearly Gorenstein.
std::uint64_t ng_vector_count(const std::vector<std::vector<Int>>& candidates);

/// The NG-vector at `index` in product order (first generator most
/// significant). Requires index < ng_vector_count(candidates).
NGVector ng_vector_at(const NumericalSemigroup& s, const std::vector<std::vector<Int>>& candidates,
                      std::uint64_t index);

/// All NG-vectors in product order of ng_candidates().
/// Throws Error{NotNearlyGorenstein}, and EnumerationCapError when there are
/// more than `cap` vectors.
std::vector<NGVector> ng_vectors(const NumericalSemigroup& s, std::uint64_t cap = 1'000'000);

}  // namespace sgp
