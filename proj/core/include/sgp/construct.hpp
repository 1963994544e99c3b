#pragma once

#include <array>
#include <functional>
#include <vector>

#include "sgp/gorenstein.hpp"
#include "sgp/rf.hpp"
#include "sgp/semigroup.hpp"

namespace sgp {

/// M(S) = S \ {0}.
RelativeIdeal maximal_ideal(const NumericalSemigroup& s);

/// Inputs of S ⋈^b E = 2*S ∪ (2*E + b). E must be an ideal of S contained in
/// S and b an odd element of S.
struct DuplicationSpec {
  NumericalSemigroup base;
  RelativeIdeal ideal;
  Int b = 0;
};

/// Direct membership in 2*S ∪ (2*E + b), without building the semigroup.
bool duplication_contains(const DuplicationSpec& spec, Int x);

/// Builds the numerical duplication. When E = M(S) and S != N the builder
/// also asserts that the embedding dimension doubles and, for almost
/// symmetric S, that the result is almost symmetric of type 2 t(S) + 1.
/// Throws Error{BNotOdd, BNotInS, NotAnIdeal, PostconditionFailed}.
NumericalSemigroup numerical_duplication(const DuplicationSpec& spec);

/// Least odd element of S; it is always a minimal generator.
Int smallest_odd_element(const NumericalSemigroup& s);

/// Picks the odd b used at each duplication step.
using BSelector = std::function<Int(const NumericalSemigroup&)>;

/// [S, S_1, ..., S_depth] with S_i = S_{i-1} ⋈^{b} M(S_{i-1}); each level is
/// asserted almost symmetric with
///   t(S_i) - 2 nu(S_i) = 2^i (t(S) - 2 nu(S)) + 2^i - 1.
/// Throws Error{NotAlmostSymmetric, PreconditionViolated, PostconditionFailed}.
std::vector<NumericalSemigroup> duplication_tower(const NumericalSemigroup& s, int depth,
                                                  const BSelector& select_b = smallest_odd_element);

// Backelin's four-generated family
//   S_T = <s, s+3, s+3T+1, s+3T+2>,  s = (3T+2)^2 + 3,  T >= 2,
// with f = (3T+3) n_4 - n_1 and f - 3*lambda in PF(S_T) for lambda = 1..T.

std::array<Int, 4> backelin_generators(Int t);
Int backelin_f(Int t);
/// An RF+ matrix of f - 3*lambda. Row 3 is (T+4+lambda, 2T-lambda, -1, 0);
/// it is the only factorization of f - 3*lambda + n_3 over n_1, n_2.
IntMatrix backelin_rf_template(Int t, Int lambda);

/// Throws Error{TTooSmall, PostconditionFailed}.
NumericalSemigroup backelin(Int t);

// Six-generated family built from the RF+ matrix of
//   f = (T+1) n_2 - n_1 = T n_3 - n_2 = (T+2) n_1 - n_3,
// with n_{i+3} = n_i + d. Generators here are in construction order, which
// is not ascending; templates use the same order.

std::array<Int, 6> dim6_generators(Int t, Int d, Int k);
Int dim6_f(Int t, Int k);
IntMatrix dim6_rf_template(Int t, Int lambda);

/// Requires k >= T, d >= T^2, gcd(d, k) = 1 and T != 1 (mod 5); asserts
/// nu = 6, {f, f+d, ..., f+(T-1)d} in PF(S) and that every template matrix is
/// an RF+ matrix of its f + lambda*d.
/// Throws Error{PreconditionViolated, PostconditionFailed}.
NumericalSemigroup family_dim6(Int t, Int d, Int k);

/// Reorders a matrix written in construction order to the ascending order of
/// the given generators.
IntMatrix to_sorted_order(const IntMatrix& a, std::span<const Int> construction_order);

}  // namespace sgp
