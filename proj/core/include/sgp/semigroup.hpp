#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace sgp {

using Int = std::int64_t;

/// Largest generator value accepted by the constructor.
inline constexpr Int kMaxGenerator = Int{1} << 31;
/// Largest multiplicity accepted; the Apéry table has one entry per residue.
inline constexpr Int kMaxMultiplicity = Int{1} << 24;

/// A factorization x = sum coeffs[i] * n_i over the minimal generators.
struct Factorization {
  std::vector<Int> coeffs;
  Int value = 0;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Every nonnegative coefficient vector c with sum c[i] * gens[i] == x, in
/// lexicographically descending order of c. Empty when x has no
/// representation.
std::vector<Factorization> factorizations(std::span<const Int> gens, Int x);

/// Streams the same sequence as factorizations() without materializing it.
/// The callback returns false to stop early.
void for_each_factorization(std::span<const Int> gens, Int x,
                            const std::function<bool(std::span<const Int>)>& visit);

/// A numerical semigroup given by its unique minimal system of generators.
///
/// Construction reduces the input to the minimal system and precomputes the
/// Apéry set with respect to the multiplicity; every membership query is a
/// table lookup afterwards. Instances are immutable and safe to share across
/// threads.
class NumericalSemigroup {
 public:
  /// Throws Error{EmptyInput, InvalidGenerator, GcdNotOne, TooLarge}.
  explicit NumericalSemigroup(std::span<const Int> raw_generators);
  NumericalSemigroup(std::initializer_list<Int> raw_generators);

  const std::vector<Int>& generators() const noexcept { return generators_; }
  Int generator(std::size_t i) const { return generators_.at(i); }
  std::size_t embedding_dimension() const noexcept { return generators_.size(); }
  Int multiplicity() const noexcept { return generators_.front(); }

  /// F(S); -1 for S = N.
  Int frobenius() const noexcept { return frobenius_; }
  Int genus() const noexcept { return genus_; }
  /// Conductor F(S) + 1.
  Int conductor() const noexcept { return frobenius_ + 1; }

  /// Apéry set with respect to the multiplicity, indexed by residue.
  const std::vector<Int>& apery() const noexcept { return apery_; }

  bool contains(Int x) const noexcept {
    if (x < 0) return false;
    const Int m = multiplicity();
    return x >= apery_[static_cast<std::size_t>(x % m)];
  }

  /// Apéry set with respect to an arbitrary nonzero element n of S.
  /// Throws Error{NotAMember}.
  std::vector<Int> apery_set(Int n) const;

  std::vector<Int> gaps() const;

  /// Ascending; the last element is F(S). For S = N this is {-1}.
  const std::vector<Int>& pseudo_frobenius() const noexcept { return pseudo_frobenius_; }
  std::size_t type() const noexcept { return pseudo_frobenius_.size(); }
  bool is_pseudo_frobenius(Int x) const noexcept;

  std::vector<Factorization> factorizations(Int x) const;

  /// x <=_S y, i.e. y - x is in S.
  bool leq(Int x, Int y) const noexcept { return contains(y - x); }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  std::vector<Int> generators_;
  std::vector<Int> apery_;
  std::vector<Int> pseudo_frobenius_;
  Int frobenius_ = -1;
  Int genus_ = 0;
};

/// Folds one more generator into an Apéry table modulo apery.size(); entries
/// equal to kUnreachable are residues not yet reachable.
void relax_apery(std::vector<Int>& apery, Int generator);
inline constexpr Int kUnreachable = INT64_MAX / 4;

}  // namespace sgp
