#include <doctest.h>

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "sgp/error.hpp"
#include "sgp/semigroup.hpp"

using sgp::ErrorKind;
using sgp::Int;
using sgp::NumericalSemigroup;

namespace {

ErrorKind kind_of(const std::vector<Int>& gens) {
  try {
    NumericalSemigroup s(gens);
  } catch (const sgp::Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::EmptyInput;
}

std::vector<std::vector<Int>> coeffs_of(const std::vector<sgp::Factorization>& fs) {
  std::vector<std::vector<Int>> out;
  for (const auto& f : fs) out.push_back(f.coeffs);
  return out;
}

}  // namespace

TEST_SUITE("semigroup") {

TEST_CASE("whole of N") {
  const NumericalSemigroup s{1};
  CHECK(s.generators() == std::vector<Int>{1});
  CHECK(s.frobenius() == -1);
  CHECK(s.genus() == 0);
  CHECK(s.pseudo_frobenius() == std::vector<Int>{-1});
  CHECK(s.type() == 1);
  CHECK(s.apery() == std::vector<Int>{0});
}

TEST_CASE("redundant generators are dropped") {
  CHECK((NumericalSemigroup{4, 6, 9, 10}).generators() == std::vector<Int>{4, 6, 9});
  CHECK((NumericalSemigroup{10, 9, 6, 4, 4}).generators() == std::vector<Int>{4, 6, 9});
  CHECK((NumericalSemigroup{13, 45, 72, 79, 99}).embedding_dimension() == 5);
  CHECK((NumericalSemigroup{3, 1, 7}).generators() == std::vector<Int>{1});
}

TEST_CASE("constructor errors") {
  CHECK(kind_of({}) == ErrorKind::EmptyInput);
  CHECK(kind_of({4, 6}) == ErrorKind::GcdNotOne);
  CHECK(kind_of({0, 3}) == ErrorKind::InvalidGenerator);
  CHECK(kind_of({-2, 3}) == ErrorKind::InvalidGenerator);
  CHECK(kind_of({(Int{1} << 31) + 1, 3}) == ErrorKind::TooLarge);
  CHECK(kind_of({(Int{1} << 24) + 1, (Int{1} << 24) + 2}) == ErrorKind::TooLarge);
}

TEST_CASE("membership") {
  const NumericalSemigroup s{3, 5};
  CHECK_FALSE(s.contains(7));
  CHECK(s.contains(8));
  CHECK_FALSE(s.contains(-5));
  CHECK(s.contains(0));
  CHECK(s.gaps() == std::vector<Int>{1, 2, 4, 7});
}

TEST_CASE("Apery sets") {
  CHECK((NumericalSemigroup{3, 5}).apery_set(3) == std::vector<Int>{0, 10, 5});
  CHECK((NumericalSemigroup{1}).apery_set(1) == std::vector<Int>{0});
  CHECK((NumericalSemigroup{2, 3}).apery_set(2) == std::vector<Int>{0, 3});
  CHECK((NumericalSemigroup{3, 5}).apery_set(5) == std::vector<Int>{0, 6, 12, 3, 9});
  CHECK_THROWS_AS((NumericalSemigroup{3, 5}).apery_set(7), sgp::Error);
  CHECK_THROWS_AS((NumericalSemigroup{3, 5}).apery_set(0), sgp::Error);
}

TEST_CASE("pseudo-Frobenius numbers") {
  CHECK((NumericalSemigroup{2, 3}).pseudo_frobenius() == std::vector<Int>{1});
  CHECK((NumericalSemigroup{13, 45, 72, 79, 99}).pseudo_frobenius() == std::vector<Int>{59, 185, 212, 244});
  const std::vector<Int> big{3079, 3289, 3521, 3655, 3674, 3789, 3923, 4057, 4172, 4191, 4325, 4557, 4767, 7846};
  CHECK((NumericalSemigroup{455, 497, 574, 589, 631, 708}).pseudo_frobenius() == big);
  CHECK((NumericalSemigroup{3, 4, 5}).pseudo_frobenius() == std::vector<Int>{1, 2});
}

TEST_CASE("factorizations") {
  const NumericalSemigroup s{3, 5};
  CHECK(coeffs_of(s.factorizations(0)) == std::vector<std::vector<Int>>{{0, 0}});
  CHECK(coeffs_of(s.factorizations(15)) == std::vector<std::vector<Int>>{{5, 0}, {0, 3}});
  CHECK(s.factorizations(7).empty());
  CHECK(s.factorizations(-3).empty());
  for (const auto& f : NumericalSemigroup{13, 45, 72, 79, 99}.factorizations(500)) {
    Int sum = 0;
    for (std::size_t i = 0; i < 5; ++i) sum += f.coeffs[i] * NumericalSemigroup{13, 45, 72, 79, 99}.generator(i);
    CHECK(sum == 500);
    CHECK(f.value == 500);
  }
}

TEST_CASE("streamed factorizations stop early") {
  const std::vector<Int> gens{3, 5, 7};
  int seen = 0;
  sgp::for_each_factorization(gens, 60, [&](std::span<const Int>) { return ++seen < 3; });
  CHECK(seen == 3);
}

TEST_CASE("S-order") {
  const NumericalSemigroup s{3, 5};
  CHECK(s.leq(4, 4));
  CHECK(s.leq(1, 4));
  CHECK_FALSE(s.leq(4, 1));
  const NumericalSemigroup p{13, 45, 72, 79, 99};
  for (Int f : p.pseudo_frobenius()) {
    for (Int g : p.pseudo_frobenius()) {
      if (f != g) CHECK_FALSE(p.leq(f, g));
    }
  }
}

TEST_CASE("agrees with the sieve and DFS oracles") {
  for (const auto& gens : oracle::random_semigroups(150, 2000, 11)) {
    const NumericalSemigroup s(gens);
    const auto b = oracle::Brute::upto(gens, 2000);
    CAPTURE(gens);
    REQUIRE(s.frobenius() == b.frobenius());
    CHECK(s.pseudo_frobenius() == b.pseudo_frobenius());
    CHECK(s.gaps() == b.gaps());
    for (Int x = -2; x <= s.frobenius() + 2; ++x) REQUIRE(s.contains(x) == b.contains(x));
    for (Int x : {s.frobenius() + s.multiplicity(), Int{137}, s.generators().back() * 3}) {
      CHECK(coeffs_of(s.factorizations(x)) == oracle::factorizations(s.generators(), x));
    }
  }
}

TEST_CASE("Apery consistency") {
  for (const auto& gens : oracle::random_semigroups(200, 600, 12)) {
    const NumericalSemigroup s(gens);
    const Int m = s.multiplicity();
    const auto& ap = s.apery();
    CAPTURE(gens);
    CHECK(ap[0] == 0);
    Int genus = 0;
    for (std::size_t r = 0; r < ap.size(); ++r) {
      CHECK(ap[r] % m == static_cast<Int>(r));
      CHECK_FALSE(s.contains(ap[r] - m));
      genus += ap[r] / m;
    }
    CHECK(genus == s.genus());
    CHECK(*std::max_element(ap.begin(), ap.end()) - m == s.frobenius());
    CHECK(s.apery_set(s.generators().back()).size() == static_cast<std::size_t>(s.generators().back()));
  }
}

TEST_CASE("PF through maximal Apery elements") {
  for (const auto& gens : oracle::random_semigroups(200, 600, 13)) {
    const NumericalSemigroup s(gens);
    const Int m = s.multiplicity();
    std::vector<Int> via_apery;
    for (Int w : s.apery()) {
      const bool maximal = std::none_of(s.apery().begin(), s.apery().end(),
                                        [&](Int v) { return v != w && s.leq(w, v); });
      if (maximal) via_apery.push_back(w - m);
    }
    std::sort(via_apery.begin(), via_apery.end());
    CAPTURE(gens);
    CHECK(via_apery == s.pseudo_frobenius());
  }
}

}  // TEST_SUITE
