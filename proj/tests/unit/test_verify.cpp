#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "sgp/json_io.hpp"
#include "sgp/verify.hpp"

using namespace sgp;

namespace {

std::map<Int, std::uint64_t> counts_by_genus(const HarnessConfig& cfg) {
  std::map<Int, std::uint64_t> out;
  enumerate_semigroups(cfg, [&](const NumericalSemigroup& s) { ++out[s.genus()]; });
  return out;
}

Status status_of(const CheckReport& r, ClaimId id) {
  for (const auto& c : r.claims) {
    if (c.id == id) return c.status;
  }
  FAIL("claim missing");
  return Status::Fail;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("genus tree from N") {
  HarnessConfig cfg;
  cfg.genus_max = 0;
  const auto zero = counts_by_genus(cfg);
  CHECK(zero == std::map<Int, std::uint64_t>{{0, 1}});
  cfg.genus_max = 3;
  CHECK(counts_by_genus(cfg) == std::map<Int, std::uint64_t>{{0, 1}, {1, 1}, {2, 2}, {3, 4}});
  cfg.genus_max = -1;
  CHECK(counts_by_genus(cfg).empty());
}

TEST_CASE("genus tree counts match a brute-force search up to genus 12") {
  HarnessConfig cfg;
  cfg.genus_max = 12;
  const auto tree = counts_by_genus(cfg);
  for (int g = 0; g <= 12; ++g) {
    CAPTURE(g);
    CHECK(tree.at(g) == oracle::count_genus(g));
  }
}

TEST_CASE("genus tree visits each semigroup once") {
  HarnessConfig cfg;
  cfg.genus_max = 11;
  std::set<std::vector<Int>> seen;
  std::size_t visits = 0;
  enumerate_semigroups(cfg, [&](const NumericalSemigroup& s) {
    seen.insert(s.generators());
    ++visits;
  });
  CHECK(seen.size() == visits);
}

TEST_CASE("children remove one generator above F") {
  const NumericalSemigroup s{3, 4, 5};
  const auto kids = genus_tree_children(s);
  REQUIRE(kids.size() == 3);
  for (const auto& k : kids) CHECK(k.genus() == s.genus() + 1);
  CHECK(kids[0].generators() == std::vector<Int>{4, 5, 6, 7});
}

TEST_CASE("embedding dimension filter") {
  HarnessConfig cfg;
  cfg.genus_max = 10;
  cfg.embdim_filter = std::set<std::size_t>{5};
  std::uint64_t filtered = 0;
  enumerate_semigroups(cfg, [&](const NumericalSemigroup& s) {
    CHECK(s.embedding_dimension() == 5);
    ++filtered;
  });
  cfg.embdim_filter.reset();
  std::uint64_t expected = 0;
  enumerate_semigroups(cfg, [&](const NumericalSemigroup& s) { expected += s.embedding_dimension() == 5; });
  CHECK(filtered == expected);
  CHECK(filtered > 0);
}

TEST_CASE("claim names round-trip") {
  for (ClaimId id : all_claims()) CHECK(parse_claim(to_string(id)) == id);
  CHECK_FALSE(parse_claim("NOPE").has_value());
  CHECK(is_report_only(ClaimId::QUESTION_MS));
  CHECK_FALSE(is_report_only(ClaimId::COPPIE));
}

TEST_CASE("N has every claim inapplicable") {
  HarnessConfig cfg;
  cfg.genus_max = 0;
  cfg.emit = EmitPolicy::All;
  const HarnessResult r = check_all(cfg);
  REQUIRE(r.reports.size() == 1);
  for (const auto& c : r.reports[0].claims) CHECK(c.status == Status::Inapplicable);
  CHECK(r.summary.semigroups == 1);
  CHECK(r.summary.failures == 0);
}

TEST_CASE("the worked example passes every claim") {
  const std::set<ClaimId> all(all_claims().begin(), all_claims().end());
  const CheckReport r = check_semigroup(NumericalSemigroup{13, 45, 72, 79, 99}, all);
  CHECK_FALSE(r.has_failure());
  CHECK(r.claims.size() == all_claims().size());
  CHECK(r.ng_vector_count == 2);
  CHECK(status_of(r, ClaimId::THM_3DISTINCT) == Status::Pass);
  CHECK(status_of(r, ClaimId::THM_MAIN) == Status::Pass);
  CHECK(status_of(r, ClaimId::COPPIE) == Status::Pass);
  CHECK(status_of(r, ClaimId::HERZOG3) == Status::Inapplicable);
}

TEST_CASE("requested claims only, in claim order") {
  const CheckReport r =
      check_semigroup(NumericalSemigroup{3, 4, 5}, {ClaimId::TRACE_EQ, ClaimId::HERZOG3});
  REQUIRE(r.claims.size() == 2);
  CHECK(r.claims[0].id == ClaimId::HERZOG3);
  CHECK(r.claims[0].status == Status::Pass);
  CHECK(r.claims[1].id == ClaimId::TRACE_EQ);
}

TEST_CASE("summary does not depend on the worker count") {
  HarnessConfig cfg;
  cfg.genus_max = 13;
  cfg.workers = 1;
  const std::string one = summary_json(check_all(cfg).summary).dump();
  cfg.workers = 3;
  const std::string three = summary_json(check_all(cfg).summary).dump();
  CHECK(one == three);
}

TEST_CASE("zero failures on every claim up to genus 12") {
  HarnessConfig cfg;
  cfg.genus_max = 12;
  const HarnessResult r = check_all(cfg);
  CHECK(r.summary.failures == 0);
  CHECK(r.summary.flagged == 0);
  CHECK(r.reports.empty());
  std::uint64_t total = 0;
  for (const auto& [g, n] : r.summary.per_genus) total += n;
  CHECK(total == r.summary.semigroups);
  for (const auto& [id, t] : r.summary.tallies) {
    CHECK(t.pass + t.fail + t.inapplicable + t.flagged == r.summary.semigroups);
  }
}

TEST_CASE("cells keep the largest type and the least witness") {
  Summary a;
  CheckReport r1;
  r1.generators = {3, 5, 7};
  r1.pseudo_frobenius = {2, 4};
  CheckReport r2 = r1;
  r2.generators = {3, 4, 5};
  a.add(r1);
  a.add(r2);
  const CellStats& c = a.cells.at({3, false, false});
  CHECK(c.count == 2);
  CHECK(c.max_type == 2);
  CHECK(c.witness == std::vector<Int>{3, 4, 5});
  Summary b;
  b.merge(a);
  CHECK(summary_json(b).dump() == summary_json(a).dump());
}

}  // TEST_SUITE
