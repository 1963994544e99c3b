#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sgp/semigroup.hpp"

namespace sgp {

/// Every statement the harness can check. QUESTION_MS and PF_CLASS_VARIES
/// are report-only: they flag instances and never fail.
enum class ClaimId {
  HERZOG3,
  NG4_TYPE3,
  AS4_TYPE3,
  THM_MAIN,
  THM_3DISTINCT,
  PF2_BOUND,
  PF1_BOUND,
  MU_BOUND,
  COPPIE,
  FIRST_ZERO,
  NGV_PROPS,
  AS_IMPLIES_NG,
  TRACE_EQ,
  PF2_TWO_ZEROES,
  SAME2,
  FORM_UNIQUE,
  QUESTION_MS,
  PF_CLASS_VARIES,
};

const std::vector<ClaimId>& all_claims();
std::string_view to_string(ClaimId id) noexcept;
std::optional<ClaimId> parse_claim(std::string_view name);
bool is_report_only(ClaimId id) noexcept;

enum class Status { Pass, Fail, Inapplicable, Flagged };
std::string_view to_string(Status s) noexcept;

struct ClaimResult {
  ClaimId id;
  Status status = Status::Inapplicable;
  nlohmann::json witness;  // null unless there is something to show
};

struct CheckOptions {
  std::uint64_t seed = 0;
  /// Explicit (RF+, RF-) pairs checked per f before switching to sampling.
  std::uint64_t pair_cap = 10'000;
  /// NG-vectors checked per semigroup before switching to seeded sampling.
  std::uint64_t vector_cap = 64;
};

struct CheckReport {
  std::vector<Int> generators;
  Int genus = 0;
  Int frobenius = 0;
  std::vector<Int> pseudo_frobenius;
  bool almost_symmetric = false;
  bool nearly_gorenstein = false;
  std::uint64_t ng_vector_count = 0;
  std::uint64_t ng_vectors_checked = 0;
  std::vector<ClaimResult> claims;  // one per requested claim, in claim order
  std::chrono::microseconds elapsed{0};

  bool has_failure() const;
  bool has_flag() const;
};

/// Evaluates the requested claims on one semigroup. Exceptions raised while
/// checking are turned into failures of every requested claim.
CheckReport check_semigroup(const NumericalSemigroup& s, const std::set<ClaimId>& claims,
                            const CheckOptions& options = {});

enum class EmitPolicy { None, Interesting, All };

struct HarnessConfig {
  Int genus_max = 20;
  std::optional<std::set<std::size_t>> embdim_filter;
  std::set<ClaimId> claims;  // empty means every claim
  unsigned workers = 1;
  std::uint64_t seed = 0;
  std::uint64_t pair_cap = 10'000;
  std::uint64_t vector_cap = 64;
  /// Which per-semigroup reports check_all keeps; Interesting keeps reports
  /// with a failure or a flag.
  EmitPolicy emit = EmitPolicy::Interesting;
};

/// Children in the genus tree: S \ {g} for each minimal generator g > F(S),
/// in ascending order of g.
std::vector<NumericalSemigroup> genus_tree_children(const NumericalSemigroup& s);

/// Every numerical semigroup of genus <= genus_max exactly once, depth first
/// from N, filtered by embedding dimension.
void enumerate_semigroups(const HarnessConfig& cfg,
                          const std::function<void(const NumericalSemigroup&)>& visit);

struct ClaimTally {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t inapplicable = 0;
  std::uint64_t flagged = 0;
};

/// Largest type seen in one (nu, nearly Gorenstein, almost symmetric) cell,
/// with the lexicographically least generator tuple attaining it.
struct CellStats {
  std::uint64_t count = 0;
  std::size_t max_type = 0;
  std::vector<Int> witness;
};

struct Summary {
  Int genus_max = 0;
  std::optional<std::set<std::size_t>> embdim_filter;
  std::vector<ClaimId> claims;
  std::uint64_t seed = 0;
  std::uint64_t pair_cap = 0;
  std::uint64_t vector_cap = 0;
  std::uint64_t semigroups = 0;
  std::uint64_t vector_sampled = 0;  // semigroups whose NG-vectors were sampled
  std::map<Int, std::uint64_t> per_genus;
  std::map<ClaimId, ClaimTally> tallies;
  std::map<std::tuple<std::size_t, bool, bool>, CellStats> cells;
  std::uint64_t failures = 0;
  std::uint64_t flagged = 0;

  void add(const CheckReport& r);
  void merge(const Summary& other);
};

struct HarnessResult {
  std::vector<CheckReport> reports;  // sorted by generator tuple
  Summary summary;
};

/// Runs every configured claim over the genus tree, splitting subtrees across
/// cfg.workers threads. The summary does not depend on the worker count.
HarnessResult check_all(const HarnessConfig& cfg);

}  // namespace sgp
