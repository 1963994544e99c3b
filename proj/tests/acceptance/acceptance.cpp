// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any selected criterion fails.
//
//   sgp_acceptance              all criteria
//   sgp_acceptance 1 4          only criteria 1 and 4
//   sgp_acceptance --genus 16   criteria 3 and 7 over a smaller range

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sgp/construct.hpp"
#include "sgp/error.hpp"
#include "sgp/gorenstein.hpp"
#include "sgp/json_io.hpp"
#include "sgp/rf.hpp"
#include "sgp/verify.hpp"

using namespace sgp;

namespace {

// Tolerances. Every check is exact; only wall-clock budgets are soft limits
// and they are pinned here.
constexpr double kExampleBudgetSeconds = 1.0;
constexpr double kBigExampleBudgetSeconds = 5.0;
constexpr double kExhaustiveBudgetSeconds = 60.0;
constexpr Int kExhaustiveGenus = 20;
constexpr std::size_t kOracleSamples = 1000;
constexpr Int kOracleMaxFrobenius = 1500;
constexpr std::uint64_t kOracleSeed = 20240601;
constexpr Int kDuplicationGenus = 12;
constexpr int kTowerDepth = 2;
constexpr unsigned kParallelWorkers = 8;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Collects failed conditions; the first few are printed under the verdict.
struct Outcome {
  std::vector<std::string> problems;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  bool passed() const { return problems.empty(); }
};

std::string join(const std::vector<Int>& xs) {
  std::string out;
  for (Int x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

bool contains(const std::vector<Int>& xs, Int x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

Int excess(const NumericalSemigroup& s) {
  return static_cast<Int>(s.type()) - 2 * static_cast<Int>(s.embedding_dimension());
}

// ---- 1. worked example ------------------------------------------------------

Outcome worked_example() {
  Outcome o;
  const auto t0 = Clock::now();
  const NumericalSemigroup s{13, 45, 72, 79, 99};
  o.expect(s.pseudo_frobenius() == std::vector<Int>{59, 185, 212, 244}, "PF != {59,185,212,244}");
  o.expect(is_nearly_gorenstein(s), "not nearly Gorenstein");
  o.expect(!is_almost_symmetric(s), "almost symmetric");
  const auto v = ng_vectors(s);
  o.expect(v.size() == 2, "expected exactly two NG-vectors, got " + std::to_string(v.size()));
  if (v.size() == 2) {
    o.expect(v[0].entries == std::vector<Int>{244, 212, 244, 244, 244}, "first NG-vector");
    o.expect(v[1].entries == std::vector<Int>{244, 212, 185, 244, 244}, "second NG-vector");
    const auto& e = v[1].entries;
    o.expect(e[0] != e[1] && e[1] != e[2] && e[0] != e[2], "f_1, f_2, f_3 not pairwise distinct");
    const MaxGapTable table = max_gap_table(s);
    const std::vector<Int> allowed{e[0], e[1], e[2], table.gap_at(3, 4), table.gap_at(4, 3)};
    for (Int f : s.pseudo_frobenius()) o.expect(contains(allowed, f), std::to_string(f) + " outside the allowed set");
    o.expect(table.gap_at(4, 3) == 59 && 59 == 2 * 79 - 99, "M_{5,4} != 59");
    const CheckReport r = check_semigroup(s, {ClaimId::THM_3DISTINCT});
    o.expect(!r.claims.empty() && r.claims[0].status == Status::Pass, "THM_3DISTINCT did not pass");
  }
  const double dt = seconds_since(t0);
  o.expect(dt < kExampleBudgetSeconds, "took " + std::to_string(dt) + " s");
  o.note = std::to_string(dt) + " s";
  return o;
}

// ---- 2. big almost symmetric example ---------------------------------------

IntMatrix big_as_matrix(Int l) {
  return IntMatrix(6, {
      -1, 8 - l, 0, 0, l, 0,
      0, -1, 7 - l, 0, 0, l,
      9 - l, 0, -1, l, 0, 0,
      0, 7 - l, 0, -1, l + 1, 0,
      0, 0, 6 - l, 0, -1, l + 1,
      8 - l, 0, 0, l + 1, 0, -1,
  });
}

Outcome big_example() {
  Outcome o;
  const auto t0 = Clock::now();
  const NumericalSemigroup s{455, 497, 574, 589, 631, 708};
  const std::vector<Int> pf{3079, 3289, 3521, 3655, 3674, 3789, 3923, 4057, 4172, 4191, 4325, 4557, 4767, 7846};
  o.expect(s.pseudo_frobenius() == pf, "PF differs from the listed 14 values");
  o.expect(is_almost_symmetric(s), "not almost symmetric");
  o.expect(s.type() == 14 && s.type() > 2 * s.embedding_dimension(), "t != 14 or t <= 2 nu");
  for (Int k = 0; k < 7; ++k) o.expect(s.is_pseudo_frobenius(3521 + 134 * k), "progression term missing");
  std::optional<ZeroPattern> pattern;
  for (Int l = 1; l <= 5; ++l) {
    const Int f = 3521 + 134 * l;
    const RFMatrix printed{RFKind::Plus, f, big_as_matrix(l), {}};
    o.expect(rf_plus_set(s, f).contains(printed), "printed RF+ matrix missing for lambda " + std::to_string(l));
    const ZeroPattern z = zero_pattern(printed);
    if (!pattern) pattern = z;
    o.expect(z == *pattern, "zero pattern differs at lambda " + std::to_string(l));
  }
  const double dt = seconds_since(t0);
  o.expect(dt < kBigExampleBudgetSeconds, "took " + std::to_string(dt) + " s");
  o.note = std::to_string(dt) + " s";
  return o;
}

// ---- 3. exhaustive claims ------------------------------------------------------

const std::vector<ClaimId> kTheoremClaims{
    ClaimId::HERZOG3,  ClaimId::NG4_TYPE3,   ClaimId::AS4_TYPE3,     ClaimId::THM_MAIN, ClaimId::THM_3DISTINCT,
    ClaimId::PF2_BOUND, ClaimId::PF1_BOUND,  ClaimId::MU_BOUND,      ClaimId::COPPIE,   ClaimId::FIRST_ZERO,
    ClaimId::NGV_PROPS, ClaimId::AS_IMPLIES_NG, ClaimId::TRACE_EQ,   ClaimId::PF2_TWO_ZEROES, ClaimId::SAME2};

struct ExhaustiveRun {
  std::string summary;
  double seconds = 0;
  HarnessResult result;
};

ExhaustiveRun exhaustive(Int genus, unsigned workers) {
  HarnessConfig cfg;
  cfg.genus_max = genus;
  cfg.workers = workers;
  cfg.claims = std::set<ClaimId>(kTheoremClaims.begin(), kTheoremClaims.end());
  const auto t0 = Clock::now();
  ExhaustiveRun run;
  run.result = check_all(cfg);
  run.seconds = seconds_since(t0);
  run.summary = summary_json(run.result.summary).dump();
  return run;
}

Outcome exhaustive_claims(const ExhaustiveRun& run, Int genus) {
  Outcome o;
  const Summary& s = run.result.summary;
  for (ClaimId id : kTheoremClaims) {
    const auto it = s.tallies.find(id);
    const std::uint64_t fails = it == s.tallies.end() ? 0 : it->second.fail;
    o.expect(fails == 0, std::string(to_string(id)) + ": " + std::to_string(fails) + " failures");
  }
  o.expect(s.failures == 0, std::to_string(s.failures) + " semigroups with a failure");
  for (const auto& r : run.result.reports) {
    if (r.has_failure()) o.expect(false, "first failure at <" + join(r.generators) + ">");
    break;
  }
  if (genus == kExhaustiveGenus) {
    o.expect(run.seconds < kExhaustiveBudgetSeconds, "took " + std::to_string(run.seconds) + " s");
  }
  std::ostringstream note;
  note << s.semigroups << " semigroups, " << run.seconds << " s";
  std::size_t max5 = 0;
  for (const auto& [key, cell] : s.cells) {
    if (std::get<0>(key) == 5 && std::get<1>(key) && !std::get<2>(key)) max5 = cell.max_type;
  }
  note << ", max type (nu=5, NG, not AS) = " << max5;
  o.note = note.str();
  return o;
}

// ---- 4. oracle equivalence ----------------------------------------------------

Outcome oracle_equivalence() {
  Outcome o;
  const auto samples = oracle::random_semigroups(kOracleSamples, kOracleMaxFrobenius, kOracleSeed);
  std::size_t checked = 0;
  for (const auto& gens : samples) {
    const NumericalSemigroup s(gens);
    const auto brute = oracle::Brute::upto(gens, kOracleMaxFrobenius);
    const std::string tag = "<" + join(gens) + ">";
    if (s.frobenius() != brute.frobenius()) {
      o.expect(false, tag + ": Frobenius");
      continue;
    }
    for (Int x = -1; x <= brute.limit; ++x) {
      if (s.contains(x) != brute.contains(x)) {
        o.expect(false, tag + ": membership of " + std::to_string(x));
        break;
      }
    }
    o.expect(s.pseudo_frobenius() == brute.pseudo_frobenius(), tag + ": PF");
    std::vector<Int> values{0, s.frobenius()};
    for (Int n : s.generators()) values.push_back(s.frobenius() + n);
    for (Int x : values) {
      std::vector<std::vector<Int>> ours;
      for (const auto& f : s.factorizations(x)) ours.push_back(f.coeffs);
      o.expect(ours == oracle::factorizations(s.generators(), x), tag + ": factorizations of " + std::to_string(x));
    }
    ++checked;
  }
  o.note = std::to_string(checked) + " semigroups";
  return o;
}

// ---- 5. duplication laws ------------------------------------------------------

std::vector<Int> smallest_odd(const NumericalSemigroup& s, std::size_t k) {
  std::vector<Int> out;
  for (Int x = 1; out.size() < k; x += 2) {
    if (s.contains(x)) out.push_back(x);
  }
  return out;
}

Outcome duplication_laws() {
  Outcome o;
  HarnessConfig cfg;
  cfg.genus_max = kDuplicationGenus;
  std::size_t bases = 0;
  std::size_t duplications = 0;
  enumerate_semigroups(cfg, [&](const NumericalSemigroup& s) {
    if (s.multiplicity() == 1 || !is_almost_symmetric(s)) return;
    ++bases;
    const std::string tag = "<" + join(s.generators()) + ">";
    for (Int b : smallest_odd(s, 3)) {
      const NumericalSemigroup d = numerical_duplication({s, maximal_ideal(s), b});
      ++duplications;
      o.expect(d.embedding_dimension() == 2 * s.embedding_dimension(), tag + " b=" + std::to_string(b) + ": nu");
      o.expect(d.type() == 2 * s.type() + 1, tag + " b=" + std::to_string(b) + ": type");
      o.expect(is_almost_symmetric(d), tag + " b=" + std::to_string(b) + ": not AS");
    }
    const auto chain = duplication_tower(s, kTowerDepth);
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const Int p = Int{1} << i;
      o.expect(excess(chain[i]) == p * excess(s) + p - 1, tag + ": tower level " + std::to_string(i));
    }
  });
  const NumericalSemigroup big{455, 497, 574, 589, 631, 708};
  const auto chain = duplication_tower(big, 1);
  o.expect(static_cast<Int>(chain[1].type()) == 2 * static_cast<Int>(chain[1].embedding_dimension()) + 5,
           "big example: t(S_1) != 2 nu(S_1) + 5");
  o.note = std::to_string(bases) + " AS bases, " + std::to_string(duplications) + " duplications";
  return o;
}

// ---- 6. families --------------------------------------------------------------

Outcome families() {
  Outcome o;
  std::size_t last = 0;
  std::string types;
  for (Int t = 2; t <= 6; ++t) {
    try {
      const NumericalSemigroup s = backelin(t);
      o.expect(s.type() > last, "Backelin type not increasing at T=" + std::to_string(t));
      last = s.type();
      types += (types.empty() ? "" : ",") + std::to_string(s.type());
      if (s.type() >= 4) o.expect(!is_nearly_gorenstein(s), "Backelin T=" + std::to_string(t) + " is NG");
    } catch (const Error& e) {
      o.expect(false, "Backelin T=" + std::to_string(t) + ": " + e.what());
    }
  }
  struct Triple {
    Int t, k, d;
  };
  for (const Triple& p : {Triple{2, 3, 4}, Triple{3, 3, 9}, Triple{4, 5, 16}}) {
    const std::string tag = "dim6 (T,k,d)=(" + std::to_string(p.t) + "," + std::to_string(p.k) + "," +
                            std::to_string(p.d) + ")";
    try {
      const NumericalSemigroup s = family_dim6(p.t, p.d, p.k);
      o.expect(s.embedding_dimension() == 6, tag + ": nu != 6");
      const Int f = dim6_f(p.t, p.k);
      const auto order = dim6_generators(p.t, p.d, p.k);
      std::optional<ZeroPattern> pattern;
      for (Int l = 0; l < p.t; ++l) {
        o.expect(s.is_pseudo_frobenius(f + l * p.d), tag + ": f + " + std::to_string(l) + "d not in PF");
        const RFMatrix m{RFKind::Plus, f + l * p.d, to_sorted_order(dim6_rf_template(p.t, l), order), {}};
        o.expect(rf_plus_set(s, m.f).contains(m), tag + ": template missing at lambda " + std::to_string(l));
        // The printed pattern is shared for 1 <= lambda <= T-2; at 0 and T-1
        // some template entries vanish.
        if (l >= 1 && l + 2 <= p.t) {
          if (!pattern) pattern = zero_pattern(m);
          o.expect(zero_pattern(m) == *pattern, tag + ": zero pattern differs at lambda " + std::to_string(l));
        }
      }
    } catch (const Error& e) {
      o.expect(false, tag + ": " + e.what());
    }
  }
  o.note = "Backelin types " + types;
  return o;
}

// ---- driver ---------------------------------------------------------------------

void report(int id, const char* title, const Outcome& o) {
  std::printf("[%s] criterion %d: %s", o.passed() ? "PASS" : "FAIL", id, title);
  if (!o.note.empty()) std::printf(" (%s)", o.note.c_str());
  std::printf("\n");
  const std::size_t shown = std::min<std::size_t>(o.problems.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) std::printf("       - %s\n", o.problems[i].c_str());
  if (o.problems.size() > shown) std::printf("       - ... %zu more\n", o.problems.size() - shown);
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  Int genus = kExhaustiveGenus;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--genus" && i + 1 < argc) {
      genus = std::atoi(argv[++i]);
    } else {
      wanted.insert(std::atoi(a.c_str()));
    }
  }
  auto selected = [&](int id) { return wanted.empty() || wanted.count(id) > 0; };

  bool ok = true;
  auto record = [&](int id, const char* title, const std::function<Outcome()>& fn) {
    if (!selected(id)) return;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    report(id, title, o);
    ok = ok && o.passed();
  };

  record(1, "worked example <13,45,72,79,99>", worked_example);
  record(2, "big almost symmetric example", big_example);

  std::optional<ExhaustiveRun> serial;
  if (selected(3) || selected(7)) serial = exhaustive(genus, 1);
  record(3, "exhaustive theorem suite", [&] { return exhaustive_claims(*serial, genus); });
  record(4, "oracle equivalence", oracle_equivalence);
  record(5, "duplication laws", duplication_laws);
  record(6, "families", families);
  record(7, "determinism across worker counts", [&] {
    Outcome o;
    const ExhaustiveRun parallel = exhaustive(genus, kParallelWorkers);
    o.expect(parallel.summary == serial->summary, "summaries differ between 1 and 8 workers");
    o.note = std::to_string(serial->summary.size()) + " summary bytes, " + std::to_string(parallel.seconds) +
             " s with " + std::to_string(kParallelWorkers) + " workers";
    return o;
  });
  return ok ? 0 : 1;
}
