#include "sgp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace sgp {

namespace {

// Subtrees rooted at this genus are the units of parallel work.
constexpr Int kSplitGenus = 10;

bool wanted(const HarnessConfig& cfg, const NumericalSemigroup& s) {
  return !cfg.embdim_filter || cfg.embdim_filter->count(s.embedding_dimension()) > 0;
}

void walk(const NumericalSemigroup& s, Int genus_max, const HarnessConfig& cfg,
          const std::function<void(const NumericalSemigroup&)>& visit) {
  if (wanted(cfg, s)) visit(s);
  if (s.genus() >= genus_max) return;
  for (const auto& child : genus_tree_children(s)) walk(child, genus_max, cfg, visit);
}

void update_cell(CellStats& cell, std::size_t type, const std::vector<Int>& gens) {
  if (type > cell.max_type || (type == cell.max_type && (cell.witness.empty() || gens < cell.witness))) {
    cell.max_type = type;
    cell.witness = gens;
  }
}

struct Worker {
  Summary summary;
  std::vector<CheckReport> reports;
};

}  // namespace

std::vector<NumericalSemigroup> genus_tree_children(const NumericalSemigroup& s) {
  std::vector<NumericalSemigroup> out;
  const auto& gens = s.generators();
  for (Int g : gens) {
    if (g <= s.frobenius()) continue;
    // S \ {g} is generated by the other generators, g + n_j, 2g and 3g.
    std::vector<Int> candidates;
    for (Int n : gens) {
      if (n != g) candidates.push_back(n);
      candidates.push_back(g + n);
    }
    candidates.push_back(3 * g);
    out.emplace_back(candidates);
  }
  return out;
}

void enumerate_semigroups(const HarnessConfig& cfg,
                          const std::function<void(const NumericalSemigroup&)>& visit) {
  if (cfg.genus_max < 0) return;
  walk(NumericalSemigroup{1}, cfg.genus_max, cfg, visit);
}

void Summary::add(const CheckReport& r) {
  ++semigroups;
  ++per_genus[r.genus];
  for (const auto& c : r.claims) {
    ClaimTally& t = tallies[c.id];
    switch (c.status) {
      case Status::Pass: ++t.pass; break;
      case Status::Fail: ++t.fail; break;
      case Status::Inapplicable: ++t.inapplicable; break;
      case Status::Flagged: ++t.flagged; break;
    }
  }
  CellStats& cell = cells[{r.generators.size(), r.nearly_gorenstein, r.almost_symmetric}];
  ++cell.count;
  update_cell(cell, r.pseudo_frobenius.size(), r.generators);
  if (r.ng_vectors_checked < r.ng_vector_count) ++vector_sampled;
  if (r.has_failure()) ++failures;
  if (r.has_flag()) ++flagged;
}

void Summary::merge(const Summary& other) {
  semigroups += other.semigroups;
  vector_sampled += other.vector_sampled;
  for (const auto& [g, n] : other.per_genus) per_genus[g] += n;
  for (const auto& [id, t] : other.tallies) {
    ClaimTally& mine = tallies[id];
    mine.pass += t.pass;
    mine.fail += t.fail;
    mine.inapplicable += t.inapplicable;
    mine.flagged += t.flagged;
  }
  for (const auto& [key, c] : other.cells) {
    CellStats& mine = cells[key];
    mine.count += c.count;
    if (c.count > 0) update_cell(mine, c.max_type, c.witness);
  }
  failures += other.failures;
  flagged += other.flagged;
}

HarnessResult check_all(const HarnessConfig& cfg) {
  HarnessResult result;
  Summary& summary = result.summary;
  summary.genus_max = cfg.genus_max;
  summary.embdim_filter = cfg.embdim_filter;
  summary.claims = cfg.claims.empty() ? all_claims() : std::vector<ClaimId>(cfg.claims.begin(), cfg.claims.end());
  summary.seed = cfg.seed;
  summary.pair_cap = cfg.pair_cap;
  summary.vector_cap = cfg.vector_cap;
  if (cfg.genus_max < 0) return result;

  const std::set<ClaimId> claims(summary.claims.begin(), summary.claims.end());
  const CheckOptions options{cfg.seed, cfg.pair_cap, cfg.vector_cap};

  auto process = [&](const NumericalSemigroup& s, Worker& w) {
    CheckReport r = check_semigroup(s, claims, options);
    w.summary.add(r);
    const bool keep = cfg.emit == EmitPolicy::All ||
                      (cfg.emit == EmitPolicy::Interesting && (r.has_failure() || r.has_flag()));
    if (keep) w.reports.push_back(std::move(r));
  };

  // Shallow part of the tree runs here; the subtrees hanging off the split
  // level become work units.
  const Int split = std::min(cfg.genus_max, kSplitGenus);
  Worker shallow;
  std::vector<NumericalSemigroup> units;
  std::function<void(const NumericalSemigroup&)> descend = [&](const NumericalSemigroup& s) {
    if (s.genus() == split) {
      units.push_back(s);
      return;
    }
    if (wanted(cfg, s)) process(s, shallow);
    for (const auto& child : genus_tree_children(s)) descend(child);
  };
  descend(NumericalSemigroup{1});

  std::vector<Worker> done(units.size());
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < units.size(); i = next++) {
      walk(units[i], cfg.genus_max, cfg, [&](const NumericalSemigroup& s) { process(s, done[i]); });
    }
  };
  const unsigned workers = std::max(1u, cfg.workers);
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }

  summary.merge(shallow.summary);
  result.reports = std::move(shallow.reports);
  for (auto& w : done) {
    summary.merge(w.summary);
    for (auto& r : w.reports) result.reports.push_back(std::move(r));
  }
  std::sort(result.reports.begin(), result.reports.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.generators < b.generators; });
  return result;
}

}  // namespace sgp
