#include "sgp/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sgp/construct.hpp"
#include "sgp/error.hpp"
#include "sgp/gorenstein.hpp"
#include "sgp/json_io.hpp"
#include "sgp/rf.hpp"
#include "sgp/semigroup.hpp"
#include "sgp/verify.hpp"

namespace sgp::cli {

namespace {

using nlohmann::json;

/// Raised for malformed arguments that CLI11 itself cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    Int v = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
      throw UsageError(std::string(what) + ": '" + std::string(item) + "' is not an integer");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::vector<Int> parse_generators(std::string_view text) {
  auto gens = parse_int_list(text, "generators");
  for (Int g : gens) {
    if (g < 1) throw UsageError("generators must be positive, got " + std::to_string(g));
  }
  return gens;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotNearlyGorenstein:
    case ErrorKind::NotAlmostSymmetric:
    case ErrorKind::EnumerationCap:
    case ErrorKind::PostconditionFailed:
      return kExitViolation;
    default:
      return kExitUsage;
  }
}

class Printer {
 public:
  Printer(std::ostream& out, bool pretty) : out_(out), pretty_(pretty) {}

  void emit(std::string_view kind, json payload) {
    if (pretty_) {
      print_pretty(kind, payload);
    } else {
      out_ << dump_line(make_record(kind, std::move(payload))) << '\n';
    }
  }

 private:
  static bool is_matrix(const json& v) {
    return v.is_array() && !v.empty() &&
           std::all_of(v.begin(), v.end(), [&](const json& row) { return row.is_array() && row.size() == v.size(); });
  }

  void print_matrix(const json& m, std::size_t indent) {
    std::size_t width = 1;
    for (const auto& row : m) {
      for (const auto& x : row) width = std::max(width, x.dump().size());
    }
    for (const auto& row : m) {
      out_ << std::string(indent, ' ');
      for (const auto& x : row) {
        const std::string cell = x.dump();
        out_ << ' ' << std::string(width - cell.size(), ' ') << cell;
      }
      out_ << '\n';
    }
  }

  void print_object(const json& obj, std::size_t indent) {
    std::size_t width = 0;
    for (const auto& [k, v] : obj.items()) width = std::max(width, k.size());
    for (const auto& [k, v] : obj.items()) {
      out_ << std::string(indent, ' ') << k << std::string(width - k.size(), ' ') << "  ";
      if (is_matrix(v)) {
        out_ << '\n';
        print_matrix(v, indent + 2);
      } else if (v.is_object() && indent < 4) {
        out_ << '\n';
        print_object(v, indent + 2);
      } else {
        out_ << v.dump() << '\n';
      }
    }
  }

  void print_pretty(std::string_view kind, const json& payload) {
    out_ << "[" << kind << "]\n";
    print_object(payload, 2);
  }

  std::ostream& out_;
  bool pretty_;
};

json error_payload(const Error& e) {
  json p{{"error", to_string(e.kind())}, {"message", e.what()}};
  if (const auto* cap = dynamic_cast<const EnumerationCapError*>(&e)) {
    p["count"] = cap->count();
    p["cap"] = cap->cap();
  }
  return p;
}

NGVector select_ng_vector(const NumericalSemigroup& s, std::uint64_t index) {
  const auto candidates = ng_candidates(s);
  const std::uint64_t count = ng_vector_count(candidates);
  if (count == 0) throw Error(ErrorKind::NotNearlyGorenstein, "S has no NG-vector");
  if (index < 1 || index > count) {
    throw Error(ErrorKind::PreconditionViolated,
                "--ng-index " + std::to_string(index) + " outside 1.." + std::to_string(count));
  }
  return ng_vector_at(s, candidates, index - 1);
}

// ---- subcommands ---------------------------------------------------------

int cmd_info(Printer& p, const std::string& gens) {
  const NumericalSemigroup s(parse_generators(gens));
  p.emit("info", info_json(s));
  return kExitOk;
}

int cmd_ng_vectors(Printer& p, const std::string& gens) {
  const NumericalSemigroup s(parse_generators(gens));
  const auto vectors = ng_vectors(s, matrix_cap_from_env());
  json list = json::array();
  for (const auto& v : vectors) list.push_back(ng_vector_json(v));
  p.emit("ngvectors", {{"generators", s.generators()},
                       {"frobenius", s.frobenius()},
                       {"count", vectors.size()},
                       {"vectors", std::move(list)}});
  return kExitOk;
}

struct RfArgs {
  std::string gens;
  Int f = 0;
  std::string kind = "plus";
  std::uint64_t ng_index = 1;
  bool count_only = false;
};

int cmd_rf(Printer& p, const RfArgs& a) {
  const NumericalSemigroup s(parse_generators(a.gens));
  const bool plus = a.kind == "plus";
  std::optional<NGVector> ng;
  if (!plus) ng = select_ng_vector(s, a.ng_index);
  const RFMatrixSet set = plus ? rf_plus_set(s, a.f) : rf_minus_set(s, *ng, a.f);

  json head{{"generators", s.generators()}, {"f", a.f}, {"kind", a.kind}, {"count", set.count()}};
  if (ng) {
    head["ng"] = ng->entries;
    head["ng_index"] = a.ng_index;
  }
  if (a.count_only) {
    p.emit("rf", std::move(head));
    return kExitOk;
  }
  const std::uint64_t cap = matrix_cap_from_env();
  if (set.count() > cap) throw EnumerationCapError(set.count(), cap);
  for (std::uint64_t k = 0; k < set.count(); ++k) {
    json rec = rf_matrix_json(set.at(k));
    rec["index"] = k + 1;
    rec["count"] = set.count();
    p.emit("rf", std::move(rec));
  }
  return kExitOk;
}

json classify_record(const NumericalSemigroup& s, const NGVector& v, std::uint64_t index) {
  const PFClassification cls = classify_pf(s, v);
  json rec = classification_json(cls);
  rec["generators"] = s.generators();
  rec["pf"] = s.pseudo_frobenius();
  rec["ng_index"] = index;
  if (s.embedding_dimension() == 5) {
    const MuValues mu = mu_values(s, cls);
    rec["mu"] = mu.mu;
    rec["mu_bound"] = mu.bound;
  }
  return rec;
}

int cmd_classify(Printer& p, const std::string& gens, std::optional<std::uint64_t> ng_index) {
  const NumericalSemigroup s(parse_generators(gens));
  if (ng_index) {
    p.emit("classify", classify_record(s, select_ng_vector(s, *ng_index), *ng_index));
    return kExitOk;
  }
  const auto vectors = ng_vectors(s, matrix_cap_from_env());
  for (std::size_t i = 0; i < vectors.size(); ++i) p.emit("classify", classify_record(s, vectors[i], i + 1));
  return kExitOk;
}

struct VerifyArgs {
  Int genus_max = 20;
  std::string embdim;
  std::string claims;
  unsigned workers = 1;
  std::uint64_t seed = 0;
  std::uint64_t pair_cap = 10'000;
  std::uint64_t vector_cap = 64;
  std::string emit = "interesting";
  std::string gens;
};

std::set<ClaimId> parse_claims(const std::string& text) {
  std::set<ClaimId> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string name = text.substr(pos, comma - pos);
    const auto id = parse_claim(name);
    if (!id) throw UsageError("unknown claim '" + name + "'");
    out.insert(*id);
    pos = comma + 1;
  }
  return out;
}

int cmd_verify(Printer& p, const VerifyArgs& a) {
  const std::set<ClaimId> claims = parse_claims(a.claims);
  if (!a.gens.empty()) {
    const NumericalSemigroup s(parse_generators(a.gens));
    const std::set<ClaimId> wanted = claims.empty() ? std::set<ClaimId>(all_claims().begin(), all_claims().end())
                                                    : claims;
    const CheckReport r = check_semigroup(s, wanted, {a.seed, a.pair_cap, a.vector_cap});
    p.emit("verify", {{"report", report_json(r)}});
    return r.has_failure() || r.has_flag() ? kExitViolation : kExitOk;
  }

  HarnessConfig cfg;
  if (a.genus_max < 0) throw UsageError("--genus-max must be nonnegative");
  cfg.genus_max = a.genus_max;
  if (!a.embdim.empty()) {
    std::set<std::size_t> dims;
    for (Int d : parse_int_list(a.embdim, "--embdim")) {
      if (d < 1) throw UsageError("--embdim values must be positive");
      dims.insert(static_cast<std::size_t>(d));
    }
    cfg.embdim_filter = std::move(dims);
  }
  cfg.claims = claims;
  cfg.workers = std::max(1u, a.workers);
  cfg.seed = a.seed;
  cfg.pair_cap = a.pair_cap;
  cfg.vector_cap = a.vector_cap;
  cfg.emit = a.emit == "all" ? EmitPolicy::All : a.emit == "none" ? EmitPolicy::None : EmitPolicy::Interesting;

  const HarnessResult result = check_all(cfg);
  for (const auto& r : result.reports) p.emit("verify", {{"report", report_json(r)}});
  p.emit("verify", {{"summary", summary_json(result.summary)}});
  return result.summary.failures > 0 || result.summary.flagged > 0 ? kExitViolation : kExitOk;
}

json semigroup_payload(const NumericalSemigroup& s) {
  json out = info_json(s);
  out["t_minus_2nu"] = static_cast<Int>(s.type()) - 2 * static_cast<Int>(s.embedding_dimension());
  return out;
}

struct ConstructArgs {
  Int t = 2;
  Int k = 0;
  Int d = 0;
  Int b = 0;
  int depth = 1;
  std::string gens;
};

int cmd_backelin(Printer& p, const ConstructArgs& a) {
  const NumericalSemigroup s = backelin(a.t);
  json out = semigroup_payload(s);
  out["family"] = "backelin";
  out["params"] = {{"T", a.t}};
  out["f"] = backelin_f(a.t);
  p.emit("construct", std::move(out));
  return kExitOk;
}

int cmd_dim6(Printer& p, const ConstructArgs& a) {
  const NumericalSemigroup s = family_dim6(a.t, a.d, a.k);
  const Int f = dim6_f(a.t, a.k);
  json progression = json::array();
  for (Int l = 0; l < a.t; ++l) progression.push_back(f + l * a.d);
  json out = semigroup_payload(s);
  out["family"] = "dim6";
  out["params"] = {{"T", a.t}, {"k", a.k}, {"d", a.d}};
  out["construction_order"] = dim6_generators(a.t, a.d, a.k);
  out["f"] = f;
  out["progression"] = std::move(progression);
  p.emit("construct", std::move(out));
  return kExitOk;
}

int cmd_duplication(Printer& p, const ConstructArgs& a) {
  const NumericalSemigroup base(parse_generators(a.gens));
  const NumericalSemigroup s = numerical_duplication({base, maximal_ideal(base), a.b});
  json out = semigroup_payload(s);
  out["family"] = "duplication";
  out["params"] = {{"base", base.generators()}, {"b", a.b}};
  p.emit("construct", std::move(out));
  return kExitOk;
}

int cmd_tower(Printer& p, const ConstructArgs& a) {
  const NumericalSemigroup base(parse_generators(a.gens));
  const auto chain = duplication_tower(base, a.depth);
  json levels = json::array();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    json level = semigroup_payload(chain[i]);
    level["level"] = i;
    levels.push_back(std::move(level));
  }
  p.emit("construct", {{"family", "tower"},
                       {"params", {{"base", base.generators()}, {"depth", a.depth}}},
                       {"levels", std::move(levels)}});
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroups: invariants, NG-vectors, RF-matrices and claim verification", "sgp"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable tables instead of JSON lines");
  app.fallthrough();

  std::string gens;
  auto add_gens = [&](CLI::App* sub) {
    sub->add_option("generators", gens, "Comma-separated generators, e.g. 13,45,72,79,99")->required();
  };

  CLI::App* info = app.add_subcommand("info", "Invariants of a semigroup");
  add_gens(info);

  CLI::App* ngv = app.add_subcommand("ng-vectors", "All NG-vectors with their h and ell annotations");
  add_gens(ngv);

  RfArgs rf_args;
  CLI::App* rf = app.add_subcommand("rf", "RF+ or RF- matrices of a pseudo-Frobenius number");
  add_gens(rf);
  rf->add_option("--f", rf_args.f, "Pseudo-Frobenius number")->required();
  rf->add_option("--kind", rf_args.kind, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  rf->add_option("--ng-index", rf_args.ng_index, "1-based NG-vector index for RF-")->check(CLI::PositiveNumber);
  rf->add_flag("--count", rf_args.count_only, "Only report the number of matrices");

  std::optional<std::uint64_t> classify_index;
  CLI::App* classify = app.add_subcommand("classify-pf", "PF1/PF2 split for each NG-vector");
  add_gens(classify);
  classify->add_option("--ng-index", classify_index, "Only this 1-based NG-vector")->check(CLI::PositiveNumber);

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "Check every registered claim over the genus tree");
  verify->add_option("--genus-max", va.genus_max, "Largest genus enumerated")->capture_default_str();
  verify->add_option("--embdim", va.embdim, "Comma-separated embedding dimensions to keep");
  verify->add_option("--claims", va.claims, "Comma-separated claim ids (default: all)");
  verify->add_option("--workers", va.workers, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--seed", va.seed, "Seed for sampled sub-checks")->capture_default_str();
  verify->add_option("--pair-cap", va.pair_cap, "RF pairs checked per f before sampling")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--vector-cap", va.vector_cap, "NG-vectors checked per semigroup before sampling")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--emit", va.emit, "Per-semigroup reports: none, interesting or all")
      ->capture_default_str()
      ->check(CLI::IsMember({"none", "interesting", "all"}));
  verify->add_option("--gens", va.gens, "Check a single semigroup instead of the genus tree");

  ConstructArgs ca;
  CLI::App* construct = app.add_subcommand("construct", "Build a family member or a duplication");
  construct->require_subcommand(1);
  CLI::App* c_backelin = construct->add_subcommand("backelin", "<s, s+3, s+3T+1, s+3T+2>, s = (3T+2)^2 + 3");
  c_backelin->add_option("--T", ca.t, "T >= 2")->required();
  CLI::App* c_dim6 = construct->add_subcommand("dim6", "Six-generated family with parameters T, k, d");
  c_dim6->add_option("--T", ca.t)->required();
  c_dim6->add_option("--k", ca.k)->required();
  c_dim6->add_option("--d", ca.d)->required();
  CLI::App* c_dup = construct->add_subcommand("duplication", "S dup^b M(S)");
  c_dup->add_option("--gens", ca.gens, "Generators of S")->required();
  c_dup->add_option("--b", ca.b, "Odd element of S")->required();
  CLI::App* c_tower = construct->add_subcommand("tower", "Iterated duplications of an almost symmetric S");
  c_tower->add_option("--gens", ca.gens, "Generators of S")->required();
  c_tower->add_option("--depth", ca.depth, "Number of duplications")->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("sgp");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, err, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  Printer printer(out, pretty);
  std::string_view kind = "info";
  try {
    if (info->parsed()) return cmd_info(printer, gens);
    kind = "ngvectors";
    if (ngv->parsed()) return cmd_ng_vectors(printer, gens);
    kind = "rf";
    if (rf->parsed()) {
      rf_args.gens = gens;
      return cmd_rf(printer, rf_args);
    }
    kind = "classify";
    if (classify->parsed()) return cmd_classify(printer, gens, classify_index);
    kind = "verify";
    if (verify->parsed()) return cmd_verify(printer, va);
    kind = "construct";
    if (c_backelin->parsed()) return cmd_backelin(printer, ca);
    if (c_dim6->parsed()) return cmd_dim6(printer, ca);
    if (c_dup->parsed()) return cmd_duplication(printer, ca);
    if (c_tower->parsed()) return cmd_tower(printer, ca);
  } catch (const UsageError& e) {
    err << "sgp: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    printer.emit(kind, error_payload(e));
    return exit_code(e.kind());
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace sgp::cli
