#include "sgp/json_io.hpp"

#include "sgp/gorenstein.hpp"

namespace sgp {

using nlohmann::json;

json matrix_json(const IntMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.order; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.order; ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json rf_matrix_json(const RFMatrix& a) {
  json out{{"kind", a.kind == RFKind::Plus ? "plus" : "minus"},
           {"f", a.f},
           {"entries", matrix_json(a.entries)}};
  if (a.kind == RFKind::Minus) out["ng"] = a.ng;
  return out;
}

json ng_vector_json(const NGVector& v) {
  json out{{"entries", v.entries}, {"h", nullptr}, {"ell", nullptr}};
  if (v.h) out["h"] = *v.h + 1;
  if (v.ell) out["ell"] = *v.ell + 1;
  if (v.second) {
    json second{{"index", v.second->index + 1}};
    switch (v.second->form) {
      case SecondDivergence::Form::Generator:
        second["form"] = "generator";
        second["ell"] = v.second->value + 1;
        break;
      case SecondDivergence::Form::Multiple:
        second["form"] = "multiple";
        second["a"] = v.second->value;
        break;
      case SecondDivergence::Form::None:
        second["form"] = "none";
        break;
    }
    out["second"] = std::move(second);
  }
  return out;
}

json classification_json(const PFClassification& cls) {
  json witnesses = json::object();
  for (const auto& [f, list] : cls.witnesses) {
    json arr = json::array();
    for (const auto& w : list) {
      arr.push_back({{"side", w.side == RFKind::Plus ? "plus" : "minus"},
                     {"i", w.i + 1},
                     {"j", w.j + 1},
                     {"lambda", w.lambda}});
    }
    witnesses[std::to_string(f)] = std::move(arr);
  }
  return {{"ng", ng_vector_json(cls.ng)},
          {"pf1", cls.pf1},
          {"pf2", cls.pf2},
          {"witnesses", std::move(witnesses)}};
}

json info_json(const NumericalSemigroup& s) {
  const bool ng = s.embedding_dimension() >= 1 && is_nearly_gorenstein(s);
  return {{"generators", s.generators()},
          {"multiplicity", s.multiplicity()},
          {"embedding_dimension", s.embedding_dimension()},
          {"frobenius", s.frobenius()},
          {"genus", s.genus()},
          {"pf", s.pseudo_frobenius()},
          {"type", s.type()},
          {"symmetric", is_symmetric(s)},
          {"almost_symmetric", is_almost_symmetric(s)},
          {"nearly_gorenstein", ng}};
}

json report_json(const CheckReport& r) {
  json claims = json::array();
  for (const auto& c : r.claims) {
    json entry{{"id", to_string(c.id)}, {"status", to_string(c.status)}};
    if (!c.witness.is_null()) entry["witness"] = c.witness;
    claims.push_back(std::move(entry));
  }
  return {{"generators", r.generators},
          {"genus", r.genus},
          {"frobenius", r.frobenius},
          {"pf", r.pseudo_frobenius},
          {"type", r.pseudo_frobenius.size()},
          {"almost_symmetric", r.almost_symmetric},
          {"nearly_gorenstein", r.nearly_gorenstein},
          {"ng_vectors", r.ng_vector_count},
          {"ng_vectors_checked", r.ng_vectors_checked},
          {"claims", std::move(claims)},
          {"elapsed_us", r.elapsed.count()}};
}

json summary_json(const Summary& s) {
  json tallies = json::object();
  for (const auto& [id, t] : s.tallies) {
    tallies[std::string(to_string(id))] = {
        {"pass", t.pass}, {"fail", t.fail}, {"inapplicable", t.inapplicable}, {"flagged", t.flagged}};
  }
  json cells = json::array();
  for (const auto& [key, c] : s.cells) {
    const auto& [nu, ng, as] = key;
    cells.push_back({{"nu", nu},
                     {"nearly_gorenstein", ng},
                     {"almost_symmetric", as},
                     {"count", c.count},
                     {"max_type", c.max_type},
                     {"witness", c.witness}});
  }
  json per_genus = json::array();
  for (const auto& [g, n] : s.per_genus) per_genus.push_back({{"genus", g}, {"count", n}});
  json claims = json::array();
  for (auto id : s.claims) claims.push_back(to_string(id));
  json embdim = nullptr;
  if (s.embdim_filter) embdim = *s.embdim_filter;
  return {{"genus_max", s.genus_max},
          {"embdim", embdim},
          {"claims", std::move(claims)},
          {"seed", s.seed},
          {"pair_cap", s.pair_cap},
          {"vector_cap", s.vector_cap},
          {"semigroups", s.semigroups},
          {"vector_sampled", s.vector_sampled},
          {"per_genus", std::move(per_genus)},
          {"tallies", std::move(tallies)},
          {"cells", std::move(cells)},
          {"failures", s.failures},
          {"flagged", s.flagged}};
}

json make_record(std::string_view kind, json payload) {
  return {{"schema_version", kSchemaVersion}, {"kind", kind}, {"payload", std::move(payload)}};
}

std::string dump_line(const json& record) { return record.dump(); }

}  // namespace sgp
