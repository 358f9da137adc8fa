#include "negaring/report.hpp"

#include <sstream>

#include "negaring/parse.hpp"

namespace negaring {

namespace {

ordered_json oracle_field(const DistanceReport& rep) {
  if (rep.d_oracle) return *rep.d_oracle;
  if (rep.oracle_undefined) return "undefined";
  return "skipped(budget)";
}

ordered_json formula_field(const DistanceReport& rep) {
  if (rep.d_formula) return *rep.d_formula;
  return "not-applicable";
}

std::string json_to_cell(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

} // namespace

ordered_json canonical_form_json(const NegacyclicCode& code) {
  ordered_json j;
  j["p"] = code.field().p();
  j["n"] = code.n();
  for (size_t i = 1; i <= 4; ++i) j["g" + std::to_string(i)] = to_string(code.g(i));
  static const std::pair<size_t, size_t> ij[] = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
  for (auto [a, b] : ij) j["g" + std::to_string(a) + std::to_string(b)] = to_string(code.gij(a, b));
  for (size_t i = 1; i <= 4; ++i) j["r" + std::to_string(i)] = code.r(i);
  j["rank"] = code.rank();
  j["free_rank"] = code.free_rank();
  j["is_free"] = code.is_free();
  j["dim_fp"] = code.dim_fp();
  return j;
}

ordered_json spanning_set_json(const NegacyclicCode& code) {
  SpanningSet s = code.spanning_set();
  ordered_json j;
  j["elements"] = ordered_json::array();
  for (const RPoly& e : s.elements) j["elements"].push_back(to_string(e));
  j["rank"] = s.rank;
  j["free_rank"] = s.free_rank;
  return j;
}

ordered_json distance_json(const DistanceReport& rep) {
  ordered_json j;
  j["d_oracle"] = oracle_field(rep);
  j["d_formula"] = formula_field(rep);
  j["method"] = rep.method;
  j["hypothesis_met"] = rep.hypothesis_met;
  j["agreement"] = rep.agreement ? ordered_json(*rep.agreement) : ordered_json(nullptr);
  return j;
}

ordered_json analyze_json(const NegacyclicCode& code, const DistanceReport& dist) {
  ordered_json j = canonical_form_json(code);
  j["spanning_set"] = spanning_set_json(code);
  j["distance"] = distance_json(dist);
  ordered_json notes = ordered_json::array();
  if (code.n() % static_cast<size_t>(code.field().p()) != 0) {
    notes.push_back("n coprime to p: rank computed by the same formula, outside the proven regime");
  }
  if (code.is_zero()) notes.push_back("zero code: distance undefined");
  j["notes"] = notes;
  return j;
}

ordered_json catalog_entry_json(const CatalogEntry& e) {
  ordered_json j;
  j["p"] = e.code.field().p();
  j["n"] = e.code.n();
  for (size_t i = 1; i <= 4; ++i) j["t" + std::to_string(i)] = e.code.r(i);
  static const std::pair<size_t, size_t> ij[] = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
  for (auto [a, b] : ij)
    j["g" + std::to_string(a) + std::to_string(b)] = to_string(e.code.gij(a, b));
  j["rank"] = e.code.rank();
  j["free_rank"] = e.code.free_rank();
  j["dim_fp"] = e.code.dim_fp();
  j["is_free"] = e.code.is_free();
  j["d_oracle"] = oracle_field(e.distance);
  j["d_formula"] = formula_field(e.distance);
  j["hypothesis_met"] = e.distance.hypothesis_met;
  j["source"] = e.source;
  return j;
}

ordered_json catalog_json(const std::vector<CatalogEntry>& entries, uint64_t seed) {
  ordered_json j;
  j["seed"] = seed;
  j["entries"] = ordered_json::array();
  for (const CatalogEntry& e : entries) j["entries"].push_back(catalog_entry_json(e));
  return j;
}

std::string catalog_csv(const std::vector<CatalogEntry>& entries, uint64_t seed) {
  std::ostringstream out;
  out << "# seed=" << seed << "\n";
  out << "p,n,t1,t2,t3,t4,g11,g12,g13,g22,g23,g33,rank,free_rank,dim_fp,is_free,"
         "d_oracle,d_formula,hypothesis_met,source\n";
  for (const CatalogEntry& e : entries) {
    ordered_json j = catalog_entry_json(e);
    bool lead = true;
    for (const auto& [key, value] : j.items()) {
      (void)key;
      if (!lead) out << ",";
      out << json_to_cell(value);
      lead = false;
    }
    out << "\n";
  }
  return out.str();
}

ordered_json verdicts_json(const TablesReport& rep) {
  ordered_json list = ordered_json::array();
  for (const RowVerdict& v : rep.verdicts) {
    ordered_json j;
    j["table"] = v.table;
    j["row"] = v.row;
    j["expected_rank"] = v.expected_rank;
    j["got_rank"] = v.got_rank;
    j["expected_d"] = v.expected_d;
    j["got_d"] = v.got_d;
    j["verdict"] = v.verdict;
    list.push_back(j);
  }
  return list;
}

std::string analyze_text(const NegacyclicCode& code, const DistanceReport& dist) {
  std::ostringstream out;
  out << "p " << code.field().p() << "  n " << code.n() << "\n";
  for (size_t i = 1; i <= 4; ++i)
    out << "g" << i << " = " << to_string(code.g(i)) << "  (r" << i << " = " << code.r(i)
        << ")\n";
  static const std::pair<size_t, size_t> ij[] = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
  for (auto [a, b] : ij)
    out << "g" << a << b << " = " << to_string(code.gij(a, b)) << "\n";
  out << "rank " << code.rank() << "  free_rank " << code.free_rank() << "  dim_fp "
      << code.dim_fp() << "  is_free " << (code.is_free() ? "true" : "false") << "\n";
  out << distance_text(dist);
  return out.str();
}

std::string distance_text(const DistanceReport& rep) {
  std::ostringstream out;
  out << "d_oracle " << json_to_cell(oracle_field(rep)) << "  d_formula "
      << json_to_cell(formula_field(rep)) << "  method " << rep.method << "  hypothesis_met "
      << (rep.hypothesis_met ? "true" : "false") << "  agreement "
      << (rep.agreement ? (*rep.agreement ? "true" : "false") : "n/a") << "\n";
  return out.str();
}

std::string catalog_text(const std::vector<CatalogEntry>& entries, uint64_t seed) {
  std::ostringstream out;
  out << "# seed=" << seed << "\n";
  for (const CatalogEntry& e : entries) {
    out << "t=(" << e.code.r(1) << "," << e.code.r(2) << "," << e.code.r(3) << ","
        << e.code.r(4) << ")  rank " << e.code.rank() << "  dim_fp " << e.code.dim_fp()
        << "  is_free " << (e.code.is_free() ? "true" : "false") << "  d_oracle "
        << json_to_cell(oracle_field(e.distance)) << "  d_formula "
        << json_to_cell(formula_field(e.distance)) << "  source " << e.source << "\n";
  }
  return out.str();
}

std::string tables_text(const TablesReport& rep) {
  std::ostringstream out;
  size_t matches = 0;
  for (const RowVerdict& v : rep.verdicts) {
    out << "table " << v.table << " row " << v.row << "  " << v.label << "  expected rank "
        << v.expected_rank << " d " << v.expected_d << "  -> " << v.verdict << "\n";
    if (v.verdict == "match") ++matches;
  }
  out << matches << "/" << rep.verdicts.size() << " rows match\n";
  return out.str();
}

} // namespace negaring
