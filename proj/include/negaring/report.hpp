#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "negaring/catalog.hpp"
#include "negaring/codes.hpp"
#include "negaring/distance.hpp"

namespace negaring {

using ordered_json = nlohmann::ordered_json;

// Canonical-form object: p, n, g1..g4, g11..g33, r1..r4, rank, free_rank,
// is_free, dim_fp. Field names and order are fixed for downstream diffing.
ordered_json canonical_form_json(const NegacyclicCode& code);

ordered_json spanning_set_json(const NegacyclicCode& code);

// d_oracle is an integer, "skipped(budget)" or "undefined"; d_formula an
// integer or "not-applicable"; agreement a bool or null.
ordered_json distance_json(const DistanceReport& rep);

ordered_json analyze_json(const NegacyclicCode& code, const DistanceReport& dist);

ordered_json catalog_entry_json(const CatalogEntry& e);
ordered_json catalog_json(const std::vector<CatalogEntry>& entries, uint64_t seed);
std::string catalog_csv(const std::vector<CatalogEntry>& entries, uint64_t seed);

ordered_json verdicts_json(const TablesReport& rep);

std::string analyze_text(const NegacyclicCode& code, const DistanceReport& dist);
std::string distance_text(const DistanceReport& rep);
std::string catalog_text(const std::vector<CatalogEntry>& entries, uint64_t seed);
std::string tables_text(const TablesReport& rep);

} // namespace negaring
