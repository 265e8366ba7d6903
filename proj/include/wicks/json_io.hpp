#pragma once
// JSON encodings of the toolkit's types. Counts and masses render as decimal
// strings ("p/q" for rationals) so census values survive JSON number limits.

#include "json.hpp"
#include "wicks/automorphisms.hpp"
#include "wicks/census.hpp"
#include "wicks/enumerate.hpp"
#include "wicks/gluing.hpp"
#include "wicks/word.hpp"

namespace wicks {

using Json = nlohmann::ordered_json;

Json word_to_json(const WicksWord& word);
WicksWord word_from_json(const Json& j);

Json report_to_json(const WicksWord& word, const ValidationReport& report);
Json glued_graph_to_json(const GluedGraph& graph);
Json aut_to_json(const AutDescriptor& aut);
Json labels_to_json(const ClassLabels& labels);
Json census_entry_to_json(const CensusEntry& entry);
Json census_row_to_json(const CensusRow& row);
Json mass_report_to_json(const MassReport& report);

std::string census_row_csv_header();
std::string census_row_csv(const CensusRow& row);

}  // namespace wicks
