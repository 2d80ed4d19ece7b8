#pragma once

#include <nlohmann/json.hpp>

#include "domchrom/constructions.hpp"
#include "domchrom/graph.hpp"
#include "domchrom/invariants.hpp"
#include "domchrom/planarity.hpp"
#include "domchrom/search.hpp"
#include "domchrom/structure.hpp"

// JSON shapes shared by the CLI, scan records and golden files. Keys keep
// insertion order so output is stable byte for byte.
namespace domchrom {

using Json = nlohmann::ordered_json;

Json to_json(const VertexLabeling& labels);
Json to_json(const Coloring& c);
Json to_json(const DominatingWitness& w);
/// Flat record: n, edge_count, gamma, gamma_t, chi, chi_d, chi_dom, dk, graph6.
Json to_json(const InvariantReport& r, bool with_witnesses = false);
Json to_json(const PlanarityVerdict& v);
Json to_json(const ChainWitness& c);
Json to_json(const Theorem1Report& r);
Json to_json(const D3Blueprint& bp);
D3Blueprint blueprint_from_json(const Json& j);
Json to_json(const D3Membership& m);
Json to_json(const BlueprintVerdict& v);
Json to_json(const ScanRecord& r);
Json to_json(const ScanSummary& s);
ScanSummary summary_from_json(const Json& j);
Json to_json(const SurveyResult& s);

/// CSV header and row matching the flat InvariantReport record.
std::string invariant_csv_header();
std::string to_csv_row(const InvariantReport& r);

}  // namespace domchrom
