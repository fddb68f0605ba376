#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "esd/graph.hpp"

namespace esd {

enum class SearchMode { First, Count, EnumerateUpToIso };
enum class VertexOrdering { StaticDegree, MostConstrained };
enum class SearchStatus { Found, ExhaustedNoneExists, Aborted };

struct SearchConfig {
  Label pool = 0;
  SearchMode mode = SearchMode::First;
  std::optional<std::uint64_t> node_limit = 100'000'000;
  std::optional<std::chrono::milliseconds> time_limit;
  VertexOrdering ordering = VertexOrdering::MostConstrained;
  // Reject up front when |E| exceeds the 2l-3 available weights.
  bool edge_bound_filter = true;
  // Worker threads; > 1 splits the search over the first vertex's labels.
  int jobs = 1;
  // Cap on labelings kept in Count mode (the count itself is unaffected).
  std::optional<std::size_t> store_limit;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Aborted;
  // First: at most one. Count: every labeling found (up to store_limit).
  // EnumerateUpToIso: one representative per isomorphism class.
  std::vector<Labeling> labelings;
  std::uint64_t solutions = 0;
  std::uint64_t nodes_visited = 0;
  std::string certificate_note;
};

std::string to_string(SearchStatus status);
std::string to_string(SearchMode mode);

// Exact backtracking search for ESD labelings of g from {1..cfg.pool}.
// ExhaustedNoneExists is only reported when the whole space was covered.
// Throws std::invalid_argument for an empty graph or a non-positive pool.
SearchOutcome solve(const Graph& g, const SearchConfig& cfg);

// One representative (the first found) per labeling-isomorphism class of
// total ESD labelings with pool {1..pool}.
std::vector<Labeling> enumerate_up_to_iso(const Graph& g, Label pool);

// Smallest l in [n, max_pool] admitting an ESD labeling, nullopt if none.
// Throws SearchAborted if a limit cuts any of the searches short.
std::optional<Label> min_pool_size(const Graph& g, Label max_pool, SearchConfig base = {});

}  // namespace esd
