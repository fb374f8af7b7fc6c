#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wcol/graph.hpp"

namespace wcol {

enum class ReachKind { weak, strong, decreasing };

std::string to_string(ReachKind kind);
ReachKind parse_reach_kind(const std::string& text);

/// Vertices u <= v joined to v by a path of length <= k whose internal
/// vertices all exceed u. Sorted, includes v.
std::vector<Vertex> wreach(const Graph& g, const Ordering& ord, unsigned k, Vertex v);
/// As wreach, but internal vertices must exceed v.
std::vector<Vertex> sreach(const Graph& g, const Ordering& ord, unsigned k, Vertex v);
/// Vertices reachable from v along decreasing paths of length <= k.
std::vector<Vertex> decr(const Graph& g, const Ordering& ord, unsigned k, Vertex v);

std::vector<Vertex> reach_set(const Graph& g, const Ordering& ord, unsigned k, Vertex v, ReachKind kind);

/// |reach(v)| for every vertex v, in one pass.
std::vector<std::size_t> reach_sizes(const Graph& g, const Ordering& ord, unsigned k, ReachKind kind);

/// max_v |reach(v)|; 0 on the empty graph.
std::size_t colnum_ordered(const Graph& g, const Ordering& ord, unsigned k, ReachKind kind);

/// Outcome of an exact search over orderings.
struct ColnumSearch {
  /// Set iff the search finished within the node budget.
  std::optional<std::size_t> value;
  /// Proven bounds; equal to `value` when exact.
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;
  /// An ordering attaining `upper_bound`.
  Ordering witness;
  std::uint64_t nodes = 0;

  bool exact() const noexcept { return value.has_value(); }
};

constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

/// min over orderings of colnum_ordered(weak). Branch and bound, positions
/// filled from the bottom of the ordering upward.
ColnumSearch wcol_exact(const Graph& g, unsigned k, std::uint64_t node_budget = kDefaultSearchBudget);
/// min over orderings of colnum_ordered(strong).
ColnumSearch scol_exact(const Graph& g, unsigned k, std::uint64_t node_budget = kDefaultSearchBudget);

/// Max over subgraphs of the min degree, by min-degree peeling.
std::size_t degeneracy(const Graph& g);
/// Ordering in which every vertex has at most degeneracy(g) earlier neighbours.
Ordering degeneracy_order(const Graph& g);

/// max over x of |{y < x : y has a neighbour y' >= x}|.
std::size_t back_connection_width(const Graph& g, const Ordering& ord);

}  // namespace wcol
