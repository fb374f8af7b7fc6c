#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wcol/graph.hpp"

namespace wcol {

/// Minimum depth of a spanning tree rooted at the maximum vertex along which
/// every root path is decreasing; nullopt when no such tree exists.
std::optional<std::size_t> decreasing_tree_depth(const Graph& g, const Ordering& ord);

/// Every suffix {u : v <= u} induces a connected subgraph of diameter <= k.
bool verify_diameter_condition(const Graph& g, const Ordering& ord, unsigned k);

using Coloring = std::vector<std::uint32_t>;

/// Greedy colouring of closed intervals by left endpoint, smallest free colour.
/// Uses exactly clique-number many colours. Requires d = 1 boxes.
Coloring greedy_interval_coloring(const Representation& rep);
/// Largest number of closed intervals sharing a point.
std::size_t interval_clique_number(const Representation& rep);

/// Sequential greedy colouring in the given vertex order.
Coloring greedy_coloring(const Graph& g, const Ordering& ord);
std::size_t color_count(const Coloring& colors);
/// An edge whose endpoints share a colour, if any.
std::optional<Edge> monochromatic_edge(const Graph& g, const Coloring& colors);

}  // namespace wcol
