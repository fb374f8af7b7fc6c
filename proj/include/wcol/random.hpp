#pragma once

#include <cstdint>
#include <utility>

#include "wcol/graph.hpp"
#include "wcol/rng.hpp"

namespace wcol {

Ordering random_ordering(std::size_t n, Rng& rng);

/// G(n, p) with p = num/den.
Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, Rng& rng);

/// Random graph and ordering in which every vertex has at most w earlier
/// vertices with a neighbour at or after it: edges join vertices at most w
/// positions apart, then vertex names are shuffled.
std::pair<Graph, Ordering> random_bounded_width_graph(std::size_t n, std::size_t w, Rng& rng);

/// Up to `count` axis-aligned hypercubes in R^d with sides drawn from `sides`
/// and corners on the 1/2-grid, accepted one at a time while the set stays
/// t-thin (exact grid thinness).
Representation random_thin_cubes(std::size_t count, std::uint64_t t, std::size_t d, const std::vector<Rational>& sides,
                                 Rng& rng);

/// Union of t layers of balls with radii in {1/2, 1} and centres on the
/// 1/2-grid, pairwise interior-disjoint inside each layer; hence t-thin.
Representation random_thin_balls(std::size_t count, std::uint64_t t, std::size_t d, Rng& rng);

}  // namespace wcol
