#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wcol/graph.hpp"
#include "wcol/structure.hpp"

namespace wcol {

/// Vertex budget for scaffold graphs: 2*10^5, or WCOL_BUDGET when set.
std::uint64_t scaffold_vertex_budget();
/// Vertex budget for scaffold box representations: 10^4, or WCOL_BUDGET when set.
std::uint64_t scaffold_box_budget();

/// Touching family of 2^{k+1}-1 rectangles (axis 0 vertical, all of height 1;
/// axis 1 horizontal, the shrinking axis) built by doubling: a unit square s,
/// a copy of the previous family stretched by m+1 hanging below s, and a copy
/// stretched by the least power of m+1 that makes it more than m times longer
/// than everything placed and keeps interiors disjoint, left of s.
/// Objects are listed by decreasing horizontal length; declared thinness 1.
Representation gen_fprime(unsigned k, std::uint64_t m);

/// t-thin, m-shrinking family of binom(k+t, t) intervals. The smallest
/// interval is [0,1] and its right end is the strict maximum of the union.
/// Listed by decreasing length; declared thinness t.
Representation gen_hprime(unsigned k, unsigned t, std::uint64_t m);

/// Blow-up of an ordered graph along the complete m-ary tree of depth n-1.
/// Tree vertices are numbered level by level; within a level by their word
/// read in base m.
struct ScaffoldResult {
  Graph graph;
  /// Tree parent, -1 for the root.
  std::vector<std::int64_t> parent;
  /// Position in the host ordering of the vertex this tree vertex copies.
  std::vector<std::uint32_t> level;
  /// Child labels along the root path.
  std::vector<std::vector<std::uint32_t>> word;
  /// Host vertex copied by each level.
  std::vector<Vertex> host;
};

/// Number of tree vertices, (m^n - 1)/(m - 1) (n when m = 1).
BigInt scaffold_size(std::size_t n, std::uint64_t m);

ScaffoldResult scaffold_graph(const Graph& host, const Ordering& ord, std::uint64_t m,
                              std::uint64_t vertex_budget = scaffold_vertex_budget());

/// Box representation of the scaffold graph of intersection_graph(rep) under
/// sizewise_order(rep), one dimension up. Index i of the output is tree vertex i
/// of scaffold_graph. Requires comparable boxes that are m-shrinking in sizewise order.
Representation scaffold_boxes(const Representation& rep, std::uint64_t m,
                              std::uint64_t vertex_budget = scaffold_box_budget());

/// Appends an axis: [0, side] for members of `in_y`, [-side, 0] otherwise. Hypercubes only.
Representation lift_dimension(const Representation& rep, const std::vector<bool>& in_y);

/// Applies lift_dimension once per colour bit b with Y_b = {i : bit b of colour(i) is 0}.
/// The colouring must be proper on the intersection graph and fit in `bits` bits.
Representation touching_lift(const Representation& rep, const Coloring& colors, unsigned bits);

enum class LbFamily { F, H };

struct LbInstance {
  LbFamily family = LbFamily::F;
  unsigned k = 0;
  unsigned t = 0;
  std::uint64_t m = 0;
  Representation base;
  Graph base_graph;
  Ordering base_order;
  ScaffoldResult scaffold;
  /// Present when the scaffold fits the box budget.
  std::optional<Representation> boxes;
  /// Colour-lifted touching hypercubes, when requested and the boxes exist.
  std::optional<Representation> touching;
  Coloring scaffold_coloring;
  BigInt expected_bound;
  unsigned radius = 0;
};

/// Family F: gen_fprime(k, 2^{k+1}-1). Family H: gen_hprime(k, t, binom(k+t, t));
/// with `lift_bits` set, also the touching lift via the interval colouring
/// copied to every tree level.
LbInstance build_theorem_lb_instance(LbFamily family, unsigned k, unsigned t = 1,
                                     std::optional<unsigned> lift_bits = std::nullopt);

}  // namespace wcol
