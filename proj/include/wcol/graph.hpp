#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wcol/geometry.hpp"

namespace wcol {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph with sorted adjacency lists and vertex labels.
class Graph {
 public:
  Graph() = default;
  /// Duplicate edges are merged; loops and out-of-range endpoints throw.
  Graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;
  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  /// Index of the vertex with this label; throws if absent.
  Vertex find(const std::string& label) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Linear order on {0..n-1}: u precedes v iff position(u) < position(v).
class Ordering {
 public:
  Ordering() = default;
  /// `sequence[p]` is the vertex at position p; must be a permutation.
  explicit Ordering(std::vector<Vertex> sequence);
  static Ordering identity(std::size_t n);

  std::size_t size() const noexcept { return sequence_.size(); }
  std::size_t position(Vertex v) const { return position_.at(v); }
  Vertex at(std::size_t p) const { return sequence_.at(p); }
  bool precedes(Vertex u, Vertex v) const { return position_[u] < position_[v]; }
  const std::vector<Vertex>& sequence() const noexcept { return sequence_; }
  const std::vector<std::size_t>& positions() const noexcept { return position_; }
  Ordering reversed() const;

  friend bool operator==(const Ordering&, const Ordering&) = default;

 private:
  std::vector<Vertex> sequence_;
  std::vector<std::size_t> position_;
};

/// Vertex per object, edge iff the closed objects intersect.
Graph intersection_graph(const Representation& rep);

/// Non-increasing diameter; ties by input index.
Ordering sizewise_order(const Representation& rep);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// Vertex 0 is the center.
Graph star_graph(std::size_t leaves);

}  // namespace wcol
