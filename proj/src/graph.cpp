#include "wcol/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace wcol {

Graph::Graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels)
    : adjacency_(n), labels_(std::move(labels)) {
  if (labels_.empty()) labels_ = default_labels(n);
  if (labels_.size() != n) throw Error("graph has " + std::to_string(n) + " vertices but " +
                                       std::to_string(labels_.size()) + " labels");
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error("edge endpoint out of range");
    if (u == v) throw Error("loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    edge_count_ += nbrs.size();
  }
  edge_count_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Vertex Graph::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error("no vertex labelled '" + label + "'");
  return static_cast<Vertex>(it - labels_.begin());
}

Ordering::Ordering(std::vector<Vertex> sequence) : sequence_(std::move(sequence)), position_(sequence_.size()) {
  std::vector<bool> seen(sequence_.size(), false);
  for (std::size_t p = 0; p < sequence_.size(); ++p) {
    Vertex v = sequence_[p];
    if (v >= sequence_.size() || seen[v]) throw Error("ordering is not a permutation");
    seen[v] = true;
    position_[v] = p;
  }
}

Ordering Ordering::identity(std::size_t n) {
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), Vertex{0});
  return Ordering(std::move(seq));
}

Ordering Ordering::reversed() const {
  return Ordering(std::vector<Vertex>(sequence_.rbegin(), sequence_.rend()));
}

Graph intersection_graph(const Representation& rep) {
  const std::size_t n = rep.objects.size();
  std::vector<Edge> edges;
  if (rep.all_boxes() && n > 1) {
    // Sweep along the last axis: only pairs overlapping there are tested in full.
    const std::size_t axis = rep.dimension - 1;
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    auto box = [&](Vertex v) -> const Box& { return std::get<Box>(rep.objects[v]); };
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      int c = cmp(box(a).lo(axis), box(b).lo(axis));
      return c != 0 ? c < 0 : a < b;
    });
    std::vector<Vertex> active;
    for (Vertex v : order) {
      const Rational& start = box(v).lo(axis);
      std::erase_if(active, [&](Vertex a) { return box(a).hi(axis) < start; });
      for (Vertex a : active)
        if (intersects(rep.objects[a], rep.objects[v])) edges.emplace_back(std::min(a, v), std::max(a, v));
      active.push_back(v);
    }
  } else {
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (intersects(rep.objects[i], rep.objects[j])) edges.emplace_back(i, j);
  }
  return Graph(n, edges, rep.labels);
}

Ordering sizewise_order(const Representation& rep) {
  std::vector<Rational> sizes;
  sizes.reserve(rep.objects.size());
  for (const auto& o : rep.objects) sizes.push_back(diam_sq(o));
  std::vector<Vertex> seq(rep.objects.size());
  std::iota(seq.begin(), seq.end(), Vertex{0});
  std::stable_sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) { return sizes[a] > sizes[b]; });
  return Ordering(std::move(seq));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  if (n > 2) edges.emplace_back(static_cast<Vertex>(n - 1), 0);
  return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

}  // namespace wcol
