#include "wcol/structure.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace wcol {

std::optional<std::size_t> decreasing_tree_depth(const Graph& g, const Ordering& ord) {
  const std::size_t n = g.size();
  if (n == 0) return std::nullopt;
  const Vertex root = ord.at(n - 1);
  std::vector<long> dist(n, -1);
  std::queue<Vertex> q;
  dist[root] = 0;
  q.push(root);
  std::size_t reached = 1, depth = 0;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] >= 0 || !ord.precedes(y, x)) continue;
      dist[y] = dist[x] + 1;
      depth = std::max<std::size_t>(depth, dist[y]);
      ++reached;
      q.push(y);
    }
  }
  if (reached != n) return std::nullopt;
  return depth;
}

bool verify_diameter_condition(const Graph& g, const Ordering& ord, unsigned k) {
  const std::size_t n = g.size();
  std::vector<long> dist(n);
  std::vector<Vertex> queue;
  for (std::size_t start = 0; start < n; ++start) {
    // Suffix of positions >= start.
    const std::size_t members = n - start;
    for (std::size_t p = start; p < n; ++p) {
      Vertex src = ord.at(p);
      std::fill(dist.begin(), dist.end(), -1);
      queue.assign(1, src);
      dist[src] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        for (Vertex y : g.neighbors(x))
          if (dist[y] < 0 && ord.position(y) >= start) {
            dist[y] = dist[x] + 1;
            if (dist[y] > static_cast<long>(k)) return false;
            queue.push_back(y);
          }
      }
      if (queue.size() != members) return false;
    }
  }
  return true;
}

namespace {

const Box& interval_of(const Representation& rep, std::size_t i) {
  if (rep.dimension != 1) throw Error("interval operations need a 1-dimensional representation");
  return as_box(rep.objects[i]);
}

}  // namespace

Coloring greedy_interval_coloring(const Representation& rep) {
  const std::size_t n = rep.objects.size();
  for (std::size_t i = 0; i < n; ++i) interval_of(rep, i);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return interval_of(rep, a).lo(0) < interval_of(rep, b).lo(0);
  });
  Coloring colors(n, 0);
  std::vector<std::size_t> active;
  for (std::size_t v : order) {
    const Rational& left = interval_of(rep, v).lo(0);
    // Closed intervals: one ending exactly at `left` still meets v.
    std::erase_if(active, [&](std::size_t a) { return interval_of(rep, a).hi(0) < left; });
    std::vector<bool> used(active.size() + 1, false);
    for (std::size_t a : active)
      if (colors[a] < used.size()) used[colors[a]] = true;
    std::uint32_t c = 0;
    while (used[c]) ++c;
    colors[v] = c;
    active.push_back(v);
  }
  return colors;
}

std::size_t interval_clique_number(const Representation& rep) {
  std::vector<std::pair<const Rational*, int>> events;
  for (std::size_t i = 0; i < rep.objects.size(); ++i) {
    const Box& b = interval_of(rep, i);
    events.emplace_back(&b.lo(0), +1);
    events.emplace_back(&b.hi(0), -1);
  }
  // Openings first at equal coordinates: touching closed intervals meet.
  std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
    int c = cmp(*a.first, *b.first);
    return c != 0 ? c < 0 : a.second > b.second;
  });
  long cur = 0, best = 0;
  for (const auto& e : events) {
    cur += e.second;
    best = std::max(best, cur);
  }
  return static_cast<std::size_t>(best);
}

Coloring greedy_coloring(const Graph& g, const Ordering& ord) {
  const std::size_t n = g.size();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  Coloring colors(n, kUnset);
  for (Vertex v : ord.sequence()) {
    std::vector<bool> used(g.degree(v) + 1, false);
    for (Vertex y : g.neighbors(v))
      if (colors[y] != kUnset && colors[y] < used.size()) used[colors[y]] = true;
    std::uint32_t c = 0;
    while (used[c]) ++c;
    colors[v] = c;
  }
  return colors;
}

std::size_t color_count(const Coloring& colors) {
  if (colors.empty()) return 0;
  return *std::max_element(colors.begin(), colors.end()) + 1;
}

std::optional<Edge> monochromatic_edge(const Graph& g, const Coloring& colors) {
  if (colors.size() != g.size()) throw Error("colouring size does not match the graph");
  for (auto [u, v] : g.edges())
    if (colors[u] == colors[v]) return Edge{u, v};
  return std::nullopt;
}

}  // namespace wcol
