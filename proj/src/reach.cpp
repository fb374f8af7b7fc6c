#include "wcol/reach.hpp"

#include <algorithm>
#include <limits>

namespace wcol {

std::string to_string(ReachKind kind) {
  switch (kind) {
    case ReachKind::weak: return "weak";
    case ReachKind::strong: return "strong";
    case ReachKind::decreasing: return "decr";
  }
  return "?";
}

ReachKind parse_reach_kind(const std::string& text) {
  if (text == "weak") return ReachKind::weak;
  if (text == "strong") return ReachKind::strong;
  if (text == "decr" || text == "decreasing") return ReachKind::decreasing;
  throw Error("unknown reach kind '" + text + "' (expected weak, strong or decr)");
}

namespace {

// Depth-bounded BFS with epoch-stamped marks, reused across sources.
class BoundedBfs {
 public:
  explicit BoundedBfs(std::size_t n) : stamp_(n, 0), depth_(n, 0) {}

  // Visits `source` and every vertex within `limit` steps through vertices
  // accepted by `allowed`. Returns the visited vertices in BFS order.
  template <class Allowed>
  const std::vector<Vertex>& run(const Graph& g, Vertex source, unsigned limit, Allowed&& allowed) {
    next_epoch();
    visited_.clear();
    visited_.push_back(source);
    stamp_[source] = epoch_;
    depth_[source] = 0;
    for (std::size_t head = 0; head < visited_.size(); ++head) {
      Vertex x = visited_[head];
      if (depth_[x] >= limit) continue;
      for (Vertex y : g.neighbors(x)) {
        if (stamp_[y] == epoch_ || !allowed(y)) continue;
        stamp_[y] = epoch_;
        depth_[y] = depth_[x] + 1;
        visited_.push_back(y);
      }
    }
    return visited_;
  }

  unsigned depth(Vertex v) const { return depth_[v]; }

 private:
  void next_epoch() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }

  std::vector<std::uint32_t> stamp_;
  std::vector<unsigned> depth_;
  std::vector<Vertex> visited_;
  std::uint32_t epoch_ = 0;
};

void require_match(const Graph& g, const Ordering& ord) {
  if (g.size() != ord.size())
    throw Error("ordering has " + std::to_string(ord.size()) + " vertices, graph has " + std::to_string(g.size()));
}

// Strong reach of v: one BFS above v to depth k-1, then the hop down.
template <class Out>
void collect_sreach(const Graph& g, const std::vector<std::size_t>& pos, unsigned k, Vertex v, BoundedBfs& bfs,
                    std::vector<std::uint32_t>& mark, std::uint32_t token, Out&& out) {
  out(v);
  if (k == 0) return;
  const std::size_t pv = pos[v];
  mark[v] = token;
  const auto& inner = bfs.run(g, v, k - 1, [&](Vertex y) { return pos[y] > pv; });
  for (Vertex y : inner)
    for (Vertex z : g.neighbors(y))
      if (pos[z] < pv && mark[z] != token) {
        mark[z] = token;
        out(z);
      }
}

}  // namespace

std::vector<Vertex> wreach(const Graph& g, const Ordering& ord, unsigned k, Vertex v) {
  require_match(g, ord);
  const auto& pos = ord.positions();
  BoundedBfs bfs(g.size());
  std::vector<Vertex> out{v};
  for (std::size_t p = 0; p < pos[v]; ++p) {
    Vertex u = ord.at(p);
    const auto& seen = bfs.run(g, u, k, [&](Vertex y) { return pos[y] > p; });
    if (std::find(seen.begin(), seen.end(), v) != seen.end()) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> sreach(const Graph& g, const Ordering& ord, unsigned k, Vertex v) {
  require_match(g, ord);
  BoundedBfs bfs(g.size());
  std::vector<std::uint32_t> mark(g.size(), 0);
  std::vector<Vertex> out;
  collect_sreach(g, ord.positions(), k, v, bfs, mark, 1, [&](Vertex z) { out.push_back(z); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> decr(const Graph& g, const Ordering& ord, unsigned k, Vertex v) {
  require_match(g, ord);
  BoundedBfs bfs(g.size());
  const auto& pos = ord.positions();
  // A neighbour with smaller position is entered only from its larger predecessor,
  // so the walk stays decreasing; depth is the BFS depth of that orientation.
  std::vector<Vertex> out;
  std::vector<bool> seen(g.size(), false);
  std::vector<Vertex> frontier{v};
  seen[v] = true;
  out.push_back(v);
  for (unsigned step = 0; step < k && !frontier.empty(); ++step) {
    std::vector<Vertex> next;
    for (Vertex x : frontier)
      for (Vertex y : g.neighbors(x))
        if (pos[y] < pos[x] && !seen[y]) {
          seen[y] = true;
          next.push_back(y);
          out.push_back(y);
        }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> reach_set(const Graph& g, const Ordering& ord, unsigned k, Vertex v, ReachKind kind) {
  switch (kind) {
    case ReachKind::weak: return wreach(g, ord, k, v);
    case ReachKind::strong: return sreach(g, ord, k, v);
    case ReachKind::decreasing: return decr(g, ord, k, v);
  }
  return {};
}

std::vector<std::size_t> reach_sizes(const Graph& g, const Ordering& ord, unsigned k, ReachKind kind) {
  require_match(g, ord);
  const std::size_t n = g.size();
  const auto& pos = ord.positions();
  BoundedBfs bfs(n);
  std::vector<std::size_t> sizes(n, 0);
  switch (kind) {
    case ReachKind::weak:
      // u lies in wreach(x) for exactly the x found by a BFS from u above u.
      for (Vertex u = 0; u < n; ++u) {
        const std::size_t pu = pos[u];
        for (Vertex x : bfs.run(g, u, k, [&](Vertex y) { return pos[y] > pu; })) ++sizes[x];
      }
      break;
    case ReachKind::strong: {
      std::vector<std::uint32_t> mark(n, 0);
      for (Vertex v = 0; v < n; ++v) {
        std::size_t count = 0;
        collect_sreach(g, pos, k, v, bfs, mark, v + 1, [&](Vertex) { ++count; });
        sizes[v] = count;
      }
      break;
    }
    case ReachKind::decreasing:
      for (Vertex v = 0; v < n; ++v) sizes[v] = decr(g, ord, k, v).size();
      break;
  }
  return sizes;
}

std::size_t colnum_ordered(const Graph& g, const Ordering& ord, unsigned k, ReachKind kind) {
  auto sizes = reach_sizes(g, ord, k, kind);
  return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

std::size_t degeneracy(const Graph& g) {
  const std::size_t n = g.size();
  if (n == 0) return 0;
  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (Vertex v = 0; v < n; ++v) max_deg = std::max(max_deg, deg[v] = g.degree(v));
  std::vector<std::vector<Vertex>> buckets(max_deg + 1);
  for (Vertex v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
  std::vector<bool> removed(n, false);
  std::size_t best = 0, low = 0;
  for (std::size_t done = 0; done < n;) {
    low = std::min(low, max_deg);
    while (buckets[low].empty()) ++low;
    Vertex v = buckets[low].back();
    buckets[low].pop_back();
    if (removed[v] || deg[v] != low) continue;
    removed[v] = true;
    ++done;
    best = std::max(best, low);
    for (Vertex y : g.neighbors(v))
      if (!removed[y]) {
        --deg[y];
        buckets[deg[y]].push_back(y);
        if (deg[y] < low) low = deg[y];
      }
  }
  return best;
}

Ordering degeneracy_order(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> removal;
  removal.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = 0;
    std::size_t pick_deg = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && deg[v] < pick_deg) {
        pick = v;
        pick_deg = deg[v];
      }
    removed[pick] = true;
    removal.push_back(pick);
    for (Vertex y : g.neighbors(pick))
      if (!removed[y]) --deg[y];
  }
  // Smallest-last: the first vertex peeled goes to the end.
  return Ordering(std::vector<Vertex>(removal.rbegin(), removal.rend()));
}

std::size_t back_connection_width(const Graph& g, const Ordering& ord) {
  require_match(g, ord);
  const std::size_t n = g.size();
  // y counts for every x with pos(y) < pos(x) <= max neighbour position of y.
  std::vector<long> diff(n + 1, 0);
  for (Vertex y = 0; y < n; ++y) {
    std::size_t py = ord.position(y), reach = py;
    for (Vertex z : g.neighbors(y)) reach = std::max(reach, ord.position(z));
    if (reach > py) {
      diff[py + 1] += 1;
      diff[reach + 1] -= 1;
    }
  }
  long cur = 0, best = 0;
  for (std::size_t p = 0; p < n; ++p) {
    cur += diff[p];
    best = std::max(best, cur);
  }
  return static_cast<std::size_t>(best);
}

// ---------------------------------------------------------------------------
// Exact search

namespace {

struct BudgetExhausted {};
struct ReachedLowerBound {};

class OrderingSearch {
 public:
  OrderingSearch(const Graph& g, unsigned k, ReachKind kind, std::uint64_t budget)
      : g_(g), k_(k), kind_(kind), budget_(budget), n_(g.size()), placed_(n_, false), count_(n_, 0),
        placed_nbrs_(n_, 0), bfs_(n_), mark_(n_, 0) {}

  ColnumSearch run() {
    ColnumSearch result;
    if (n_ == 0) {
      result.value = 0;
      return result;
    }
    // Incumbent from cheap orderings; the search only looks for strictly better ones.
    for (const Ordering& candidate : {degeneracy_order(g_), Ordering::identity(n_)}) {
      std::size_t v = colnum_ordered(g_, candidate, k_, kind_);
      if (best_order_.size() == 0 || v < best_) {
        best_ = v;
        best_order_ = candidate;
      }
    }
    // wcol_k, scol_k >= col = degeneracy + 1 for k >= 1.
    global_lower_ = k_ == 0 ? 1 : degeneracy(g_) + 1;
    bool finished = true;
    if (best_ > global_lower_) {
      try {
        descend(0);
      } catch (const ReachedLowerBound&) {
      } catch (const BudgetExhausted&) {
        finished = false;
      }
    }
    result.upper_bound = best_;
    result.lower_bound = finished ? best_ : global_lower_;
    if (finished) result.value = best_;
    result.witness = best_order_;
    result.nodes = nodes_;
    return result;
  }

 private:
  // `lower` bounds every completion of the current prefix from below.
  void descend(std::size_t lower) {
    if (sequence_.size() == n_) {
      best_ = lower;
      best_order_ = Ordering(sequence_);
      if (best_ <= global_lower_) throw ReachedLowerBound{};
      return;
    }
    for (Vertex u = 0; u < n_; ++u) {
      if (placed_[u]) continue;
      if (++nodes_ > budget_) throw BudgetExhausted{};
      std::size_t bound = place(u, lower);
      sequence_.push_back(u);
      if (bound < best_) descend(bound);
      sequence_.pop_back();
      unplace(u);
    }
  }

  // Puts u at the next position and returns the updated lower bound.
  std::size_t place(Vertex u, std::size_t lower) {
    placed_[u] = true;
    auto& log = undo_.emplace_back();
    std::size_t bound = lower;
    if (kind_ == ReachKind::weak) {
      // u joins wreach(x) for every x reachable from u through unplaced vertices.
      for (Vertex x : bfs_.run(g_, u, k_, [&](Vertex y) { return !placed_[y]; })) {
        ++count_[x];
        log.push_back(x);
        bound = std::max(bound, count_[x] + (placed_[x] ? 0 : 1));
      }
    } else {
      // sreach(u) is final now: the vertices above u are exactly the unplaced ones.
      bound = std::max(bound, strong_size(u));
      for (Vertex y : g_.neighbors(u))
        if (!placed_[y]) {
          ++placed_nbrs_[y];
          log.push_back(y);
          bound = std::max(bound, placed_nbrs_[y] + 1);
        }
    }
    return bound;
  }

  std::size_t strong_size(Vertex u) {
    std::size_t size = 1;
    if (k_ == 0) return size;
    ++token_;
    mark_[u] = token_;
    const auto& inner = bfs_.run(g_, u, k_ - 1, [&](Vertex y) { return !placed_[y]; });
    for (Vertex y : inner)
      for (Vertex z : g_.neighbors(y))
        if (placed_[z] && mark_[z] != token_) {
          mark_[z] = token_;
          ++size;
        }
    return size;
  }

  void unplace(Vertex u) {
    auto& log = undo_.back();
    if (kind_ == ReachKind::weak) {
      for (Vertex x : log) --count_[x];
    } else {
      for (Vertex y : log) --placed_nbrs_[y];
    }
    undo_.pop_back();
    placed_[u] = false;
  }

  const Graph& g_;
  unsigned k_;
  ReachKind kind_;
  std::uint64_t budget_;
  std::size_t n_;
  std::vector<bool> placed_;
  std::vector<std::size_t> count_;
  std::vector<std::size_t> placed_nbrs_;
  std::vector<std::vector<Vertex>> undo_;
  std::vector<Vertex> sequence_;
  BoundedBfs bfs_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t token_ = 0;
  std::size_t best_ = 0;
  std::size_t global_lower_ = 1;
  Ordering best_order_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ColnumSearch wcol_exact(const Graph& g, unsigned k, std::uint64_t node_budget) {
  return OrderingSearch(g, k, ReachKind::weak, node_budget).run();
}

ColnumSearch scol_exact(const Graph& g, unsigned k, std::uint64_t node_budget) {
  return OrderingSearch(g, k, ReachKind::strong, node_budget).run();
}

}  // namespace wcol
