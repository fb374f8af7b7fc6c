#include "wcol/random.hpp"

#include <numeric>

namespace wcol {

Ordering random_ordering(std::size_t n, Rng& rng) {
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), Vertex{0});
  shuffle(seq, rng);
  return Ordering(std::move(seq));
}

Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng, num, den)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

std::pair<Graph, Ordering> random_bounded_width_graph(std::size_t n, std::size_t w, Rng& rng) {
  // Position p holds vertex name[p].
  std::vector<Vertex> name(n);
  std::iota(name.begin(), name.end(), Vertex{0});
  shuffle(name, rng);
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n && q <= p + w; ++q)
      if (coin(rng, 1, 2)) edges.emplace_back(name[p], name[q]);
  return {Graph(n, edges), Ordering(name)};
}

namespace {

Rational grid_coord(Rng& rng, std::uint64_t halves) {
  Rational x(static_cast<unsigned long>(uniform_below(rng, halves + 1)), 2ul);
  x.canonicalize();
  return x;
}

}  // namespace

Representation random_thin_cubes(std::size_t count, std::uint64_t t, std::size_t d, const std::vector<Rational>& sides,
                                 Rng& rng) {
  if (sides.empty()) throw Error("no side lengths to draw from");
  // Area grows with the count so dense but not saturated sets are typical.
  const std::uint64_t halves = 2 * (2 + static_cast<std::uint64_t>(count) / 4);
  std::vector<GeoObject> objs;
  for (std::size_t attempt = 0; attempt < 20 * count && objs.size() < count; ++attempt) {
    const Rational& side = sides[uniform_below(rng, sides.size())];
    Point lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = grid_coord(rng, halves);
      hi[i] = lo[i] + side;
    }
    objs.emplace_back(Box(std::move(lo), std::move(hi)));
    if (thinness(Representation(objs)) > t) objs.pop_back();
  }
  return Representation(std::move(objs), {}, t);
}

Representation random_thin_balls(std::size_t count, std::uint64_t t, std::size_t d, Rng& rng) {
  const std::uint64_t halves = 2 * (2 + static_cast<std::uint64_t>(count) / 4);
  std::vector<GeoObject> objs;
  for (std::uint64_t layer = 0; layer < t; ++layer) {
    const std::size_t quota = count / t + (layer < count % t ? 1 : 0);
    std::vector<GeoObject> mine;
    for (std::size_t attempt = 0; attempt < 20 * quota && mine.size() < quota; ++attempt) {
      Point c(d);
      for (std::size_t i = 0; i < d; ++i) c[i] = grid_coord(rng, halves);
      Ball ball(std::move(c), coin(rng, 1, 2) ? Rational(1, 2) : Rational(1));
      bool clear = true;
      for (const auto& o : mine)
        if (interiors_overlap(o, ball)) {
          clear = false;
          break;
        }
      if (clear) mine.emplace_back(std::move(ball));
    }
    objs.insert(objs.end(), mine.begin(), mine.end());
  }
  return Representation(std::move(objs), {}, t);
}

}  // namespace wcol
