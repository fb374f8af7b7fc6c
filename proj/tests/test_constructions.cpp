#include <doctest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "wcol/constructions.hpp"
#include "wcol/random.hpp"
#include "wcol/reach.hpp"
#include "wcol/structure.hpp"

using namespace wcol;
using oracle::box;

namespace {

bool pairwise_touching(const Representation& rep) {
  for (std::size_t i = 0; i < rep.size(); ++i)
    for (std::size_t j = i + 1; j < rep.size(); ++j)
      if (interiors_overlap(rep.objects[i], rep.objects[j])) return false;
  return true;
}

bool is_prefix(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

}  // namespace

TEST_CASE("F' rectangles") {
  auto f0 = gen_fprime(0, 5);
  REQUIRE(f0.size() == 1);
  CHECK(std::get<Box>(f0.objects[0]) == box({0, 0}, {1, 1}));
  for (unsigned k = 0; k <= 4; ++k) {
    std::uint64_t m = (1u << (k + 1)) - 1;
    auto f = gen_fprime(k, m);
    CHECK(f.size() == m);
    CHECK(f.declared_thinness == 1u);
    CHECK(pairwise_touching(f));
    CHECK(is_comparable_boxes(f));
    CHECK(is_m_shrinking(f, m));
    for (const auto& o : f.objects) CHECK(side_length(o, 0) == 1);
    auto g = intersection_graph(f);
    auto ord = sizewise_order(f);
    CHECK(ord == Ordering::identity(f.size()));
    auto depth = decreasing_tree_depth(g, ord);
    REQUIRE(depth.has_value());
    CHECK(*depth <= k);
    CHECK(colnum_ordered(g, ord, k, ReachKind::weak) == f.size());
  }
  auto f27 = gen_fprime(2, 7);
  CHECK(f27.size() == 7);
  CHECK(pairwise_touching(f27));
  CHECK(is_m_shrinking(f27, 7));
  CHECK(is_comparable_boxes(f27));
}

TEST_CASE("F'_1 intersection graph by direct predicate evaluation") {
  auto f = gen_fprime(1, 3);
  auto g = intersection_graph(f);
  CHECK(oracle::edge_set(g) == oracle::intersection_edges(f));
  CHECK(g.size() == 3);
  // the root touches both children; the two stretched copies also share a boundary segment
  CHECK(g.has_edge(2, 0));
  CHECK(g.has_edge(2, 1));
  CHECK(g.edge_count() == 3);
  CHECK(*decreasing_tree_depth(g, sizewise_order(f)) == 1);
}

TEST_CASE("H' intervals") {
  for (unsigned t = 1; t <= 4; ++t) {
    auto h = gen_hprime(0, t, 3);
    REQUIRE(h.size() == 1);
    CHECK(std::get<Box>(h.objects[0]).length(0) == 1);
  }
  auto path = gen_hprime(3, 1, 4);
  CHECK(path.size() == 4);
  CHECK(thinness(path) == 1);
  CHECK(intersection_graph(path).edge_count() == 3);
  CHECK(*decreasing_tree_depth(intersection_graph(path), sizewise_order(path)) == 3);
  auto h22 = gen_hprime(2, 2, 6);
  CHECK(h22.size() == 6);
  CHECK(thinness(h22) <= 2);
  CHECK(is_m_shrinking(h22, 6));
  for (unsigned k = 0; k <= 4; ++k)
    for (unsigned t = 1; t <= 4; ++t) {
      std::uint64_t m = oracle::choose(k + t, t);
      auto h = gen_hprime(k, t, m);
      CHECK(h.size() == m);
      CHECK(h.declared_thinness == t);
      CHECK(oracle::thinness(h) <= t);
      if (h.size() > 1) CHECK(is_m_shrinking(h, m));
      auto g = intersection_graph(h);
      auto ord = sizewise_order(h);
      CHECK(colnum_ordered(g, ord, k, ReachKind::weak) == h.size());
      CHECK(verify_diameter_condition(g, ord, 2 * k));
      CHECK(color_count(greedy_interval_coloring(h)) <= t + 1);
      // the smallest interval's right end is the rightmost point
      const Box& last = std::get<Box>(h.objects.back());
      for (const auto& o : h.objects) CHECK(std::get<Box>(o).hi(0) <= last.hi(0));
    }
  CHECK_THROWS_AS(gen_hprime(1, 0, 2), Error);
}

TEST_CASE("scaffold graph examples") {
  auto single = scaffold_graph(Graph(1, {}), Ordering::identity(1), 5);
  CHECK(single.graph.size() == 1);
  auto star = scaffold_graph(complete_graph(2), Ordering::identity(2), 2);
  CHECK(star.graph.size() == 3);
  CHECK(star.graph.edge_count() == 2);
  CHECK(star.graph.degree(0) == 2);
  CHECK(star.parent == std::vector<std::int64_t>{-1, 0, 0});
  CHECK(scaffold_size(3, 3) == 13);
  CHECK(scaffold_graph(path_graph(3), Ordering::identity(3), 3).graph.size() == 13);
  CHECK(scaffold_size(4, 1) == 4);
  CHECK_THROWS_AS(scaffold_graph(path_graph(6), Ordering::identity(6), 10, 1000), BudgetError);
  try {
    scaffold_graph(path_graph(6), Ordering::identity(6), 10, 1000);
  } catch (const BudgetError& e) {
    CHECK(std::string(e.what()).find("111111") != std::string::npos);
  }
}

TEST_CASE("scaffold adjacency rule and tree structure") {
  Rng rng(17);
  for (int it = 0; it < 20; ++it) {
    std::size_t n = 1 + uniform_below(rng, 4);
    std::uint64_t m = 1 + uniform_below(rng, 3);
    Graph host = random_graph(n, 1, 2, rng);
    Ordering ord = random_ordering(n, rng);
    auto s = scaffold_graph(host, ord, m);
    const std::size_t N = s.graph.size();
    CHECK(BigInt(static_cast<unsigned long>(N)) == scaffold_size(n, m));
    // complete m-ary tree of depth n-1
    std::vector<std::size_t> children(N, 0);
    for (std::size_t y = 0; y < N; ++y) {
      if (s.parent[y] < 0) {
        CHECK(s.level[y] == 0);
        continue;
      }
      children[s.parent[y]]++;
      CHECK(s.level[s.parent[y]] + 1 == s.level[y]);
    }
    for (std::size_t y = 0; y < N; ++y) CHECK(children[y] == (s.level[y] + 1 < n ? m : 0));
    auto ancestor = [&](std::size_t a, std::size_t b) {
      for (std::int64_t c = static_cast<std::int64_t>(b); c >= 0; c = s.parent[c])
        if (static_cast<std::size_t>(c) == a) return true;
      return false;
    };
    for (std::size_t x = 0; x < N; ++x)
      for (std::size_t y = 0; y < N; ++y) {
        if (x == y) continue;
        CHECK(ancestor(y, x) == (is_prefix(s.word[y], s.word[x]) && s.word[y].size() < s.word[x].size()));
        bool want = s.level[x] != s.level[y] && host.has_edge(s.host[s.level[x]], s.host[s.level[y]]) &&
                    (ancestor(x, y) || ancestor(y, x));
        CHECK(s.graph.has_edge(x, y) == want);
      }
  }
}

TEST_CASE("scaffold boxes") {
  Representation one({box({0, 0}, {2, 3})}, {"a"});
  auto b1 = scaffold_boxes(one, 4);
  REQUIRE(b1.size() == 1);
  CHECK(std::get<Box>(b1.objects[0]) == box({0, 0, 0}, {2, 3, 3}));

  auto h = gen_hprime(1, 1, 2);
  auto boxes = scaffold_boxes(h, 2);
  CHECK(boxes.size() == 3);
  CHECK(boxes.dimension == 2);
  auto sg = scaffold_graph(intersection_graph(h), sizewise_order(h), 2);
  CHECK(oracle::edge_set(intersection_graph(boxes)) == oracle::edge_set(sg.graph));
  CHECK(boxes.labels == sg.graph.labels());

  for (unsigned k = 1; k <= 2; ++k)
    for (unsigned t = 1; t <= 2; ++t) {
      std::uint64_t m = oracle::choose(k + t, t);
      auto base = gen_hprime(k, t, m);
      auto bx = scaffold_boxes(base, m);
      auto s = scaffold_graph(intersection_graph(base), sizewise_order(base), m);
      CHECK(oracle::edge_set(intersection_graph(bx)) == oracle::edge_set(s.graph));
      // nesting of the new axis along the tree
      const std::size_t last = bx.dimension - 1;
      for (std::size_t x = 0; x < bx.size(); ++x)
        for (std::size_t y = 0; y < bx.size(); ++y) {
          if (x == y || s.word[y].size() >= s.word[x].size()) continue;
          const Box& bxx = std::get<Box>(bx.objects[x]);
          const Box& byy = std::get<Box>(bx.objects[y]);
          bool inside = byy.lo(last) <= bxx.lo(last) && bxx.hi(last) <= byy.hi(last);
          bool apart = bxx.hi(last) < byy.lo(last) || byy.hi(last) < bxx.lo(last);
          if (is_prefix(s.word[y], s.word[x]))
            CHECK(inside);
          else
            CHECK(apart);
        }
    }
  auto f = gen_fprime(1, 3);
  auto fb = scaffold_boxes(f, 3);
  CHECK(fb.size() == 13);
  CHECK(oracle::edge_set(intersection_graph(fb)) ==
        oracle::edge_set(scaffold_graph(intersection_graph(f), sizewise_order(f), 3).graph));
  CHECK(thinness(fb) == 1);
}

TEST_CASE("scaffold boxes reject bad input") {
  Representation incomparable({box({0, 0}, {1, 30}), box({0, 0}, {2, 2})}, {"p", "q"});
  try {
    scaffold_boxes(incomparable, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    std::string msg = e.what();
    CHECK(msg.find("'p'") != std::string::npos);
    CHECK(msg.find("'q'") != std::string::npos);
  }
  Representation slow({box({0}, {4}), box({0}, {2})}, {"p", "q"});
  CHECK_THROWS_AS(scaffold_boxes(slow, 2), Error);
  CHECK_NOTHROW(scaffold_boxes(slow, 1));
}

TEST_CASE("dimension lift") {
  Representation two({box({0, 0}, {1, 1}), box({Rational(1, 2), 0}, {Rational(3, 2), 1})});
  auto up = lift_dimension(two, {false, true});
  CHECK(up.dimension == 3);
  CHECK(intersects(up.objects[0], up.objects[1]));
  CHECK_FALSE(interiors_overlap(up.objects[0], up.objects[1]));
  auto all = lift_dimension(two, {true, true});
  auto none = lift_dimension(two, {false, false});
  CHECK(oracle::edge_set(intersection_graph(all)) == oracle::edge_set(intersection_graph(two)));
  for (std::size_t i = 0; i < 2; ++i) {
    const Box& a = std::get<Box>(all.objects[i]);
    const Box& b = std::get<Box>(none.objects[i]);
    CHECK(a.lo(2) == -b.hi(2));
    CHECK(a.hi(2) == -b.lo(2));
  }
  CHECK_THROWS_AS(lift_dimension(Representation({box({0, 0}, {1, 2})}), {true}), Error);

  Rng rng(23);
  for (int it = 0; it < 30; ++it) {
    auto rep = random_thin_cubes(12, 3, 2, {Rational(1, 2), 1, 2}, rng);
    std::vector<bool> y(rep.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = coin(rng, 1, 2);
    auto lifted = lift_dimension(rep, y);
    CHECK(oracle::edge_set(intersection_graph(lifted)) == oracle::edge_set(intersection_graph(rep)));
    for (std::size_t i = 0; i < rep.size(); ++i)
      for (std::size_t j = i + 1; j < rep.size(); ++j) {
        bool was = interiors_overlap(rep.objects[i], rep.objects[j]);
        bool now = interiors_overlap(lifted.objects[i], lifted.objects[j]);
        if (y[i] != y[j] || !was) CHECK_FALSE(now);
      }
  }
}

TEST_CASE("touching lift") {
  auto path = gen_hprime(2, 1, 3);  // already touching
  auto lifted = touching_lift(path, greedy_interval_coloring(path), 1);
  CHECK(lifted.dimension == 2);
  CHECK(thinness(lifted) == 1);

  std::vector<GeoObject> objs{box({0, 0}, {2, 2}), box({1, 1}, {3, 3}), box({2, 0}, {4, 2})};
  Representation overlapping(objs);
  CHECK_THROWS_AS(touching_lift(overlapping, {0, 0, 1}, 1), Error);
  CHECK_THROWS_AS(touching_lift(overlapping, {0, 1, 2}, 1), Error);
  auto good = touching_lift(overlapping, {0, 1, 2}, 2);
  CHECK(good.dimension == 4);
  CHECK(thinness(good) == 1);
  CHECK(oracle::edge_set(intersection_graph(good)) == oracle::edge_set(intersection_graph(overlapping)));
  try {
    touching_lift(overlapping, {0, 0, 1}, 1);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("'v0'") != std::string::npos);
  }
}

TEST_CASE("lower-bound instances") {
  auto f = build_theorem_lb_instance(LbFamily::F, 1);
  CHECK(f.scaffold.graph.size() == 13);
  CHECK(f.expected_bound == 3);
  CHECK(f.radius == 2);
  CHECK(f.boxes.has_value());
  auto h = build_theorem_lb_instance(LbFamily::H, 1, 1);
  CHECK(h.scaffold.graph.size() == 3);
  CHECK(h.expected_bound == 2);
  auto h22 = build_theorem_lb_instance(LbFamily::H, 2, 2);
  CHECK(h22.scaffold.graph.size() == 9331);
  CHECK(h22.expected_bound == 6);
  CHECK(h22.boxes.has_value());
  auto f2 = build_theorem_lb_instance(LbFamily::F, 2);
  CHECK(f2.scaffold.graph.size() == 137257);
  CHECK_FALSE(f2.boxes.has_value());

  auto lifted = build_theorem_lb_instance(LbFamily::H, 1, 1, 1u);
  REQUIRE(lifted.touching.has_value());
  CHECK(lifted.touching->dimension == 3);
  CHECK(thinness(*lifted.touching) == 1);
  CHECK(oracle::edge_set(intersection_graph(*lifted.touching)) == oracle::edge_set(lifted.scaffold.graph));
}

TEST_CASE("WCOL_BUDGET overrides the vertex budgets") {
  ::setenv("WCOL_BUDGET", "5", 1);
  CHECK(scaffold_vertex_budget() == 5);
  CHECK_THROWS_AS(build_theorem_lb_instance(LbFamily::F, 1), BudgetError);
  ::setenv("WCOL_BUDGET", "nonsense", 1);
  CHECK_THROWS_AS(scaffold_vertex_budget(), Error);
  ::unsetenv("WCOL_BUDGET");
  CHECK(scaffold_vertex_budget() == 200000);
  CHECK(scaffold_box_budget() == 10000);
}
