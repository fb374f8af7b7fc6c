// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <iostream>
#include <sstream>
#include <thread>

#include "oracles.hpp"
#include "wcol/bounds.hpp"
#include "wcol/constructions.hpp"
#include "wcol/property.hpp"
#include "wcol/random.hpp"
#include "wcol/reach.hpp"
#include "wcol/structure.hpp"
#include "wcol/verify.hpp"

using namespace wcol;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

bool pairwise_touching(const Representation& rep) {
  for (std::size_t i = 0; i < rep.size(); ++i)
    for (std::size_t j = i + 1; j < rep.size(); ++j)
      if (interiors_overlap(rep.objects[i], rep.objects[j])) return false;
  return true;
}

std::string tag(const char* fam, unsigned k, unsigned t = 0) {
  std::ostringstream s;
  s << fam << "(k=" << k;
  if (t) s << ",t=" << t;
  s << ")";
  return s.str();
}

void generator_sizes(Outcome& o) {
  for (unsigned k = 0; k <= 4; ++k)
    o.expect(gen_fprime(k, (1u << (k + 1)) - 1).size() == (1u << (k + 1)) - 1, tag("F'", k));
  for (unsigned k = 0; k <= 4; ++k)
    for (unsigned t = 1; t <= 4; ++t)
      o.expect(gen_hprime(k, t, oracle::choose(k + t, t)).size() == oracle::choose(k + t, t), tag("H'", k, t));
  o.note << "F' k=0..4, H' k,t<=4";
}

void representation_validity(Outcome& o) {
  for (unsigned k = 0; k <= 4; ++k) {
    std::uint64_t m = (1u << (k + 1)) - 1;
    auto f = gen_fprime(k, m);
    o.expect(pairwise_touching(f), tag("F' touching", k));
    o.expect(is_comparable_boxes(f), tag("F' comparable", k));
    o.expect(f.size() < 2 || is_m_shrinking(f, m), tag("F' shrinking", k));
  }
  std::uint64_t worst = 0;
  for (unsigned k = 0; k <= 4; ++k)
    for (unsigned t = 1; t <= 4; ++t) {
      std::uint64_t m = oracle::choose(k + t, t);
      auto h = gen_hprime(k, t, m);
      std::uint64_t th = oracle::thinness(h);
      worst = std::max<std::uint64_t>(worst, th > t ? th - t : 0);
      o.expect(th <= t, tag("H' thinness", k, t));
      o.expect(h.size() < 2 || is_m_shrinking(h, m), tag("H' shrinking", k, t));
    }
  o.note << "max thinness excess over t: " << worst;
}

void sizewise_equality(Outcome& o) {
  std::vector<std::pair<std::string, Representation>> fams;
  std::vector<unsigned> ks;
  for (unsigned k = 0; k <= 4; ++k) {
    fams.emplace_back(tag("F'", k), gen_fprime(k, (1u << (k + 1)) - 1));
    ks.push_back(k);
    for (unsigned t = 1; t <= 4; ++t) {
      fams.emplace_back(tag("H'", k, t), gen_hprime(k, t, oracle::choose(k + t, t)));
      ks.push_back(k);
    }
  }
  for (std::size_t i = 0; i < fams.size(); ++i) {
    const auto& [name, rep] = fams[i];
    const unsigned k = ks[i];
    Graph g = intersection_graph(rep);
    Ordering ord = sizewise_order(rep);
    o.expect(colnum_ordered(g, ord, k, ReachKind::weak) == rep.size(), name + " wcol = |V|");
    auto depth = decreasing_tree_depth(g, ord);
    o.expect(depth && *depth <= k, name + " tree depth");
    o.expect(verify_diameter_condition(g, ord, 2 * k), name + " diameter");
  }
  o.note << fams.size() << " families";
}

void lb_i(Outcome& o) {
  auto inst = build_theorem_lb_instance(LbFamily::F, 1);
  const Graph& g = inst.scaffold.graph;
  o.expect(g.size() == 13, "13 vertices");
  auto start = std::chrono::steady_clock::now();
  auto exact = wcol_exact(g, 2);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (exact.exact()) {
    o.expect(*exact.value >= 3, "exact wcol_2 >= 3");
    o.note << "exact wcol_2 = " << *exact.value << " in " << secs << " s; ";
  } else {
    o.note << "branch-and-bound budget exhausted, bounds [" << exact.lower_bound << "," << exact.upper_bound << "]; ";
  }
  o.expect(secs <= 60 || !exact.exact(), "B&B within 60 s");
  VerifyOptions opt;
  opt.family = "F";
  opt.k = 1;
  opt.samples = 200;
  opt.seed = 7;
  opt.threads = worker_count();
  auto rep = verify_lb(opt);
  std::size_t sampled = 0, min_seen = g.size();
  for (const auto& c : rep.checks)
    if (c.name == "scaffold wcol under random order") {
      ++sampled;
      min_seen = std::min<std::size_t>(min_seen, std::stoul(c.observed));
    }
  o.expect(sampled == 200, "200 sampled orderings");
  o.expect(rep.passed(), "sampled orderings >= 3");
  o.note << "200 sampled orderings, min wcol_2 = " << min_seen;
}

void lb_ii(Outcome& o) {
  auto small = build_theorem_lb_instance(LbFamily::H, 1, 1);
  o.expect(small.scaffold.graph.size() == 3, "H_{1,1} has 3 vertices");
  auto exact = wcol_exact(small.scaffold.graph, 2);
  o.expect(exact.exact() && *exact.value >= 2, "exact wcol_2(H_{1,1}) >= 2");
  if (exact.exact()) o.note << "H_{1,1} exact wcol_2 = " << *exact.value << "; ";

  VerifyOptions opt;
  opt.family = "H";
  opt.k = 2;
  opt.t = 2;
  opt.samples = 100;
  opt.seed = 0;
  opt.threads = worker_count();
  auto start = std::chrono::steady_clock::now();
  auto rep = verify_lb(opt);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t min_seen = SIZE_MAX, count = 0;
  bool sizewise = false;
  for (const auto& c : rep.checks) {
    if (c.name == "scaffold wcol under random order") {
      ++count;
      min_seen = std::min<std::size_t>(min_seen, std::stoul(c.observed));
    }
    if (c.name == "scaffold wcol under sizewise order") sizewise = c.passed;
  }
  o.expect(count == 100, "100 sampled orderings");
  o.expect(sizewise, "sizewise order >= 6");
  o.expect(rep.passed(), "all H_{2,2} checks");
  o.expect(secs <= 300, "H_{2,2} within 5 min");
  o.note << "H_{2,2}: 9331 vertices, min sampled wcol_4 = " << min_seen << ", " << secs << " s";
}

void lb_iii(Outcome& o) {
  auto h = gen_hprime(1, 1, 2);
  auto colors = greedy_interval_coloring(h);
  o.expect(color_count(colors) <= 2, "H'_{1,1} greedy colours <= 2");
  auto inst = build_theorem_lb_instance(LbFamily::H, 1, 1, 1u);
  o.expect(inst.touching.has_value(), "touching lift built");
  if (!inst.touching) return;
  const Representation& up = *inst.touching;
  o.expect(up.dimension == 3, "dimension 3");
  bool cubes = true;
  for (const auto& obj : up.objects) cubes = cubes && is_hypercube(obj);
  o.expect(cubes, "hypercubes");
  auto th = oracle::thinness(up);
  o.expect(th == 1, "thinness 1");
  o.expect(oracle::intersection_edges(up) == oracle::edge_set(inst.scaffold.graph), "same graph as H_{1,1}");
  o.note << color_count(colors) << " colours, " << up.size() << " cubes in R^3, thinness " << th;
}

void lemma1(Outcome& o) {
  struct Run {
    std::string bound_case;
    unsigned t;
    bool unit;
  };
  const std::vector<Run> runs{{"a", 1, true}, {"a", 2, false}, {"a", 3, false},
                              {"b", 1, false}, {"b", 2, false}, {"b", 3, false}};
  std::size_t total = 0;
  for (const auto& r : runs) {
    VerifyOptions opt;
    opt.bound_case = r.bound_case;
    opt.t = r.t;
    opt.unit_size = r.unit;
    opt.d = 2;
    opt.k = 4;
    opt.samples = 100;
    opt.max_objects = 40;
    opt.seed = 1000 + r.t;
    opt.threads = worker_count();
    auto rep = verify_lemma1(opt);
    total += rep.checks.size();
    o.expect(rep.passed(), "case " + r.bound_case + " t=" + std::to_string(r.t));
  }
  o.note << total << " random sets (unit squares t=1, mixed cubes t=2,3, balls t=1..3), k<=4";
}

void property_p(Outcome& o) {
  VerifyOptions opt;
  opt.k = 3;
  opt.t = 3;
  auto rep = verify_propP(opt);
  o.expect(rep.checks.size() == 12, "12 families");
  o.expect(rep.passed(), "zero violations");
  o.note << rep.checks.size() << " families H'(k<=3,t<=3), exhaustive s coverage";
}

void decreasing_paths(Outcome& o) {
  std::size_t checked = 0;
  for (int i = 0; i < 200; ++i) {
    Rng rng(derive_seed(9, i));
    std::size_t n = 1 + uniform_below(rng, 12);
    std::size_t w_gen = uniform_below(rng, 4);
    auto [g, ord] = random_bounded_width_graph(n, w_gen, rng);
    // width counted straight from the condition
    std::size_t w = 0;
    for (Vertex x = 0; x < n; ++x) {
      std::size_t c = 0;
      for (Vertex y = 0; y < n; ++y) {
        if (!ord.precedes(y, x)) continue;
        bool hit = false;
        for (Vertex z : g.neighbors(y)) hit = hit || !ord.precedes(z, x);
        c += hit;
      }
      w = std::max(w, c);
    }
    o.expect(w <= 3, "width <= 3");
    for (unsigned k = 0; k <= 4; ++k)
      for (Vertex v = 0; v < n; ++v) {
        auto got = decr(g, ord, k, v);
        auto want = oracle::reach(g, ord, k, v, oracle::Kind::decreasing);
        o.expect(std::set<Vertex>(got.begin(), got.end()) == want, "decr matches enumeration");
        o.expect(got.size() <= oracle::choose(k + static_cast<unsigned>(w), static_cast<unsigned>(w)),
                 "binomial bound");
        ++checked;
      }
  }
  o.note << "200 pairs, " << checked << " (v,k) checks";
}

void definitional(Outcome& o) {
  std::vector<Graph> graphs;
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto& g : oracle::all_graphs(n)) graphs.push_back(std::move(g));
  const std::size_t exhaustive = graphs.size();
  Rng rng(77);
  for (int i = 0; i < 500; ++i) graphs.push_back(random_graph(1 + uniform_below(rng, 6), 1 + uniform_below(rng, 3), 4, rng));
  for (const auto& g : graphs) {
    const std::size_t n = g.size();
    Ordering ord = random_ordering(n, rng);
    for (unsigned k = 0; k <= 3; ++k)
      for (Vertex v = 0; v < n; ++v) {
        auto w = wreach(g, ord, k, v);
        auto s = sreach(g, ord, k, v);
        o.expect(std::set<Vertex>(w.begin(), w.end()) == oracle::reach(g, ord, k, v, oracle::Kind::weak), "wreach");
        o.expect(std::set<Vertex>(s.begin(), s.end()) == oracle::reach(g, ord, k, v, oracle::Kind::strong), "sreach");
      }
    const std::size_t col = oracle::degeneracy(g) + 1;
    auto w1 = wcol_exact(g, 1), s1 = scol_exact(g, 1);
    o.expect(w1.exact() && s1.exact() && *w1.value == col && *s1.value == col, "wcol_1 = scol_1 = col");
    for (unsigned k = 2; k <= 3; ++k) {
      auto wk = wcol_exact(g, k), sk = scol_exact(g, k);
      o.expect(wk.exact() && sk.exact(), "exact search finished");
      if (!wk.exact() || !sk.exact()) continue;
      BigInt power = pow_int(BigInt(static_cast<unsigned long>(*sk.value)), k);
      o.expect(*sk.value <= *wk.value && BigInt(static_cast<unsigned long>(*wk.value)) <= power, "scol <= wcol <= scol^k");
    }
    std::vector<std::size_t> wc(5), sc(5);
    for (unsigned k = 0; k <= 4; ++k) {
      wc[k] = oracle::colnum(g, ord, k, oracle::Kind::weak);
      sc[k] = oracle::colnum(g, ord, k, oracle::Kind::strong);
    }
    for (unsigned k = 1; k <= 4; ++k) {
      std::size_t rhs = 0;
      for (unsigned i = 1; i <= k; ++i) rhs += sc[i] * wc[k - i];
      o.expect(wc[k] <= rhs, "per-ordering recurrence");
    }
  }
  o.note << exhaustive << " exhaustive graphs (n<=4) + 500 random (n<=6)";
}

void bounds_tables(Outcome& o) {
  std::size_t compared = 0;
  for (unsigned t = 1; t <= 3; ++t)
    for (unsigned d = 1; d <= 3; ++d)
      for (unsigned k = 1; k <= 16; ++k)
        for (const auto& c : {BoundCase::centrally_symmetric(t, d), BoundCase::ball_like(1, t, d),
                              BoundCase::ball_like(Rational(3, 2), t, d), BoundCase::ball_like(Rational(7, 3), t, d)}) {
          auto f = property_table_f(c, 2 * k - 2);
          o.expect(generic_theorem_upper(f, property_table_e(c), k) == thm_weak_upper(c, k).value,
                   "case " + c.name() + " t=" + std::to_string(t) + " d=" + std::to_string(d) + " k=" +
                       std::to_string(k));
          ++compared;
        }
  o.note << compared << " exact comparisons (b in {1, 3/2, 7/3})";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*run)(Outcome&);
  };
  const Criterion criteria[] = {
      {"generator cardinalities", generator_sizes},
      {"representation validity", representation_validity},
      {"sizewise weak colouring equals |V|", sizewise_equality},
      {"F_1 scaffold lower bound", lb_i},
      {"H_{1,1} exact and H_{2,2} sampled lower bound", lb_ii},
      {"colouring lift to touching cubes", lb_iii},
      {"strong colouring of random thin sets", lemma1},
      {"property P on generated interval families", property_p},
      {"decreasing paths with bounded width", decreasing_paths},
      {"definitional oracles", definitional},
      {"weak bound tables", bounds_tables},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << index << ": " << c.name << " (" << o.note.str() << "; "
              << secs << " s)" << std::endl;
    failed += !o.ok;
  }
  std::cout << (11 - failed) << "/11 criteria passed" << std::endl;
  return failed ? 1 : 0;
}
