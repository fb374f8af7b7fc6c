#include "wcol/verify.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "wcol/bounds.hpp"
#include "wcol/property.hpp"
#include "wcol/random.hpp"
#include "wcol/reach.hpp"

namespace wcol {

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

std::string VerifyReport::text(bool failures_only) const {
  std::ostringstream out;
  for (const auto& c : checks) {
    if (failures_only && c.passed) continue;
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << c.params << "] expected " << c.expected << ", observed "
        << c.observed;
    if (!c.witness.empty()) out << " (" << c.witness << ")";
    out << "\n";
  }
  out << suite << ": " << (checks.size() - failures()) << "/" << checks.size() << " checks passed, seed " << seed;
  for (const auto& [name, value] : budgets) out << ", " << name << " " << value;
  out << "\n" << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

Json VerifyReport::json() const {
  Json list = Json::array();
  for (const auto& c : checks)
    list.push_back({{"name", c.name},
                    {"params", c.params},
                    {"expected", c.expected},
                    {"observed", c.observed},
                    {"status", c.passed ? "PASS" : "FAIL"},
                    {"witness", c.witness}});
  return {{"suite", suite}, {"seed", seed}, {"budgets", budgets}, {"checks", std::move(list)}, {"passed", passed()}};
}

namespace {

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  out << ")";
  return out.str();
}

std::string seed_witness(std::uint64_t sample_seed) { return "sample seed " + std::to_string(sample_seed); }

// Runs body(i) for i in [0, count) on `threads` workers; results land by index.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += threads) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

VerifyReport verify_lemma1(const VerifyOptions& opt) {
  VerifyReport report;
  report.suite = "lemma1";
  report.seed = opt.seed;
  const bool balls = opt.bound_case == "b";
  if (!balls && opt.bound_case != "a") throw Error("lemma1 case must be a (cubes) or b (balls)");
  const BoundCase bound = balls ? BoundCase::ball_like(1, opt.t, opt.d) : BoundCase::centrally_symmetric(opt.t, opt.d);
  std::vector<Rational> sides = opt.unit_size ? std::vector<Rational>{1}
                                              : std::vector<Rational>{Rational(1, 2), 1, 2, 3};
  std::vector<CheckResult> results(opt.samples);
  parallel_for(opt.samples, opt.threads, [&](std::size_t i) {
    const std::uint64_t sample_seed = derive_seed(opt.seed, i);
    Rng rng(sample_seed);
    const std::size_t count = 1 + uniform_below(rng, opt.max_objects);
    Representation rep = balls ? random_thin_balls(count, opt.t, opt.d, rng)
                               : random_thin_cubes(count, opt.t, opt.d, sides, rng);
    const Graph g = intersection_graph(rep);
    const Ordering ord = sizewise_order(rep);
    std::vector<std::size_t> observed;
    std::vector<std::string> limits;
    bool ok = true;
    for (unsigned k = 1; k <= opt.k; ++k) {
      std::size_t s = colnum_ordered(g, ord, k, ReachKind::strong);
      BigInt limit = scol_upper(bound, k);
      observed.push_back(s);
      limits.push_back(limit.get_str());
      if (BigInt(static_cast<unsigned long>(s)) > limit) ok = false;
    }
    std::ostringstream params;
    params << "case " << bound.name() << ", " << (balls ? "balls" : "cubes") << ", n=" << rep.size() << ", t=" << opt.t
           << ", d=" << opt.d << ", k=1.." << opt.k;
    results[i] = {"sizewise scol_k <= bound", params.str(), "scol_k <= " + join(limits), "scol_k = " + join(observed),
                  ok, seed_witness(sample_seed)};
  });
  for (auto& r : results) report.add(std::move(r));
  return report;
}

VerifyReport verify_obs2(const VerifyOptions& opt) {
  VerifyReport report;
  report.suite = "obs2";
  report.seed = opt.seed;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const std::uint64_t sample_seed = derive_seed(opt.seed, i);
    Rng rng(sample_seed);
    const std::size_t n = 1 + uniform_below(rng, opt.n);
    const Graph g = random_graph(n, 1 + uniform_below(rng, 3), 4, rng);
    const Ordering ord = random_ordering(n, rng);
    std::vector<std::size_t> w(opt.k + 1), s(opt.k + 1);
    for (unsigned k = 0; k <= opt.k; ++k) {
      w[k] = colnum_ordered(g, ord, k, ReachKind::weak);
      s[k] = colnum_ordered(g, ord, k, ReachKind::strong);
    }
    bool ok = true;
    std::vector<std::size_t> rhs;
    for (unsigned k = 1; k <= opt.k; ++k) {
      std::size_t sum = 0;
      for (unsigned j = 1; j <= k; ++j) sum += s[j] * w[k - j];
      rhs.push_back(sum);
      if (w[k] > sum) ok = false;
    }
    std::vector<std::size_t> lhs(w.begin() + 1, w.end());
    report.add({"wcol_k <= sum scol_i wcol_{k-i}", "n=" + std::to_string(n) + ", k=1.." + std::to_string(opt.k),
                "<= " + join(rhs), join(lhs), ok, seed_witness(sample_seed)});
  }
  return report;
}

VerifyReport verify_ky(const VerifyOptions& opt) {
  VerifyReport report;
  report.suite = "ky";
  report.seed = opt.seed;
  report.budgets["search nodes"] = opt.search_budget;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const std::uint64_t sample_seed = derive_seed(opt.seed, i);
    Rng rng(sample_seed);
    const std::size_t n = 1 + uniform_below(rng, opt.n);
    const Graph g = random_graph(n, 1 + uniform_below(rng, 3), 4, rng);
    for (unsigned k = 1; k <= opt.k; ++k) {
      ColnumSearch w = wcol_exact(g, k, opt.search_budget);
      ColnumSearch s = scol_exact(g, k, opt.search_budget);
      std::ostringstream params, observed, expected;
      params << "n=" << n << ", m=" << g.edge_count() << ", k=" << k;
      bool ok = w.exact() && s.exact();
      if (ok) {
        BigInt power = pow_int(BigInt(static_cast<unsigned long>(*s.value)), k);
        ok = *s.value <= *w.value && BigInt(static_cast<unsigned long>(*w.value)) <= power;
        observed << "scol=" << *s.value << ", wcol=" << *w.value;
        expected << "scol <= wcol <= scol^k = " << power.get_str();
      } else {
        observed << "search budget exhausted";
        expected << "exact values";
      }
      report.add({"Kierstead-Yang", params.str(), expected.str(), observed.str(), ok, seed_witness(sample_seed)});
    }
  }
  return report;
}

VerifyReport verify_pw(const VerifyOptions& opt) {
  VerifyReport report;
  report.suite = "pw";
  report.seed = opt.seed;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const std::uint64_t sample_seed = derive_seed(opt.seed, i);
    Rng rng(sample_seed);
    const std::size_t n = 1 + uniform_below(rng, opt.n);
    const std::size_t w_gen = uniform_below(rng, opt.w + 1);
    auto [g, ord] = random_bounded_width_graph(n, w_gen, rng);
    const std::size_t w = back_connection_width(g, ord);
    bool ok = w <= w_gen;
    std::vector<std::size_t> sizes;
    std::vector<std::string> limits;
    std::string witness = seed_witness(sample_seed);
    for (unsigned k = 0; k <= opt.k; ++k) {
      auto all = reach_sizes(g, ord, k, ReachKind::decreasing);
      std::size_t worst = all.empty() ? 0 : *std::max_element(all.begin(), all.end());
      BigInt limit = binomial(k + w, w);
      sizes.push_back(worst);
      limits.push_back(limit.get_str());
      if (BigInt(static_cast<unsigned long>(worst)) > limit) {
        ok = false;
        Vertex v = static_cast<Vertex>(std::max_element(all.begin(), all.end()) - all.begin());
        witness += ", vertex " + g.label(v) + " at k=" + std::to_string(k);
      }
    }
    report.add({"|decr_k(v)| <= binom(k+w, w)",
                "n=" + std::to_string(n) + ", w=" + std::to_string(w) + ", k=0.." + std::to_string(opt.k),
                "<= " + join(limits), join(sizes), ok, witness});
  }
  return report;
}

VerifyReport verify_propP(const VerifyOptions& opt) {
  VerifyReport report;
  report.suite = "propP";
  report.seed = opt.seed;
  const std::uint64_t p_max = 2 * std::max(opt.k, 1u) + 2;
  for (unsigned k = 0; k <= opt.k; ++k)
    for (unsigned t = 1; t <= opt.t; ++t) {
      const std::uint64_t m = binomial(k + t, t).get_ui();
      const Representation rep = gen_hprime(k, t, m);
      const Graph g = intersection_graph(rep);
      const RadiusMap r = diameter_radius_map(rep);
      const BoundCase bound = BoundCase::centrally_symmetric(t, rep.dimension);
      PropertyPSpec spec;
      for (const auto& x : property_table_f(bound, p_max)) spec.f.push_back(x.get_ui());
      spec.a = 1;
      spec.e = property_table_e(bound).get_ui();
      PropertyPReport res = check_property_P(g, r, spec);
      std::ostringstream params, observed, witness;
      params << "H'(" << k << "," << t << "), m=" << m << ", f(p)=" << t << "(2p+3)^" << rep.dimension << ", a=1, e="
             << spec.e << ", p<=" << p_max;
      observed << res.violations.size() << " violations, max count " << res.max_count << ", max chain "
               << res.max_chain << "; " << res.coverage();
      if (!res.passed()) {
        const auto& bad = res.violations.front();
        witness << "vertex " << g.label(bad.v) << ", s=" << bad.s.get_str() << ", p=" << bad.p;
      }
      report.add({"property P", params.str(), "0 violations", observed.str(), res.passed(), witness.str()});
    }
  return report;
}

VerifyReport verify_lb(const VerifyOptions& opt) {
  VerifyReport report;
  report.suite = "lb";
  report.seed = opt.seed;
  report.budgets["scaffold vertices"] = scaffold_vertex_budget();
  const LbFamily family = opt.family == "F" ? LbFamily::F : opt.family == "H" ? LbFamily::H
                                                                              : throw Error("family must be F or H");
  const LbInstance inst = build_theorem_lb_instance(family, opt.k, opt.t);
  const Graph& g = inst.scaffold.graph;
  const std::size_t expected = inst.expected_bound.get_ui();
  std::ostringstream base_params;
  base_params << opt.family << ", k=" << opt.k << (family == LbFamily::H ? ", t=" + std::to_string(opt.t) : "")
              << ", m=" << inst.m << ", n=" << g.size() << ", radius " << inst.radius;
  const std::string want = ">= " + std::to_string(expected);

  const std::size_t host_w = colnum_ordered(inst.base_graph, inst.base_order, opt.k, ReachKind::weak);
  report.add({"host sizewise wcol_k = |V|", base_params.str(), std::to_string(inst.base.size()),
              std::to_string(host_w), host_w == inst.base.size(), ""});

  const std::size_t sizewise = colnum_ordered(g, Ordering::identity(g.size()), inst.radius, ReachKind::weak);
  report.add({"scaffold wcol under sizewise order", base_params.str(), want, std::to_string(sizewise),
              sizewise >= expected, "sizewise order"});

  std::vector<CheckResult> results(opt.samples);
  parallel_for(opt.samples, opt.threads, [&](std::size_t i) {
    const std::uint64_t sample_seed = derive_seed(opt.seed, i);
    Rng rng(sample_seed);
    const Ordering ord = random_ordering(g.size(), rng);
    const std::size_t value = colnum_ordered(g, ord, inst.radius, ReachKind::weak);
    results[i] = {"scaffold wcol under random order", base_params.str() + ", sample " + std::to_string(i), want,
                  std::to_string(value), value >= expected, seed_witness(sample_seed)};
  });
  for (auto& r : results) report.add(std::move(r));
  return report;
}

VerifyReport run_verify_suite(const std::string& suite, const VerifyOptions& opt) {
  if (suite == "lemma1") return verify_lemma1(opt);
  if (suite == "obs2") return verify_obs2(opt);
  if (suite == "ky") return verify_ky(opt);
  if (suite == "pw") return verify_pw(opt);
  if (suite == "propP") return verify_propP(opt);
  if (suite == "lb") return verify_lb(opt);
  throw Error("unknown verify suite '" + suite + "' (lemma1, obs2, ky, pw, propP, lb)");
}

}  // namespace wcol
