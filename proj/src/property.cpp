#include "wcol/property.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace wcol {

RadiusMap::RadiusMap(std::vector<Rational> values) : values_(std::move(values)) {
  for (const auto& x : values_)
    if (!(x > 0)) throw Error("radius values must be positive");
}

RadiusMap RadiusMap::constant(std::size_t n, const Rational& value) {
  return RadiusMap(std::vector<Rational>(n, value));
}

RadiusMap diameter_radius_map(const Representation& rep) {
  std::vector<Rational> exact;
  bool all_exact = true;
  for (const auto& o : rep.objects) {
    Rational root;
    if (exact_sqrt(diam_sq(o), root)) {
      exact.push_back(root);
    } else {
      all_exact = false;
      break;
    }
  }
  if (all_exact) return RadiusMap(std::move(exact));
  std::vector<Rational> sides;
  for (const auto& o : rep.objects) {
    if (!is_hypercube(o))
      throw Error("diameter is irrational and the family is not all hypercubes; supply a radius map");
    sides.push_back(side_length(o, 0));
  }
  return RadiusMap(std::move(sides));
}

std::vector<std::optional<Rational>> lambda_from(const Graph& g, const RadiusMap& r, Vertex v) {
  const std::size_t n = g.size();
  if (r.size() != n) throw Error("radius map size does not match the graph");
  // best[x]: cheapest internal-vertex total on a path v..x, excluding both ends.
  // A path leaving x through x != v additionally pays r(x).
  std::vector<std::optional<Rational>> best(n);
  std::vector<bool> done(n, false);
  using Item = std::pair<Rational, Vertex>;
  auto later = [](const Item& a, const Item& b) {
    int c = cmp(a.first, b.first);
    return c != 0 ? c > 0 : a.second > b.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(later)> queue(later);
  best[v] = Rational(0);
  queue.emplace(Rational(0), v);
  while (!queue.empty()) {
    auto [leave_cost, x] = queue.top();
    queue.pop();
    if (done[x]) continue;
    done[x] = true;
    for (Vertex y : g.neighbors(x)) {
      if (done[y]) continue;
      if (!best[y] || leave_cost < *best[y]) {
        best[y] = leave_cost;
        queue.emplace(leave_cost + r[y], y);
      }
    }
  }
  return best;
}

std::optional<Rational> lambda_r(const Graph& g, const RadiusMap& r, Vertex u, Vertex v) {
  if (u == v) throw Error("lambda_r is undefined for u == v");
  if (u >= g.size() || v >= g.size()) throw Error("vertex out of range");
  return lambda_from(g, r, u)[v];
}

std::string PropertyPReport::coverage() const {
  std::ostringstream out;
  out << (complete_s_coverage ? "all integers s >= 1 (critical values)" : "caller-supplied s values") << ", "
      << evaluations << " evaluations";
  return out.str();
}

namespace {

struct Candidate {
  Vertex u;
  Rational lambda;
  Rational radius;
};

// Entry points s = max(1, ceil(lambda / (scale * r(v)))) for every candidate.
std::set<BigInt> critical_s(const std::vector<Candidate>& cands, const Rational& rv, std::uint64_t scale) {
  std::set<BigInt> out{BigInt(1)};
  if (scale == 0) return out;
  for (const auto& c : cands) {
    BigInt s = ceil_rat(c.lambda / (rv * Rational(static_cast<unsigned long>(scale))));
    // A vertex enters after its radius no longer qualifies: skip.
    if (s > 1 && Rational(s) * rv <= c.radius) out.insert(s);
  }
  return out;
}

}  // namespace

PropertyPReport check_property_P(const Graph& g, const RadiusMap& r, const PropertyPSpec& spec,
                                 const std::vector<std::uint64_t>& s_values) {
  if (spec.f.empty()) throw Error("property table f must define f(0)");
  if (spec.a == 0 || spec.e == 0) throw Error("property parameters a and e must be positive");
  for (std::uint64_t s : s_values)
    if (s == 0) throw Error("s values must be positive");
  const std::size_t n = g.size();
  const std::uint64_t p_max = spec.f.size() - 1;
  PropertyPReport report;
  report.complete_s_coverage = s_values.empty();

  auto s_set_for = [&](const std::vector<Candidate>& cands, const Rational& rv, std::uint64_t scale) {
    if (!s_values.empty()) return std::set<BigInt>(s_values.begin(), s_values.end());
    return critical_s(cands, rv, scale);
  };

  for (Vertex v = 0; v < n; ++v) {
    const Rational& rv = r[v];
    std::vector<Candidate> cands;
    auto lam = lambda_from(g, r, v);
    for (Vertex u = 0; u < n; ++u)
      if (lam[u]) cands.push_back({u, *lam[u], r[u]});

    // (i): at most f(p) vertices with r(u) >= s r(v) and lambda <= p s r(v).
    for (std::uint64_t p = 0; p <= p_max; ++p) {
      for (const BigInt& s : s_set_for(cands, rv, p)) {
        ++report.evaluations;
        Rational size_floor = Rational(s) * rv;
        Rational lambda_cap = size_floor * Rational(static_cast<unsigned long>(p));
        std::vector<Vertex> hits;
        for (const auto& c : cands)
          if (c.radius >= size_floor && c.lambda <= lambda_cap) hits.push_back(c.u);
        report.max_count = std::max<std::uint64_t>(report.max_count, hits.size());
        if (hits.size() > spec.f[p])
          report.violations.push_back({PropertyPViolation::Condition::count, v, s, p, hits.size(), spec.f[p], hits});
      }
    }

    // (ii): chains u_1, u_2, ... with lambda <= s r(v) and r(u_i) >= a^i s r(v).
    for (const BigInt& s : s_set_for(cands, rv, 1)) {
      ++report.evaluations;
      Rational base = Rational(s) * rv;
      std::vector<const Candidate*> pool;
      for (const auto& c : cands)
        if (c.lambda <= base) pool.push_back(&c);
      std::sort(pool.begin(), pool.end(), [](const Candidate* a, const Candidate* b) {
        int c = cmp(a->radius, b->radius);
        return c != 0 ? c < 0 : a->u < b->u;
      });
      // Smallest feasible radius for each successive threshold is optimal.
      std::vector<Vertex> chain;
      Rational threshold = base * Rational(static_cast<unsigned long>(spec.a));
      for (const Candidate* c : pool)
        if (c->radius >= threshold) {
          chain.push_back(c->u);
          threshold *= Rational(static_cast<unsigned long>(spec.a));
        }
      report.max_chain = std::max<std::uint64_t>(report.max_chain, chain.size());
      if (chain.size() > spec.e)
        report.violations.push_back({PropertyPViolation::Condition::chain, v, s, 0, chain.size(), spec.e, chain});
    }
  }
  return report;
}

}  // namespace wcol
