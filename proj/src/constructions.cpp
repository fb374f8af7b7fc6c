#include "wcol/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace wcol {

namespace {

std::optional<std::uint64_t> env_budget() {
  const char* raw = std::getenv("WCOL_BUDGET");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw Error(std::string("WCOL_BUDGET must be a positive integer, got '") + raw + "'");
  return v;
}

Rational big_rat(std::uint64_t x) { return Rational(static_cast<unsigned long>(x)); }

// Rectangles as (vertical, horizontal) boxes, with the index of the unit square s.
struct Rects {
  std::vector<Box> boxes;
  std::size_t smallest = 0;
};

Box map_rect(const Box& b, const Rational& h_scale, const Rational& v_shift, const Rational& h_shift) {
  return Box({b.lo(0) + v_shift, b.lo(1) * h_scale + h_shift}, {b.hi(0) + v_shift, b.hi(1) * h_scale + h_shift});
}

Box unit_square() { return Box({Rational(0), Rational(0)}, {Rational(1), Rational(1)}); }

Rects fprime_rects(unsigned k, std::uint64_t m) {
  if (k == 0) return Rects{{unit_square()}, 0};
  const Rects prev = fprime_rects(k - 1, m);
  const Rational stretch = big_rat(m + 1);
  Rects out;
  out.boxes.push_back(unit_square());
  out.smallest = 0;

  // Copy A: stretched by m+1, upper right corner of its s' at the middle of the lower side of s.
  // s' is [0,1] x [0,1] in prev, so its upper right corner maps to (1, m+1).
  for (const Box& b : prev.boxes) out.boxes.push_back(map_rect(b, stretch, Rational(-1), Rational(1, 2) - stretch));
  Rational longest = 0;
  for (const Box& b : out.boxes) longest = std::max(longest, b.length(1));

  // Copy B: upper right corner of its s' at the upper left corner of s.
  for (Rational scale = stretch;; scale *= stretch) {
    if (!(scale > big_rat(m) * longest)) continue;
    std::vector<Box> placed;
    for (const Box& b : prev.boxes) placed.push_back(map_rect(b, scale, Rational(0), -scale));
    bool disjoint = true;
    for (const Box& nb : placed) {
      for (const Box& ob : out.boxes)
        if (interiors_overlap(nb, ob)) {
          disjoint = false;
          break;
        }
      if (!disjoint) break;
    }
    if (!disjoint) continue;
    out.boxes.insert(out.boxes.end(), placed.begin(), placed.end());
    return out;
  }
}

std::vector<std::size_t> by_decreasing_last_axis(const std::vector<Box>& boxes) {
  std::vector<std::size_t> idx(boxes.size());
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t last = boxes.empty() ? 0 : boxes.front().dimension() - 1;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return boxes[a].length(last) > boxes[b].length(last); });
  for (std::size_t i = 0; i + 1 < idx.size(); ++i)
    if (boxes[idx[i]].length(last) == boxes[idx[i + 1]].length(last))
      throw Error("generated family has equal sizes; the shrinking factor must be positive");
  return idx;
}

// Intervals with the smallest equal to [0,1] and 1 the strict maximum.
std::vector<Box> hprime_intervals(unsigned k, unsigned t, std::uint64_t m) {
  auto interval = [](Rational lo, Rational hi) { return Box({std::move(lo)}, {std::move(hi)}); };
  if (k == 0) return {interval(0, 1)};
  const Rational stretch = big_rat(m + 1);
  if (t == 1) {
    // Path of k+1 intervals touching at endpoints, lengths (m+1)^j growing leftward.
    std::vector<Box> out{interval(0, 1)};
    Rational right = 0, len = 1;
    for (unsigned j = 1; j <= k; ++j) {
      len *= stretch;
      out.push_back(interval(right - len, right));
      right -= len;
    }
    return out;
  }
  std::vector<Box> a = hprime_intervals(k, t - 1, m);
  const std::vector<Box> b = hprime_intervals(k - 1, t, m);
  Rational a_left = a.front().lo(0), longest = 0;
  for (const Box& x : a) {
    a_left = std::min(a_left, x.lo(0));
    longest = std::max(longest, x.length(0));
  }
  // B ends half the smallest interval of A (the unit [0,1]) short of A's right end.
  const Rational target_right(1, 2);
  // Rightmost endpoint of B other than its smallest interval [0,1].
  std::optional<Rational> b_inner_right;
  for (std::size_t i = 1; i < b.size(); ++i)
    if (!b_inner_right || b[i].hi(0) > *b_inner_right) b_inner_right = b[i].hi(0);
  for (Rational scale = stretch;; scale *= stretch) {
    if (!(scale > big_rat(m) * longest)) continue;
    const Rational shift = target_right - scale;
    // A is connected, so missing its hull means missing every interval of A.
    if (b_inner_right && !(*b_inner_right * scale + shift < a_left)) continue;
    for (const Box& x : b) a.push_back(interval(x.lo(0) * scale + shift, x.hi(0) * scale + shift));
    return a;
  }
}

Representation sorted_family(const std::vector<Box>& boxes, std::uint64_t thin) {
  std::vector<GeoObject> objs;
  for (std::size_t i : by_decreasing_last_axis(boxes)) objs.emplace_back(boxes[i]);
  return Representation(std::move(objs), {}, thin);
}

std::string word_label(const std::string& host, const std::vector<std::uint32_t>& word) {
  std::string out = host + "/";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(word[i]);
  }
  return out;
}

struct TreeShape {
  std::vector<std::uint64_t> offset;  // first vertex id of each level
  std::vector<std::uint64_t> width;   // m^level
  std::uint64_t total = 0;
};

TreeShape tree_shape(std::size_t n, std::uint64_t m, std::uint64_t budget) {
  BigInt size = scaffold_size(n, m);
  if (size > BigInt(static_cast<unsigned long>(budget)))
    throw BudgetError("scaffold would have " + size.get_str() + " vertices, over the budget of " +
                          std::to_string(budget),
                      size.get_d(), static_cast<double>(budget));
  TreeShape shape;
  std::uint64_t width = 1;
  for (std::size_t i = 0; i < n; ++i) {
    shape.offset.push_back(shape.total);
    shape.width.push_back(width);
    shape.total += width;
    if (i + 1 < n) width *= m;
  }
  return shape;
}

std::vector<std::uint32_t> word_of(std::uint64_t idx, std::size_t level, std::uint64_t m) {
  std::vector<std::uint32_t> word(level);
  for (std::size_t q = level; q-- > 0;) {
    word[q] = static_cast<std::uint32_t>(idx % m);
    idx /= m;
  }
  return word;
}

}  // namespace

std::uint64_t scaffold_vertex_budget() { return env_budget().value_or(200'000); }
std::uint64_t scaffold_box_budget() { return env_budget().value_or(10'000); }

Representation gen_fprime(unsigned k, std::uint64_t m) {
  if (m == 0) throw Error("m must be positive");
  return sorted_family(fprime_rects(k, m).boxes, 1);
}

Representation gen_hprime(unsigned k, unsigned t, std::uint64_t m) {
  if (m == 0) throw Error("m must be positive");
  if (t == 0) throw Error("t must be positive");
  return sorted_family(hprime_intervals(k, t, m), t);
}

BigInt scaffold_size(std::size_t n, std::uint64_t m) {
  if (m == 0) throw Error("m must be positive");
  if (n == 0) return 0;
  if (m == 1) return BigInt(static_cast<unsigned long>(n));
  BigInt mm(static_cast<unsigned long>(m));
  return (pow_int(mm, n) - 1) / (mm - 1);
}

ScaffoldResult scaffold_graph(const Graph& host, const Ordering& ord, std::uint64_t m, std::uint64_t vertex_budget) {
  if (host.size() != ord.size()) throw Error("ordering does not match the host graph");
  const std::size_t n = host.size();
  const TreeShape shape = tree_shape(n, m, vertex_budget);
  ScaffoldResult out;
  out.parent.resize(shape.total);
  out.level.resize(shape.total);
  out.word.resize(shape.total);
  out.host = ord.sequence();
  std::vector<std::string> labels(shape.total);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> linked;
    for (std::size_t j = 0; j < i; ++j)
      if (host.has_edge(ord.at(i), ord.at(j))) linked.push_back(j);
    for (std::uint64_t idx = 0; idx < shape.width[i]; ++idx) {
      const std::uint64_t id = shape.offset[i] + idx;
      out.level[id] = static_cast<std::uint32_t>(i);
      out.parent[id] = i == 0 ? -1 : static_cast<std::int64_t>(shape.offset[i - 1] + idx / m);
      out.word[id] = word_of(idx, i, m);
      labels[id] = word_label(host.label(ord.at(i)), out.word[id]);
      std::uint64_t up = idx;
      // Ancestor at level j has index idx / m^(i-j).
      std::vector<std::uint64_t> ancestors(i);
      for (std::size_t j = i; j-- > 0;) {
        up /= m;
        ancestors[j] = up;
      }
      for (std::size_t j : linked)
        edges.emplace_back(static_cast<Vertex>(shape.offset[j] + ancestors[j]), static_cast<Vertex>(id));
    }
  }
  out.graph = Graph(shape.total, edges, std::move(labels));
  return out;
}

Representation scaffold_boxes(const Representation& rep, std::uint64_t m, std::uint64_t vertex_budget) {
  if (!rep.all_boxes()) throw Error("scaffold_boxes requires boxes");
  const std::size_t n = rep.size();
  const std::size_t d = rep.dimension;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Representation pair({rep.objects[i], rep.objects[j]}, {rep.labels[i], rep.labels[j]});
      if (!is_comparable_boxes(pair))
        throw Error("boxes '" + rep.labels[i] + "' and '" + rep.labels[j] + "' are not comparable");
    }
  const Ordering ord = sizewise_order(rep);
  std::vector<Rational> len(n);
  for (std::size_t p = 0; p < n; ++p) len[p] = side_length(rep.objects[ord.at(p)], d - 1);
  const Rational mm = big_rat(m);
  for (std::size_t p = 0; p + 1 < n; ++p)
    if (!(len[p] > mm * len[p + 1]))
      throw Error("sizewise sequence is not " + std::to_string(m) + "-shrinking at '" + rep.labels[ord.at(p)] +
                  "', '" + rep.labels[ord.at(p + 1)] + "'");
  Rational eps = 1;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    Rational slack = len[p] / mm - len[p + 1];
    if (p == 0 || slack < eps) eps = slack;
  }
  eps /= 2;

  const TreeShape shape = tree_shape(n, m, vertex_budget);
  std::vector<GeoObject> objs;
  std::vector<std::string> labels;
  objs.reserve(shape.total);
  labels.reserve(shape.total);
  for (std::size_t i = 0; i < n; ++i) {
    const Box& host = std::get<Box>(rep.objects[ord.at(i)]);
    for (std::uint64_t idx = 0; idx < shape.width[i]; ++idx) {
      auto word = word_of(idx, i, m);
      Rational start = 0;
      for (std::size_t q = 0; q < i; ++q) start += big_rat(word[q]) * (len[q + 1] + eps);
      Point lo = host.lo(), hi = host.hi();
      lo.push_back(start);
      hi.push_back(start + len[i]);
      objs.emplace_back(Box(std::move(lo), std::move(hi)));
      labels.push_back(word_label(rep.labels[ord.at(i)], word));
    }
  }
  return Representation(std::move(objs), std::move(labels), rep.declared_thinness);
}

Representation lift_dimension(const Representation& rep, const std::vector<bool>& in_y) {
  if (in_y.size() != rep.size()) throw Error("membership vector does not match the representation");
  std::vector<GeoObject> objs;
  objs.reserve(rep.size());
  for (std::size_t i = 0; i < rep.size(); ++i) {
    if (!is_hypercube(rep.objects[i])) throw Error("object '" + rep.labels[i] + "' is not a hypercube");
    const Box& b = std::get<Box>(rep.objects[i]);
    Rational side = b.length(0);
    Point lo = b.lo(), hi = b.hi();
    lo.push_back(in_y[i] ? Rational(0) : Rational(-side));
    hi.push_back(in_y[i] ? side : Rational(0));
    objs.emplace_back(Box(std::move(lo), std::move(hi)));
  }
  return Representation(std::move(objs), rep.labels, rep.declared_thinness);
}

Representation touching_lift(const Representation& rep, const Coloring& colors, unsigned bits) {
  if (colors.size() != rep.size()) throw Error("colouring does not match the representation");
  if (bits < 32)
    for (std::size_t i = 0; i < colors.size(); ++i)
      if (colors[i] >> bits)
        throw Error("colour of '" + rep.labels[i] + "' does not fit in " + std::to_string(bits) + " bits");
  const Graph g = intersection_graph(rep);
  if (auto bad = monochromatic_edge(g, colors))
    throw Error("colouring is not proper: '" + rep.labels[bad->first] + "' and '" + rep.labels[bad->second] +
                "' share colour " + std::to_string(colors[bad->first]));
  Representation cur = rep;
  for (unsigned b = 0; b < bits; ++b) {
    std::vector<bool> in_y(rep.size());
    for (std::size_t i = 0; i < rep.size(); ++i) in_y[i] = ((colors[i] >> b) & 1u) == 0;
    cur = lift_dimension(cur, in_y);
  }
  cur.declared_thinness = 1;
  return cur;
}

LbInstance build_theorem_lb_instance(LbFamily family, unsigned k, unsigned t, std::optional<unsigned> lift_bits) {
  LbInstance inst;
  inst.family = family;
  inst.k = k;
  inst.radius = 2 * k;
  if (family == LbFamily::F) {
    if (lift_bits) throw Error("the colour lift applies to family H only");
    inst.t = 1;
    inst.m = (std::uint64_t{1} << (k + 1)) - 1;
    inst.base = gen_fprime(k, inst.m);
    inst.expected_bound = pow_int(2, k + 1) - 1;
  } else {
    if (t == 0) throw Error("t must be positive");
    inst.t = t;
    BigInt m = binomial(k + t, t);
    if (!m.fits_ulong_p()) throw Error("m = binom(k+t, t) is too large");
    inst.m = m.get_ui();
    inst.base = gen_hprime(k, t, inst.m);
    inst.expected_bound = m;
  }
  inst.base_graph = intersection_graph(inst.base);
  inst.base_order = sizewise_order(inst.base);
  inst.scaffold = scaffold_graph(inst.base_graph, inst.base_order, inst.m);
  if (scaffold_size(inst.base.size(), inst.m) <= BigInt(static_cast<unsigned long>(scaffold_box_budget())))
    inst.boxes = scaffold_boxes(inst.base, inst.m);
  if (lift_bits) {
    Coloring host_colors = greedy_interval_coloring(inst.base);
    if (color_count(host_colors) > (std::size_t{1} << *lift_bits))
      throw Error("interval colouring uses " + std::to_string(color_count(host_colors)) + " colours, more than 2^" +
                  std::to_string(*lift_bits));
    inst.scaffold_coloring.resize(inst.scaffold.graph.size());
    for (std::size_t y = 0; y < inst.scaffold_coloring.size(); ++y)
      inst.scaffold_coloring[y] = host_colors[inst.scaffold.host[inst.scaffold.level[y]]];
    if (!inst.boxes) throw Error("scaffold exceeds the box budget; cannot build the touching lift");
    inst.touching = touching_lift(*inst.boxes, inst.scaffold_coloring, *lift_bits);
  }
  return inst;
}

}  // namespace wcol
