#include "wcol/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "wcol/rng.hpp"

namespace wcol {

Box::Box(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.empty()) throw Error("box must have dimension >= 1");
  if (lo_.size() != hi_.size()) throw Error("box corners have different dimensions");
  for (std::size_t i = 0; i < lo_.size(); ++i)
    if (!(lo_[i] < hi_[i]))
      throw Error("box has empty interior on axis " + std::to_string(i) + ": [" + format_rational(lo_[i]) + ", " +
                  format_rational(hi_[i]) + "]");
}

Ball::Ball(Point center, Rational radius) : center_(std::move(center)), radius_(std::move(radius)) {
  if (center_.empty()) throw Error("ball must have dimension >= 1");
  if (!(radius_ > 0)) throw Error("ball radius must be positive");
}

std::size_t dimension(const GeoObject& o) {
  return std::visit([](const auto& x) { return x.dimension(); }, o);
}

const Box& as_box(const GeoObject& o) {
  if (const Box* b = std::get_if<Box>(&o)) return *b;
  throw Error("operation requires a box, got a ball");
}

namespace {

void require_same_dimension(const GeoObject& a, const GeoObject& b) {
  if (dimension(a) != dimension(b))
    throw Error("dimension mismatch: " + std::to_string(dimension(a)) + " vs " + std::to_string(dimension(b)));
}

Rational sq_dist_center_to_box(const Ball& ball, const Box& box) {
  Rational total = 0;
  for (std::size_t i = 0; i < box.dimension(); ++i) {
    const Rational& c = ball.center()[i];
    if (c < box.lo(i)) {
      Rational g = box.lo(i) - c;
      total += g * g;
    } else if (c > box.hi(i)) {
      Rational g = c - box.hi(i);
      total += g * g;
    }
  }
  return total;
}

Rational sq_dist(const Point& a, const Point& b) {
  Rational total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational g = a[i] - b[i];
    total += g * g;
  }
  return total;
}

struct IntersectVisitor {
  bool open;

  bool operator()(const Box& a, const Box& b) const {
    for (std::size_t i = 0; i < a.dimension(); ++i) {
      if (open) {
        if (!(a.lo(i) < b.hi(i) && b.lo(i) < a.hi(i))) return false;
      } else {
        if (!(a.lo(i) <= b.hi(i) && b.lo(i) <= a.hi(i))) return false;
      }
    }
    return true;
  }
  bool operator()(const Ball& a, const Ball& b) const {
    Rational reach = a.radius() + b.radius();
    Rational d2 = sq_dist(a.center(), b.center());
    return open ? d2 < reach * reach : d2 <= reach * reach;
  }
  // An open ball meets an open box with nonempty interior iff the center is
  // at distance < r from the closed box.
  bool operator()(const Box& a, const Ball& b) const {
    Rational d2 = sq_dist_center_to_box(b, a);
    Rational r2 = b.radius() * b.radius();
    return open ? d2 < r2 : d2 <= r2;
  }
  bool operator()(const Ball& a, const Box& b) const { return (*this)(b, a); }
};

}  // namespace

bool intersects(const GeoObject& a, const GeoObject& b) {
  require_same_dimension(a, b);
  return std::visit(IntersectVisitor{false}, a, b);
}

bool interiors_overlap(const GeoObject& a, const GeoObject& b) {
  require_same_dimension(a, b);
  return std::visit(IntersectVisitor{true}, a, b);
}

bool interior_contains(const GeoObject& o, const Point& p) {
  if (p.size() != dimension(o)) throw Error("point dimension mismatch");
  if (const Box* box = std::get_if<Box>(&o)) {
    for (std::size_t i = 0; i < p.size(); ++i)
      if (!(box->lo(i) < p[i] && p[i] < box->hi(i))) return false;
    return true;
  }
  const Ball& ball = std::get<Ball>(o);
  return sq_dist(ball.center(), p) < ball.radius() * ball.radius();
}

Rational diam_sq(const GeoObject& o) {
  if (const Box* box = std::get_if<Box>(&o)) {
    Rational total = 0;
    for (std::size_t i = 0; i < box->dimension(); ++i) {
      Rational len = box->length(i);
      total += len * len;
    }
    return total;
  }
  Rational twice = 2 * std::get<Ball>(o).radius();
  return twice * twice;
}

Rational side_length(const GeoObject& o, std::size_t axis) {
  const Box& box = as_box(o);
  if (axis >= box.dimension())
    throw Error("axis " + std::to_string(axis) + " out of range for dimension " + std::to_string(box.dimension()));
  return box.length(axis);
}

GeoObject inflate(const GeoObject& o, unsigned long m) {
  const Rational factor = 2 * m + 1;
  if (const Box* box = std::get_if<Box>(&o)) {
    Point lo(box->dimension()), hi(box->dimension());
    for (std::size_t i = 0; i < box->dimension(); ++i) {
      Rational mid = (box->lo(i) + box->hi(i)) / 2;
      Rational half = box->length(i) / 2 * factor;
      lo[i] = mid - half;
      hi[i] = mid + half;
    }
    return Box(std::move(lo), std::move(hi));
  }
  const Ball& ball = std::get<Ball>(o);
  return Ball(ball.center(), ball.radius() * factor);
}

Point center(const GeoObject& o) {
  if (const Box* box = std::get_if<Box>(&o)) {
    Point c(box->dimension());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (box->lo(i) + box->hi(i)) / 2;
    return c;
  }
  return std::get<Ball>(o).center();
}

bool is_hypercube(const GeoObject& o) {
  const Box* box = std::get_if<Box>(&o);
  if (!box) return false;
  Rational first = box->length(0);
  for (std::size_t i = 1; i < box->dimension(); ++i)
    if (box->length(i) != first) return false;
  return true;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = "v" + std::to_string(i);
  return out;
}

Representation::Representation(std::vector<GeoObject> objs, std::vector<std::string> names,
                               std::optional<std::uint64_t> thin)
    : objects(std::move(objs)), labels(std::move(names)), declared_thinness(thin) {
  dimension = objects.empty() ? 0 : wcol::dimension(objects.front());
  if (labels.empty()) labels = default_labels(objects.size());
  validate();
}

bool Representation::all_boxes() const {
  return std::all_of(objects.begin(), objects.end(), [](const GeoObject& o) { return is_box(o); });
}

void Representation::validate() const {
  if (objects.size() != labels.size())
    throw Error("representation has " + std::to_string(objects.size()) + " objects but " +
                std::to_string(labels.size()) + " labels");
  for (const auto& o : objects)
    if (wcol::dimension(o) != dimension) throw Error("representation objects have mixed dimensions");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw Error("duplicate label '" + l + "'");
  if (declared_thinness && *declared_thinness == 0) throw Error("declared thinness must be positive");
}

std::uint64_t default_cell_budget() { return 100'000'000ULL; }

namespace {

void require_boxes(const Representation& rep, const char* what) {
  if (!rep.all_boxes()) throw Error(std::string(what) + " requires a representation made of boxes");
}

// Max depth of open interiors among `ids`, restricted to axes >= axis.
std::uint64_t max_depth(const std::vector<const Box*>& boxes, const std::vector<std::size_t>& ids, std::size_t axis) {
  if (ids.empty()) return 0;
  const std::size_t d = boxes.front()->dimension();
  if (axis + 1 == d) {
    // Sweep; at equal coordinates closings go first since interiors are open.
    std::vector<std::pair<const Rational*, int>> events;
    events.reserve(2 * ids.size());
    for (std::size_t id : ids) {
      events.emplace_back(&boxes[id]->lo(axis), +1);
      events.emplace_back(&boxes[id]->hi(axis), -1);
    }
    std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
      int c = cmp(*a.first, *b.first);
      return c != 0 ? c < 0 : a.second < b.second;
    });
    std::int64_t cur = 0, best = 0;
    for (const auto& e : events) {
      cur += e.second;
      best = std::max(best, cur);
    }
    return static_cast<std::uint64_t>(best);
  }
  std::vector<Rational> coords;
  coords.reserve(2 * ids.size());
  for (std::size_t id : ids) {
    coords.push_back(boxes[id]->lo(axis));
    coords.push_back(boxes[id]->hi(axis));
  }
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  std::uint64_t best = 0;
  std::vector<std::size_t> slab;
  for (std::size_t c = 0; c + 1 < coords.size(); ++c) {
    slab.clear();
    for (std::size_t id : ids)
      if (boxes[id]->lo(axis) <= coords[c] && coords[c + 1] <= boxes[id]->hi(axis)) slab.push_back(id);
    if (slab.size() <= best) continue;
    best = std::max(best, max_depth(boxes, slab, axis + 1));
  }
  return best;
}

}  // namespace

std::uint64_t thinness(const Representation& rep, std::uint64_t cell_budget) {
  if (!rep.all_boxes())
    throw Error("exact thinness is only supported for boxes; use the sampled lower bound for balls");
  if (rep.objects.empty()) return 0;
  double cells = 1;
  for (std::size_t axis = 0; axis < rep.dimension; ++axis) {
    std::set<Rational> coords;
    for (const auto& o : rep.objects) {
      coords.insert(std::get<Box>(o).lo(axis));
      coords.insert(std::get<Box>(o).hi(axis));
    }
    cells *= static_cast<double>(coords.size() - 1);
  }
  if (cells > static_cast<double>(cell_budget))
    throw BudgetError("thinness arrangement has " + std::to_string(static_cast<long double>(cells)) +
                          " cells, over the budget of " + std::to_string(cell_budget) +
                          "; verify thinness structurally instead",
                      cells, static_cast<double>(cell_budget));
  std::vector<const Box*> boxes;
  for (const auto& o : rep.objects) boxes.push_back(&std::get<Box>(o));
  std::vector<std::size_t> ids(boxes.size());
  std::iota(ids.begin(), ids.end(), 0);
  return max_depth(boxes, ids, 0);
}

std::uint64_t thinness_sampled(const Representation& rep, std::size_t samples, std::uint64_t seed) {
  if (rep.objects.empty()) return 0;
  constexpr std::uint64_t kResolution = 1ULL << 20;
  Rng rng(seed);
  std::uint64_t best = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    // Sample inside a random object's bounding box; deep points lie inside objects.
    const GeoObject& host = rep.objects[uniform_below(rng, rep.objects.size())];
    Point lo, hi;
    if (const Box* b = std::get_if<Box>(&host)) {
      lo = b->lo();
      hi = b->hi();
    } else {
      const Ball& ball = std::get<Ball>(host);
      for (const auto& c : ball.center()) {
        lo.push_back(c - ball.radius());
        hi.push_back(c + ball.radius());
      }
    }
    Point p(rep.dimension);
    for (std::size_t i = 0; i < rep.dimension; ++i) {
      Rational frac(static_cast<unsigned long>(1 + uniform_below(rng, kResolution - 1)),
                    static_cast<unsigned long>(kResolution));
      frac.canonicalize();
      p[i] = lo[i] + (hi[i] - lo[i]) * frac;
    }
    std::uint64_t depth = 0;
    for (const auto& o : rep.objects)
      if (interior_contains(o, p)) ++depth;
    best = std::max(best, depth);
  }
  return best;
}

bool is_m_shrinking(const Representation& rep, const BigInt& m) {
  require_boxes(rep, "is_m_shrinking");
  const std::size_t last = rep.dimension - 1;
  for (std::size_t i = 0; i + 1 < rep.objects.size(); ++i) {
    Rational a = side_length(rep.objects[i], last);
    Rational b = side_length(rep.objects[i + 1], last);
    if (!(a > Rational(m) * b)) return false;
  }
  return true;
}

std::optional<BigInt> max_shrinking_factor(const Representation& rep) {
  require_boxes(rep, "max_shrinking_factor");
  if (rep.objects.size() < 2) return std::nullopt;
  const std::size_t last = rep.dimension - 1;
  std::optional<BigInt> best;
  for (std::size_t i = 0; i + 1 < rep.objects.size(); ++i) {
    Rational ratio = side_length(rep.objects[i], last) / side_length(rep.objects[i + 1], last);
    // Largest integer m with ratio > m.
    BigInt m = ceil_rat(ratio) - 1;
    if (!best || m < *best) best = m;
  }
  return best;
}

bool is_comparable_boxes(const Representation& rep) {
  require_boxes(rep, "is_comparable_boxes");
  const std::size_t n = rep.objects.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Box& a = std::get<Box>(rep.objects[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Box& b = std::get<Box>(rep.objects[j]);
      bool a_fits = true, b_fits = true;
      for (std::size_t axis = 0; axis < rep.dimension; ++axis) {
        Rational la = a.length(axis), lb = b.length(axis);
        if (la > lb) a_fits = false;
        if (lb > la) b_fits = false;
      }
      if (!a_fits && !b_fits) return false;
    }
  }
  return true;
}

}  // namespace wcol
