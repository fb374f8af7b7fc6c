#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wcol/rational.hpp"

namespace wcol {

using Point = std::vector<Rational>;

/// Closed axis-aligned box [lo_0, hi_0] x ... x [lo_{d-1}, hi_{d-1}] with lo_i < hi_i.
class Box {
 public:
  Box(Point lo, Point hi);

  std::size_t dimension() const noexcept { return lo_.size(); }
  const Point& lo() const noexcept { return lo_; }
  const Point& hi() const noexcept { return hi_; }
  const Rational& lo(std::size_t axis) const { return lo_.at(axis); }
  const Rational& hi(std::size_t axis) const { return hi_.at(axis); }
  Rational length(std::size_t axis) const { return hi_.at(axis) - lo_.at(axis); }

  friend bool operator==(const Box&, const Box&) = default;

 private:
  Point lo_;
  Point hi_;
};

/// Closed Euclidean ball with positive radius.
class Ball {
 public:
  Ball(Point center, Rational radius);

  std::size_t dimension() const noexcept { return center_.size(); }
  const Point& center() const noexcept { return center_; }
  const Rational& radius() const noexcept { return radius_; }

  friend bool operator==(const Ball&, const Ball&) = default;

 private:
  Point center_;
  Rational radius_;
};

using GeoObject = std::variant<Box, Ball>;

std::size_t dimension(const GeoObject& o);
inline bool is_box(const GeoObject& o) { return std::holds_alternative<Box>(o); }
inline bool is_ball(const GeoObject& o) { return std::holds_alternative<Ball>(o); }
/// Throws if `o` is not a box.
const Box& as_box(const GeoObject& o);

/// Closed sets meet. Throws on dimension mismatch.
bool intersects(const GeoObject& a, const GeoObject& b);
/// Open interiors meet. Throws on dimension mismatch.
bool interiors_overlap(const GeoObject& a, const GeoObject& b);
/// True iff `p` lies in the open interior of `o`.
bool interior_contains(const GeoObject& o, const Point& p);

/// Squared diameter; exact for both boxes and balls.
Rational diam_sq(const GeoObject& o);
/// Length along `axis` (0-based). Boxes only.
Rational side_length(const GeoObject& o, std::size_t axis);
/// Scales `o` by 2m+1 about its center.
GeoObject inflate(const GeoObject& o, unsigned long m);
Point center(const GeoObject& o);
/// Box with all side lengths equal.
bool is_hypercube(const GeoObject& o);

/// Ordered family of objects of one dimension with distinct vertex labels.
struct Representation {
  std::size_t dimension = 0;
  std::vector<GeoObject> objects;
  std::vector<std::string> labels;
  std::optional<std::uint64_t> declared_thinness;

  Representation() = default;
  /// Empty `labels` get the default names v0, v1, ...
  Representation(std::vector<GeoObject> objs, std::vector<std::string> names = {},
                 std::optional<std::uint64_t> thin = std::nullopt);

  std::size_t size() const noexcept { return objects.size(); }
  bool all_boxes() const;
  /// Throws unless the invariants hold.
  void validate() const;
};

std::vector<std::string> default_labels(std::size_t n);

/// Default cell budget for grid thinness (10^8).
std::uint64_t default_cell_budget();

/// Exact thinness of a set of boxes: the maximum number of open interiors
/// sharing a point. Evaluated over the cells of the coordinate arrangement.
/// Throws on balls and when the arrangement has more than `cell_budget` cells.
std::uint64_t thinness(const Representation& rep, std::uint64_t cell_budget = default_cell_budget());

/// Lower bound on thinness from random rational sample points; works for balls.
std::uint64_t thinness_sampled(const Representation& rep, std::size_t samples, std::uint64_t seed);

/// l_last(v_i) > m * l_last(v_{i+1}) for consecutive objects, in sequence order.
bool is_m_shrinking(const Representation& rep, const BigInt& m);
/// Largest integer m for which the sequence is m-shrinking (nullopt for fewer than two objects).
std::optional<BigInt> max_shrinking_factor(const Representation& rep);
/// Every pair dominates coordinatewise one way or the other.
bool is_comparable_boxes(const Representation& rep);

}  // namespace wcol
