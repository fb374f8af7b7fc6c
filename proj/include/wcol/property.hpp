#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wcol/graph.hpp"

namespace wcol {

/// Positive rational radius r(v) per vertex.
class RadiusMap {
 public:
  explicit RadiusMap(std::vector<Rational> values);
  static RadiusMap constant(std::size_t n, const Rational& value);

  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator[](Vertex v) const { return values_.at(v); }
  const std::vector<Rational>& values() const noexcept { return values_; }

 private:
  std::vector<Rational> values_;
};

/// r(v) = diam(v). Uses the exact square root of diam^2 when rational; for an
/// all-hypercube family with irrational diagonals it falls back to the side
/// length, a uniform rescaling that every use of r here is invariant under.
RadiusMap diameter_radius_map(const Representation& rep);

/// Minimum total radius of internal vertices over all u-v paths; nullopt when
/// u and v are disconnected. u == v throws.
std::optional<Rational> lambda_r(const Graph& g, const RadiusMap& r, Vertex u, Vertex v);
/// lambda_r(v, x) for every x, with the trivial path giving 0 at x = v.
std::vector<std::optional<Rational>> lambda_from(const Graph& g, const RadiusMap& r, Vertex v);

/// Table form of P(f, a, e): f(p) for p = 0..f.size()-1.
struct PropertyPSpec {
  std::vector<std::uint64_t> f;
  std::uint64_t a = 1;
  std::uint64_t e = 1;
};

struct PropertyPViolation {
  enum class Condition { count, chain } condition;
  Vertex v = 0;
  BigInt s;
  std::uint64_t p = 0;  // unused for chain violations
  std::uint64_t observed = 0;
  std::uint64_t allowed = 0;
  std::vector<Vertex> witnesses;
};

struct PropertyPReport {
  std::vector<PropertyPViolation> violations;
  /// True when every integer s >= 1 was covered (critical-value mode).
  bool complete_s_coverage = false;
  /// Number of (v, s, p) evaluations performed.
  std::uint64_t evaluations = 0;
  /// Largest observed count for condition (i) relative to f, and longest chain.
  std::uint64_t max_count = 0;
  std::uint64_t max_chain = 0;

  bool passed() const noexcept { return violations.empty(); }
  std::string coverage() const;
};

/// Checks both conditions of the property for every vertex and every p in the
/// table. With `s_values` empty, s ranges over all integers >= 1: between two
/// consecutive values ceil(lambda_r(u,v) / (p r(v))) the qualifying set only
/// shrinks as s grows, so those values (and s = 1) are the only candidates for
/// a maximum, and the check is exhaustive. A non-empty `s_values` restricts s.
PropertyPReport check_property_P(const Graph& g, const RadiusMap& r, const PropertyPSpec& spec,
                                 const std::vector<std::uint64_t>& s_values = {});

}  // namespace wcol
