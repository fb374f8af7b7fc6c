#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wcol/rational.hpp"

namespace wcol {

/// Object class of a closed-form bound.
///  - centrally_symmetric: homothets of one centrally symmetric body, or comparable boxes
///  - ball_like: b-ball-like convex bodies (b >= 1)
///  - balls: Euclidean balls; the weak bound uses the large-k refinement
struct BoundCase {
  enum class Kind { centrally_symmetric, ball_like, balls };

  Kind kind = Kind::centrally_symmetric;
  std::uint64_t t = 1;
  std::uint64_t d = 1;
  Rational b = 1;
  /// Threshold from which the balls refinement is claimed; it has no known value.
  std::uint64_t k0 = 1;

  static BoundCase centrally_symmetric(std::uint64_t t, std::uint64_t d);
  static BoundCase ball_like(const Rational& b, std::uint64_t t, std::uint64_t d);
  static BoundCase balls(std::uint64_t t, std::uint64_t d, std::uint64_t k0 = 1);

  std::string name() const;
};

/// Strong coloring bound for sizewise orderings: t(2k+1)^d, or ceil(bt(2k+2)^d)
/// for b-ball-like objects. Balls use the first form.
BigInt scol_upper(const BoundCase& c, std::uint64_t k);

/// W_0 = 1, W_j = sum_{i=1..j} s_i W_{j-i}; returns W_k for k = s.size().
BigInt wcol_recurrence_upper(std::span<const BigInt> scol_bounds);

struct WeakUpperBound {
  BigInt value;
  /// The product used as binomial parameter (t5^d, tb6^d or 2t) before and after ceiling.
  Rational raw_exponent;
  BigInt exponent;
  /// Set for the balls refinement when k < k0.
  bool below_k0 = false;
};

/// Weak coloring bound for sizewise orderings of the case's class.
WeakUpperBound thm_weak_upper(const BoundCase& c, std::uint64_t k);

/// max(1, ceil(log2 k)) f(2k-2) binom(k+e+2, e+2). Throws if f is undefined at 2k-2.
BigInt generic_theorem_upper(std::span<const BigInt> f, const BigInt& e, std::uint64_t k);

/// Table f(p), p = 0..p_max, and e of the property instance for the case:
/// t(2p+3)^d and t5^d; ceil(tb(2p+4)^d) and ceil(tb6^d); t(2p+3)^d and 2t.
std::vector<BigInt> property_table_f(const BoundCase& c, std::uint64_t p_max);
BigInt property_table_e(const BoundCase& c);

enum class LowerBoundFamily { boxes3d, thin_squares, hypercubes };

LowerBoundFamily parse_lb_family(const std::string& text);
std::string to_string(LowerBoundFamily family);

/// 2^{k+1}-1, binom(k+t, t), or binom(k + 2^d - 1, 2^d - 1). `param` is t for
/// thin_squares, d for hypercubes, ignored for boxes3d.
BigInt lb_value(LowerBoundFamily family, std::uint64_t k, std::uint64_t param = 0);

}  // namespace wcol
