#include "wcol/bounds.hpp"

namespace wcol {

namespace {

BigInt big(std::uint64_t x) { return BigInt(static_cast<unsigned long>(x)); }

// binom(base + k, k) for arbitrary-size base.
BigInt binom_over(const BigInt& base, std::uint64_t k) {
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out *= base + big(i);
    out /= big(i);
  }
  return out;
}

void require_k(std::uint64_t k) {
  if (k == 0) throw Error("k must be at least 1");
}

}  // namespace

BoundCase BoundCase::centrally_symmetric(std::uint64_t t, std::uint64_t d) {
  BoundCase c;
  c.kind = Kind::centrally_symmetric;
  c.t = t;
  c.d = d;
  return c;
}

BoundCase BoundCase::ball_like(const Rational& b, std::uint64_t t, std::uint64_t d) {
  if (b < 1) throw Error("b must be at least 1");
  BoundCase c;
  c.kind = Kind::ball_like;
  c.b = b;
  c.t = t;
  c.d = d;
  return c;
}

BoundCase BoundCase::balls(std::uint64_t t, std::uint64_t d, std::uint64_t k0) {
  BoundCase c;
  c.kind = Kind::balls;
  c.t = t;
  c.d = d;
  c.k0 = k0;
  return c;
}

std::string BoundCase::name() const {
  switch (kind) {
    case Kind::centrally_symmetric: return "a";
    case Kind::ball_like: return "b";
    case Kind::balls: return "c";
  }
  return "?";
}

BigInt scol_upper(const BoundCase& c, std::uint64_t k) {
  require_k(k);
  if (c.kind == BoundCase::Kind::ball_like)
    return ceil_rat(c.b * Rational(big(c.t)) * Rational(pow_int(big(2 * k + 2), c.d)));
  return big(c.t) * pow_int(big(2 * k + 1), c.d);
}

BigInt wcol_recurrence_upper(std::span<const BigInt> s) {
  std::vector<BigInt> w(s.size() + 1, BigInt(0));
  w[0] = 1;
  for (std::size_t j = 1; j <= s.size(); ++j)
    for (std::size_t i = 1; i <= j; ++i) w[j] += s[i - 1] * w[j - i];
  return w[s.size()];
}

WeakUpperBound thm_weak_upper(const BoundCase& c, std::uint64_t k) {
  require_k(k);
  WeakUpperBound out;
  const BigInt log_factor = big(std::max(1u, ceil_log2(k)));
  const BigInt t = big(c.t);
  switch (c.kind) {
    case BoundCase::Kind::centrally_symmetric: {
      out.raw_exponent = Rational(t * pow_int(5, c.d));
      out.exponent = out.raw_exponent.get_num();
      out.value = t * log_factor * pow_int(big(4 * k - 1), c.d) *
                  binom_over(out.exponent + 2, k);
      break;
    }
    case BoundCase::Kind::ball_like: {
      out.raw_exponent = Rational(t) * c.b * Rational(pow_int(6, c.d));
      out.exponent = ceil_rat(out.raw_exponent);
      // ceil(tb(4k)^d) so the value matches the integer-valued property table.
      BigInt lead = ceil_rat(Rational(t) * c.b * Rational(pow_int(big(4 * k), c.d)));
      out.value = lead * log_factor * binom_over(out.exponent + 2, k);
      break;
    }
    case BoundCase::Kind::balls: {
      out.raw_exponent = Rational(2 * t);
      out.exponent = 2 * t;
      out.value = t * log_factor * pow_int(big(4 * k - 1), c.d) *
                  binom_over(out.exponent + 2, k);
      out.below_k0 = k < c.k0;
      break;
    }
  }
  return out;
}

BigInt generic_theorem_upper(std::span<const BigInt> f, const BigInt& e, std::uint64_t k) {
  require_k(k);
  const std::uint64_t p = 2 * k - 2;
  if (p >= f.size()) throw Error("f is undefined at 2k-2 = " + std::to_string(p));
  if (e < 1) throw Error("e must be positive");
  return big(std::max(1u, ceil_log2(k))) * f[p] * binom_over(e + 2, k);
}

std::vector<BigInt> property_table_f(const BoundCase& c, std::uint64_t p_max) {
  std::vector<BigInt> f;
  for (std::uint64_t p = 0; p <= p_max; ++p) {
    if (c.kind == BoundCase::Kind::ball_like)
      f.push_back(ceil_rat(Rational(big(c.t)) * c.b * Rational(pow_int(big(2 * p + 4), c.d))));
    else
      f.push_back(big(c.t) * pow_int(big(2 * p + 3), c.d));
  }
  return f;
}

BigInt property_table_e(const BoundCase& c) {
  switch (c.kind) {
    case BoundCase::Kind::centrally_symmetric: return big(c.t) * pow_int(5, c.d);
    case BoundCase::Kind::ball_like: return ceil_rat(Rational(big(c.t)) * c.b * Rational(pow_int(6, c.d)));
    case BoundCase::Kind::balls: return big(2 * c.t);
  }
  return 0;
}

LowerBoundFamily parse_lb_family(const std::string& text) {
  if (text == "boxes3d" || text == "F") return LowerBoundFamily::boxes3d;
  if (text == "thin_squares" || text == "H") return LowerBoundFamily::thin_squares;
  if (text == "hypercubes") return LowerBoundFamily::hypercubes;
  throw Error("unknown lower-bound family '" + text + "'");
}

std::string to_string(LowerBoundFamily family) {
  switch (family) {
    case LowerBoundFamily::boxes3d: return "boxes3d";
    case LowerBoundFamily::thin_squares: return "thin_squares";
    case LowerBoundFamily::hypercubes: return "hypercubes";
  }
  return "?";
}

BigInt lb_value(LowerBoundFamily family, std::uint64_t k, std::uint64_t param) {
  switch (family) {
    case LowerBoundFamily::boxes3d: return pow_int(2, k + 1) - 1;
    case LowerBoundFamily::thin_squares:
      if (param == 0) throw Error("thin_squares lower bound needs t >= 1");
      return binom_over(big(param), k);
    case LowerBoundFamily::hypercubes: {
      if (param == 0) throw Error("hypercubes lower bound needs d >= 1");
      return binom_over(pow_int(2, param) - 1, k);
    }
  }
  return 0;
}

}  // namespace wcol
