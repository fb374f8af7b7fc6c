#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wcol {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation would exceed a configured size budget.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, double requested, double budget)
      : Error(what), requested_(requested), budget_(budget) {}
  double requested() const noexcept { return requested_; }
  double budget() const noexcept { return budget_; }

 private:
  double requested_;
  double budget_;
};

/// Parses "p", "p/q", or a plain decimal such as "-1.25" into an exact rational.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise (lowest terms).
std::string format_rational(const Rational& value);

BigInt binomial(unsigned long n, unsigned long k);
BigInt pow_int(const BigInt& base, unsigned long exponent);
Rational pow_rat(const Rational& base, unsigned long exponent);
BigInt ceil_rat(const Rational& value);
BigInt floor_rat(const Rational& value);

/// ceil(log2(k)) for k >= 1.
unsigned ceil_log2(std::uint64_t k);

/// Exact square root if `value` is the square of a rational.
bool exact_sqrt(const Rational& value, Rational& root);

}  // namespace wcol
