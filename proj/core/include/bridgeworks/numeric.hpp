#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "bridgeworks/error.hpp"

namespace bridgeworks {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Absolute tolerance of the double backend.
inline constexpr double kTolerance = 1e-9;

enum class Backend { kRational, kDouble };

std::string_view to_string(Backend backend);
std::optional<Backend> parse_backend(std::string_view text);

/// Returns sqrt(value) when it is itself rational.
std::optional<Rational> exact_sqrt(const Rational& value);

/// Parses `p/q`, an integer, or a decimal with optional exponent.
/// Throws InputError with a short reason on malformed text.
Rational parse_rational(std::string_view text);

/// Canonical text form: `p` or `p/q`. parse_rational inverts it exactly.
std::string format_rational(const Rational& value);

/// Shortest round-trip text form of a double.
std::string format_double(double value);

/// A non-negative segment or path length.
///
/// Exact when the value is known to be rational (axis-aligned segments,
/// explicit weights, Pythagorean offsets); otherwise only the double
/// approximation exists and the rational backend refuses to use it.
class Length {
 public:
  Length() : exact_(Rational(0)), approx_(0.0) {}

  static Length exact(Rational value);
  static Length approximate(double value);

  bool is_exact() const { return exact_.has_value(); }
  const Rational& rational() const;
  double to_double() const { return approx_; }

  template <class T>
  T as() const;

  friend bool operator==(const Length& a, const Length& b);

 private:
  std::optional<Rational> exact_;
  double approx_;
};

template <>
inline Rational Length::as<Rational>() const {
  return rational();
}

template <>
inline double Length::as<double>() const {
  return approx_;
}

/// Per-backend comparison and conversion rules.
template <class T>
struct Arith;

template <>
struct Arith<Rational> {
  static constexpr Backend kBackend = Backend::kRational;
  static Rational zero() { return Rational(0); }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static bool less(const Rational& a, const Rational& b) { return a < b; }
  static double to_double(const Rational& v) { return v.get_d(); }
  static Rational from_rational(const Rational& v) { return v; }
  static std::string format(const Rational& v) { return format_rational(v); }
};

template <>
struct Arith<double> {
  static constexpr Backend kBackend = Backend::kDouble;
  static double zero() { return 0.0; }
  // |a - b| <= tol * max(1, |b|)
  static bool equal(double a, double b) {
    return std::abs(a - b) <= kTolerance * std::max(1.0, std::abs(b));
  }
  // Strictly less by more than the tolerance.
  static bool less(double a, double b) {
    return a < b - kTolerance * std::max(1.0, std::abs(b));
  }
  static double to_double(double v) { return v; }
  static double from_rational(const Rational& v) { return v.get_d(); }
  static std::string format(double v) { return format_double(v); }
};

}  // namespace bridgeworks
