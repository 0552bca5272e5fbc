#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace starbound {

using Rational = mpq_class;

/// Parses "p/q", an integer, or a finite decimal such as "-0.4666" or "1e-6".
/// The result is exact. Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, or "p" when the denominator is one.
std::string to_string(const Rational& r);

/// Nearest rational with denominator 10^digits.
Rational round_decimal(double x, int digits);

/// 10^k as a rational, k may be negative.
Rational pow10(int k);

double to_double(const Rational& r);

inline const Rational& min_q(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max_q(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Closed rational interval.
struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& k, const Interval& a);

}  // namespace starbound
