#pragma once

#include "starbound/rational.hpp"

#include <array>
#include <string>
#include <string_view>

namespace starbound {

/// Irrational basis symbols a coefficient or right-hand side may carry.
enum class Sym : int { One = 0, Pi, Sqrt2, Pt, ZetaPt };
inline constexpr int kNumSyms = 5;

/// Text name used in serialized form ("pi", "sqrt2", "pt", "zpt").
const char* sym_name(Sym s);

/// Exact linear combination r0 + r1*pi + r2*sqrt2 + r3*pt + r4*zeta*pt.
/// Resolved to rationals only through the stored enclosures of the basis.
class Quantity {
 public:
  Quantity() = default;
  Quantity(const Rational& r) { c_[0] = r; }  // NOLINT(implicit)
  Quantity(long v) { c_[0] = v; }             // NOLINT(implicit)
  static Quantity of(Sym s, const Rational& coef = 1);

  const Rational& operator[](Sym s) const { return c_[static_cast<int>(s)]; }
  Rational& operator[](Sym s) { return c_[static_cast<int>(s)]; }

  bool is_zero() const;
  bool is_rational() const;

  Quantity& operator+=(const Quantity& o);
  Quantity& operator-=(const Quantity& o);
  Quantity& operator*=(const Rational& k);
  Quantity operator-() const;

  friend Quantity operator+(Quantity a, const Quantity& b) { return a += b; }
  friend Quantity operator-(Quantity a, const Quantity& b) { return a -= b; }
  friend Quantity operator*(const Rational& k, Quantity a) { return a *= k; }
  friend Quantity operator*(Quantity a, const Rational& k) { return a *= k; }
  bool operator==(const Quantity& o) const;
  bool operator!=(const Quantity& o) const { return !(*this == o); }

  /// Rational enclosure from the constant enclosures.
  Interval enclose() const;
  Rational lower() const { return enclose().lo; }
  Rational upper() const { return enclose().hi; }
  double value() const;

  /// "a+b*pi+..." with rational parts in canonical form; "0" when zero.
  std::string str() const;
  static Quantity parse(std::string_view text);

 private:
  std::array<Rational, kNumSyms> c_{};
};

}  // namespace starbound
