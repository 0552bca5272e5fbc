#include "starbound/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace starbound {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
}

}  // namespace

Rational pow10(int k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
  if (k >= 0) return Rational(p);
  Rational r(mpz_class(1), p);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    bool neg = !num.empty() && (num.front() == '-' || num.front() == '+');
    std::string_view digits = neg ? num.substr(1) : num;
    if (!all_digits(digits) || !all_digits(den)) bad(text);
    mpz_class n(std::string(digits), 10), d(std::string(den), 10);
    if (d == 0) bad(text);
    Rational r{n, d};
    r.canonicalize();
    return num.front() == '-' ? Rational(-r) : r;
  }

  bool neg = false;
  if (s.front() == '-' || s.front() == '+') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  int exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view ex = s.substr(e + 1);
    bool eneg = !ex.empty() && (ex.front() == '-' || ex.front() == '+');
    std::string_view ed = eneg ? ex.substr(1) : ex;
    if (!all_digits(ed) || ed.size() > 6) bad(text);
    exponent = std::stoi(std::string(ed));
    if (!ex.empty() && ex.front() == '-') exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string_view ip = s, fp;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    ip = s.substr(0, dot);
    fp = s.substr(dot + 1);
  }
  if (ip.empty() && fp.empty()) bad(text);
  if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) bad(text);
  mpz_class mant(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
  Rational r = Rational(mant) * pow10(exponent - static_cast<int>(fp.size()));
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational round_decimal(double x, int digits) {
  if (!std::isfinite(x)) throw std::invalid_argument("round_decimal: non-finite value");
  double scaled = std::nearbyint(x * std::pow(10.0, digits));
  Rational r(scaled);
  r *= pow10(-digits);
  r.canonicalize();
  return r;
}

double to_double(const Rational& r) { return r.get_d(); }

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  Interval r{c[0], c[0]};
  for (const auto& v : c) {
    if (v < r.lo) r.lo = v;
    if (r.hi < v) r.hi = v;
  }
  return r;
}

Interval operator*(const Rational& k, const Interval& a) {
  if (k >= 0) return {k * a.lo, k * a.hi};
  return {k * a.hi, k * a.lo};
}

}  // namespace starbound
