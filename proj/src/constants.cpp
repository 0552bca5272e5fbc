#include "starbound/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace starbound {

namespace {

// 36-decimal truncations of the 50-digit reference values (all positive).
constexpr const char* kPiDigits = "3.141592653589793238462643383279502884";
constexpr const char* kSqrt2Digits = "1.414213562373095048801688724209698078";
constexpr const char* kZetaDigits = "1.813941816806566168297788723525002679";
constexpr const char* kPtDigits = "0.055373645668463869730073841835750857";
constexpr const char* kZetaPtDigits = "0.100444571427056395000049923588813187";
constexpr const char* kDeltaDigits = "0.720902949517465092841244835018558909";

Interval truncation_enclosure(const char* digits) {
  Rational lo = parse_rational(digits);
  return {lo, lo + pow10(-36)};
}

ConstantEntry make(std::string name, double v, Interval enc, Provenance p, std::string note) {
  return {std::move(name), v, std::move(enc), p, std::move(note)};
}

Interval point(const Rational& r) { return {r, r}; }

}  // namespace

const ConstantEntry& ConstantsTable::entry(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw std::out_of_range("unknown constant: " + name);
}

ConstantsTable derive_constants() {
  ConstantsTable k{};
  k.pi_f = std::acos(-1.0);
  k.sqrt2_f = std::sqrt(2.0);
  k.zeta = 1.0 / (2.0 * std::atan(k.sqrt2_f / 5.0));
  k.pt = 2.0 / k.zeta - k.pi_f / 3.0;
  k.zeta_pt = k.zeta * k.pt;
  k.delta_oct = (k.pi_f - 2.0 / k.zeta) / std::sqrt(8.0);
  k.total_budget = (4.0 * k.pi_f * k.zeta - 8.0) * k.pt;
  k.two_sqrt2 = 2.0 * k.sqrt2_f;

  k.t4_q = parse_rational("0.1317");
  k.t0_q = parse_rational("1.255");
  k.xi_tau_q = parse_rational("2.1773");
  k.xi_sigma_q = parse_rational("2.177303");
  k.m_tau_q = parse_rational("0.2384");
  k.m_sigma_q = parse_rational("0.207045");
  k.t4 = k.t4_q.get_d();
  k.t0 = k.t0_q.get_d();
  k.xi_tau = k.xi_tau_q.get_d();
  k.xi_sigma = k.xi_sigma_q.get_d();
  k.m_tau = k.m_tau_q.get_d();
  k.m_sigma = k.m_sigma_q.get_d();

  k.pi = truncation_enclosure(kPiDigits);
  k.pi_lo = k.pi.lo;
  k.pi_hi = k.pi.hi;
  k.sqrt2 = truncation_enclosure(kSqrt2Digits);
  k.zeta_enc = truncation_enclosure(kZetaDigits);
  k.pt_enc = truncation_enclosure(kPtDigits);
  k.zeta_pt_enc = truncation_enclosure(kZetaPtDigits);
  k.delta_enc = truncation_enclosure(kDeltaDigits);
  k.budget_enc = (Rational(4) * (k.pi * k.zeta_enc) - point(8)) * k.pt_enc;

  k.phi0 = (4.0 - 4.0 * k.delta_oct * k.t0 * k.t0 * k.t0) / 3.0;

  Interval t0i = point(k.t0_q);
  Interval phi0_enc = point(Rational(4, 3)) - Rational(4, 3) * (k.delta_enc * (t0i * t0i * t0i));

  using P = Provenance;
  k.entries = {
      make("pi", k.pi_f, k.pi, P::Derived, "36-decimal truncation enclosure"),
      make("sqrt2", k.sqrt2_f, k.sqrt2, P::Derived, "36-decimal truncation enclosure"),
      make("zeta", k.zeta, k.zeta_enc, P::Derived, "1/(2 atan(sqrt2/5))"),
      make("pt", k.pt, k.pt_enc, P::Derived, "2/zeta - pi/3"),
      make("zeta_pt", k.zeta_pt, k.zeta_pt_enc, P::Derived, "zeta*pt"),
      make("delta_oct", k.delta_oct, k.delta_enc, P::Derived, "(pi - 2/zeta)/sqrt8"),
      make("total_budget", k.total_budget, k.budget_enc, P::Derived, "(4 pi zeta - 8) pt"),
      make("t4", k.t4, point(k.t4_q), P::Literal, "quad squander floor 0.1317"),
      make("t0", k.t0, point(k.t0_q), P::Literal, "truncation radius 1.255"),
      make("phi0", k.phi0, phi0_enc, P::Derived, "phi(t0, t0)"),
      make("xi_tau", k.xi_tau, point(k.xi_tau_q), P::Literal, "edge threshold for squander rows"),
      make("xi_sigma", k.xi_sigma, point(k.xi_sigma_q), P::Literal, "edge threshold for score rows"),
      make("m_tau", k.m_tau, point(k.m_tau_q), P::Literal, "slope for squander rows"),
      make("m_sigma", k.m_sigma, point(k.m_sigma_q), P::Literal, "slope for score rows"),
      make("two_sqrt2", k.two_sqrt2, Rational(2) * k.sqrt2, P::Derived, "2 sqrt2"),
  };
  return k;
}

const ConstantsTable& constants() {
  static const ConstantsTable table = derive_constants();
  return table;
}

double phi(double h, double t) { return (4.0 - 2.0 * constants().delta_oct * h * t * (h + t)) / 3.0; }

double a_of_h(double h) {
  const double t0 = constants().t0;
  if (!(h >= 1.0 && h <= t0)) throw std::domain_error("a_of_h: h outside [1, t0]");
  return (1.0 - h / t0) * (phi(h, t0) - phi(t0, t0));
}

Rational a_of_h_over_delta(const Rational& h) {
  const Rational& t0 = constants().t0_q;
  if (h < 1 || h > t0) throw std::domain_error("a_of_h: h outside [1, t0]");
  Rational r = (1 - h / t0) * Rational(2, 3) * t0 * (2 * t0 * t0 - h * h - h * t0);
  r.canonicalize();
  return r;
}

Interval a_of_h_enclosure(const Rational& h) {
  return a_of_h_over_delta(h) * constants().delta_enc;
}

}  // namespace starbound
