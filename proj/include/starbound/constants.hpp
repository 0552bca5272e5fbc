#pragma once

#include "starbound/rational.hpp"

#include <string>
#include <vector>

namespace starbound {

enum class Provenance { Literal, Derived };

struct ConstantEntry {
  std::string name;
  double value;
  Interval enclosure;
  Provenance provenance;
  std::string note;
};

/// Every numeric constant of the model. Immutable after construction.
struct ConstantsTable {
  // float views
  double zeta;
  double pt;
  double zeta_pt;
  double delta_oct;
  double total_budget;
  double t4;
  double t0;
  double phi0;
  double xi_tau;
  double xi_sigma;
  double m_tau;
  double m_sigma;
  double two_sqrt2;
  double pi_f;
  double sqrt2_f;

  // exact rational enclosures
  Rational pi_lo, pi_hi;
  Interval pi;
  Interval sqrt2;
  Interval zeta_enc;
  Interval pt_enc;
  Interval zeta_pt_enc;
  Interval delta_enc;
  Interval budget_enc;

  // finite decimals stored exactly
  Rational t4_q;
  Rational t0_q;
  Rational xi_tau_q, xi_sigma_q, m_tau_q, m_sigma_q;

  std::vector<ConstantEntry> entries;

  const ConstantEntry& entry(const std::string& name) const;
};

ConstantsTable derive_constants();

/// Process-wide table, built on first use.
const ConstantsTable& constants();

/// (4 - 2*delta_oct*h*t*(h+t))/3
double phi(double h, double t);

/// A(h) = (1 - h/t0)(phi(h,t0) - phi(t0,t0)); throws std::domain_error outside [1, t0].
double a_of_h(double h);

/// A(h) = delta_oct * r(h) with r rational for rational h; returns r(h).
Rational a_of_h_over_delta(const Rational& h);

/// Rational enclosure of A(h) for rational h in [1, t0].
Interval a_of_h_enclosure(const Rational& h);

}  // namespace starbound
