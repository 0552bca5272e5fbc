#include "starbound/certificate.hpp"

#include "starbound/constants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace starbound {

namespace {

Interval product(const Quantity& a, const Quantity& b) {
  if (a.is_rational()) return (a[Sym::One] * b).enclose();
  if (b.is_rational()) return (b[Sym::One] * a).enclose();
  return a.enclose() * b.enclose();
}

struct Evaluation {
  std::string failure;
  int witness = -1;
  Rational epsilon;
  Rational bound;
  bool farkas_ok = false;
};

// All arithmetic below is exact.
Evaluation evaluate(const LPProblem& lp, const DualCertificate& cert) {
  Evaluation ev;
  const int m = lp.num_rows(), n = lp.num_vars();
  if (cert.rows != m + n || cert.cols != n) {
    ev.failure = "dimension mismatch";
    return ev;
  }
  if (cert.map_id != lp.map_id || cert.case_id != lp.case_id) {
    ev.failure = "certificate belongs to " + cert.map_id + "/" + cert.case_id;
    return ev;
  }
  std::vector<Rational> z(m + n);
  for (const auto& [i, v] : cert.z) {
    if (i < 0 || i >= m + n) {
      ev.failure = "row index out of range";
      ev.witness = i;
      return ev;
    }
    if (v < 0) {
      ev.failure = "negative multiplier";
      ev.witness = i;
      return ev;
    }
    z[i] = v;
  }

  std::vector<Rational> c(n);
  for (const auto& [j, r] : lp.objective) c[j] = r;
  std::vector<bool> reflected(n);
  std::vector<Quantity> range(n), shift(n);
  Quantity c0;
  for (int j = 0; j < n; ++j) {
    reflected[j] = c[j] > 0;
    shift[j] = reflected[j] ? lp.vars[j].hi : lp.vars[j].lo;
    range[j] = lp.vars[j].hi - lp.vars[j].lo;
    c0 += c[j] * shift[j];
  }

  // Y_j = sum_i z_i a_ij over LP rows; z.b' = z.rhs - sum_j Y_j shift_j + sum_j z_box range_j.
  std::vector<Quantity> Y(n);
  Quantity zb_exact;
  for (int i = 0; i < m; ++i) {
    if (z[i] == 0) continue;
    zb_exact += z[i] * lp.rows[i].rhs;
    for (const auto& [j, a] : lp.rows[i].terms) Y[j] += z[i] * a;
  }
  Interval zb_rest{0, 0};
  for (int j = 0; j < n; ++j) {
    zb_rest = zb_rest - product(Y[j], shift[j]);
    zb_exact += z[m + j] * range[j];
  }
  Rational zb_hi = zb_exact.upper() + zb_rest.hi;

  // y'_j = sign_j Y_j + z_box_j;  c'_j = sign_j c_j.
  Rational eps = 0;
  Rational W = 0;
  Rational farkas_min = 0;
  int eps_col = -1;
  for (int j = 0; j < n; ++j) {
    Quantity yj = reflected[j] ? -Y[j] : Y[j];
    yj += Quantity(z[m + j]);
    Rational cj = reflected[j] ? Rational(-c[j]) : c[j];
    Interval y_enc = yj.enclose();
    Rational gap = cj - y_enc.lo;
    if (gap > eps) {
      eps = gap;
      eps_col = j;
    }
    Rational rhi = range[j].upper();
    if (rhi < 0) rhi = 0;
    if (cj + 1 > 0) W += (cj + 1) * rhi;
    if (y_enc.lo < 0) farkas_min += y_enc.lo * rhi;
  }
  ev.epsilon = eps;
  ev.witness = eps_col;
  ev.bound = c0.upper() + (zb_hi + eps * W) / (1 + eps);
  ev.farkas_ok = farkas_min > zb_hi;
  return ev;
}

}  // namespace

Rational max_epsilon() { return pow10(-8); }

Rational score_target() { return 8 * constants().pt_enc.lo; }

DualCertificate extract_certificate(const LPProblem& lp, const SolveResult& res, int digits) {
  DualCertificate cert;
  cert.map_id = lp.map_id;
  cert.case_id = lp.case_id;
  cert.rows = lp.num_rows() + lp.num_vars();
  cert.cols = lp.num_vars();
  cert.kind = res.status == LPStatus::Infeasible ? CertKind::Infeasible : CertKind::Bound;
  std::vector<double> v = cert.kind == CertKind::Infeasible ? res.ray : res.dual;
  if (cert.kind == CertKind::Infeasible) {
    double scale = 0;
    for (double x : v) scale = std::max(scale, std::abs(x));
    if (scale > 0)
      for (double& x : v) x /= scale;
  }
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    if (!(v[i] > 0)) continue;
    Rational q = round_decimal(v[i], digits);
    if (q > 0) cert.z.emplace_back(i, q);
  }
  Evaluation ev = evaluate(lp, cert);
  cert.epsilon = ev.epsilon;
  cert.claimed_bound = ev.bound;
  return cert;
}

CertReport check_certificate(const LPProblem& lp, const DualCertificate& cert, const std::optional<Rational>& target) {
  CertReport rep;
  Evaluation ev = evaluate(lp, cert);
  rep.epsilon = ev.epsilon;
  rep.bound = ev.bound;
  rep.witness = ev.witness;
  if (!ev.failure.empty()) {
    rep.failure = ev.failure;
    return rep;
  }
  if (cert.kind == CertKind::Infeasible) {
    if (!ev.farkas_ok) {
      rep.failure = "aggregated row is satisfiable on the box";
      rep.witness = -1;
      return rep;
    }
    rep.accepted = true;
    rep.witness = -1;
    return rep;
  }
  if (!(ev.epsilon < max_epsilon())) {
    rep.failure = "epsilon " + std::to_string(to_double(ev.epsilon)) + " not below 1e-8";
    return rep;
  }
  rep.witness = -1;
  if (ev.bound > cert.claimed_bound) {
    rep.failure = "bound exceeds claimed bound";
    return rep;
  }
  if (target && !(ev.bound < *target)) {
    rep.failure = "bound " + std::to_string(to_double(ev.bound)) + " not below target " +
                  std::to_string(to_double(*target));
    return rep;
  }
  rep.accepted = true;
  return rep;
}

Rational error_chain_bound(int p, int n, const Rational& zb, const Rational& eps) {
  const auto& k = constants();
  Rational ppt = p * k.pt_enc.hi;
  return (ppt + zb + eps * (ppt + 2 * k.pi_hi * n)) / (1 + eps);
}

std::string write_certificate(const DualCertificate& cert) {
  std::ostringstream out;
  out << "certificate " << cert.map_id << ' ' << cert.case_id << '\n';
  out << "kind " << (cert.kind == CertKind::Bound ? "bound" : "infeasible") << '\n';
  out << "rows " << cert.rows << " cols " << cert.cols << '\n';
  out << "bound " << to_string(cert.claimed_bound) << '\n';
  out << "epsilon " << to_string(cert.epsilon) << '\n';
  for (const auto& [i, v] : cert.z) out << "z " << i << ' ' << to_string(v) << '\n';
  out << "end\n";
  return out.str();
}

DualCertificate parse_certificate(std::string_view text) {
  DualCertificate cert;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header = false, ended = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      return std::invalid_argument("certificate line " + std::to_string(line_no) + ": " + why);
    };
    std::string a, b, c;
    if (key == "certificate") {
      if (!(ls >> cert.map_id >> cert.case_id)) throw fail("expected map and case ids");
      header = true;
    } else if (!header) {
      throw fail("missing header");
    } else if (key == "kind") {
      ls >> a;
      if (a == "bound") cert.kind = CertKind::Bound;
      else if (a == "infeasible") cert.kind = CertKind::Infeasible;
      else throw fail("unknown kind '" + a + "'");
    } else if (key == "rows") {
      if (!(ls >> cert.rows >> b >> cert.cols) || b != "cols") throw fail("expected 'rows R cols C'");
    } else if (key == "bound") {
      if (!(ls >> a)) throw fail("missing bound");
      cert.claimed_bound = parse_rational(a);
    } else if (key == "epsilon") {
      if (!(ls >> a)) throw fail("missing epsilon");
      cert.epsilon = parse_rational(a);
    } else if (key == "z") {
      int i;
      if (!(ls >> i >> a)) throw fail("expected 'z <row> <value>'");
      cert.z.emplace_back(i, parse_rational(a));
    } else if (key == "end") {
      ended = true;
      break;
    } else {
      throw fail("unrecognized key '" + key + "'");
    }
  }
  if (!ended) throw std::invalid_argument("certificate: missing end");
  std::sort(cert.z.begin(), cert.z.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return cert;
}

}  // namespace starbound
