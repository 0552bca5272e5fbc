#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starbound/constants.hpp"
#include "starbound/vertex_lp.hpp"

#include <algorithm>
#include <cmath>

using namespace starbound;

namespace {

const double kPt = 0.0553736456684638697;
const double kPi = 3.14159265358979323846;

// Lower envelopes of tau as functions of one dihedral angle, typed in from the
// inequality statements independently of the catalogue parser.
double tau_tet(double d) {
  return std::max({0.0, 0.4666 - 0.3897 * d, 0.3683 - 0.2993 * d, 0.1689 * d - 0.208, 0.2529 * d - 0.3442});
}

double tau_quad(double d) {
  return std::max({5.81446 - 4.49461 * d, 2.955 - 2.1406 * d, 0.6438 - 0.316 * d, 0.1317, 0.2365 * d - 0.3825,
                   0.4747 * d - 1.071});
}

// Convex in the split D of the full angle between tetrahedra and quads, and equal
// angles are optimal within each kind; ternary search on D.
double oracle_pt(int p, int q) {
  const double tl = 0.8638, th = 1.874445, ql = 1.153, qh = 3.247;
  double lo = std::max(p * tl, 2 * kPi - q * qh), hi = std::min(p * th, 2 * kPi - q * ql);
  if (p == 0) lo = hi = 0;
  if (q == 0) lo = hi = 2 * kPi;
  auto f = [&](double D) {
    double s = 0;
    if (p) s += p * tau_tet(D / p);
    if (q) s += q * tau_quad((2 * kPi - D) / q);
    return s;
  };
  for (int it = 0; it < 300; ++it) {
    double a = lo + (hi - lo) / 3, b = hi - (hi - lo) / 3;
    if (f(a) <= f(b)) hi = b;
    else lo = a;
  }
  return f((lo + hi) / 2) / kPt;
}

}  // namespace

TEST_CASE("hand-verified table entries within 0.05 pt") {
  const std::pair<std::pair<int, int>, double> subset[] = {
      {{0, 2}, 15.18}, {{0, 3}, 7.135},  {{0, 4}, 10.6497}, {{2, 1}, 8.5},   {{2, 2}, 4.756},
      {{3, 1}, 3.6426}, {{4, 0}, 4.1396}, {{5, 1}, 11.22},   {{6, 0}, 6.339}, {{7, 0}, 14.76}};
  for (const auto& [k, v] : subset) {
    CAPTURE(k.first);
    CAPTURE(k.second);
    auto r = tau_lp(k.first, k.second);
    REQUIRE(r.feasible);
    REQUIRE(r.certified);
    CHECK(std::abs(r.value_pt - v) <= 0.05);
    CHECK(to_double(*r.certified) / kPt == doctest::Approx(r.value_pt).epsilon(1e-8));
  }
}

TEST_CASE("LP minima match the one-dimensional envelope oracle") {
  for (const auto& [k, published] : published_tau_pt()) {
    if (k == std::pair{5, 0} || k == std::pair{1, 5}) continue;
    CAPTURE(k.first);
    CAPTURE(k.second);
    auto r = tau_lp(k.first, k.second);
    REQUIRE(r.feasible);
    CHECK(r.value_pt == doctest::Approx(oracle_pt(k.first, k.second)).epsilon(1e-7));
  }
}

TEST_CASE("closed-form entries") {
  CHECK(tau_lp(0, 3).value_pt == doctest::Approx(3 * 0.1317 / kPt).epsilon(1e-9));
  CHECK(tau_lp(7, 0).value_pt == doctest::Approx(7 * (0.4666 - 0.3897 * 2 * kPi / 7) / kPt).epsilon(1e-9));
  CHECK(tau_lp(0, 4).value_pt == doctest::Approx(4 * (0.6438 - 0.316 * kPi / 2) / kPt).epsilon(1e-9));
  // rows 4.1.12 and 4.1.13 cross at the quad angle 2.8904
  auto r = tau_lp(2, 1);
  double e = (1.071 - 0.3825) / (0.4747 - 0.2365);
  CHECK(e == doctest::Approx(2.8904).epsilon(1e-4));
  CHECK(std::find(r.binding.begin(), r.binding.end(), "4.1.12") != r.binding.end());
  CHECK(std::find(r.binding.begin(), r.binding.end(), "4.1.13") != r.binding.end());
}

TEST_CASE("pure tetrahedron types split the angle equally") {
  for (int p = 4; p <= 7; ++p) {
    auto r = tau_lp(p, 0);
    CHECK(r.value_pt * kPt == doctest::Approx(p * tau_tet(2 * kPi / p)).epsilon(1e-9));
  }
}

TEST_CASE("dropping a row never raises the minimum") {
  const auto full = VertexRowSet::standard();
  for (auto [p, q] : {std::pair{2, 1}, {3, 1}, {1, 2}, {4, 1}, {0, 4}}) {
    double base = tau_lp(p, q, full).value_pt;
    for (size_t i = 0; i < full.tet_ids.size() + full.quad_ids.size(); ++i) {
      VertexRowSet less = full;
      if (i < full.tet_ids.size()) less.tet_ids.erase(less.tet_ids.begin() + i);
      else less.quad_ids.erase(less.quad_ids.begin() + (i - full.tet_ids.size()));
      auto r = tau_lp(p, q, less);
      REQUIRE(r.feasible);
      CHECK(r.value_pt <= base + 1e-9);
    }
  }
}

TEST_CASE("table provenance and weights") {
  TauTable t = compute_tau_table();
  CHECK(t.entries.size() == 21);
  CHECK(t.at(5, 0).source == TauSource::FiveTetrahedra);
  CHECK(t.at(1, 5).source == TauSource::TableOnly);
  CHECK(t.at(2, 1).source == TauSource::ComputedLP);
  CHECK_THROWS_AS(t.at(1, 0), std::out_of_range);
  CHECK_THROWS_AS(t.at(6, 1), std::out_of_range);
  for (const auto& [k, e] : t.entries) {
    CAPTURE(k.first);
    CAPTURE(k.second);
    CHECK(e.weight_pt > 0);
    CHECK(e.weight_pt <= *e.published_pt);
    if (e.certified_pt) CHECK(e.weight_pt <= *e.certified_pt);
  }
  // (1,2) is reported with its gap, not asserted
  CHECK(*t.at(1, 2).computed_pt > 7.2);
  auto w = t.weights();
  CHECK(w.tau_pt.size() == 21);
  CHECK(to_double(w.budget_pt.lo) == doctest::Approx(14.7947).epsilon(1e-4));
  auto same = squander_weights(w.tau_pt);
  CHECK(same.t4_pt.lo == w.t4_pt.lo);
  CHECK(same.budget_pt.hi == w.budget_pt.hi);
}

TEST_CASE("five tetrahedra around a vertex") {
  Lemma53Check l = verify_lemma53_k1();
  CHECK(l.tau_ok);
  CHECK(l.sigma_ok);
  CHECK(to_double(l.tau_short_edges) == doctest::Approx(-5 * 0.29349 + 0.2384 * 2 * kPi).epsilon(1e-7));
  CHECK(std::abs(to_double(l.tau_short_edges) / kPt - 0.55) < 0.001);
  CHECK(to_double(l.sigma_short_edges) == doctest::Approx(5 * 0.31023815 - 0.207045 * 2 * kPi).epsilon(1e-7));
  CHECK(to_double(l.sigma_short_edges) / kPt <= 4.52);
  CHECK(to_double(l.tau_long_edge) / kPt == doctest::Approx(0.55));
}

TEST_CASE("type exclusions") {
  TauTable t = compute_tau_table();
  auto ex = excluded_types(t);
  REQUIRE(ex.size() == 15);
  int angle = 0, budget = 0;
  for (const auto& e : ex) {
    CAPTURE(e.reason);
    CHECK(e.holds);
    (e.lemma == 1 ? angle : budget)++;
  }
  CHECK(angle == 8);
  CHECK(budget == 7);
  CHECK(ex[0].p == 8);
  CHECK(ex[0].reason.find("6.9104") != std::string::npos);
  CHECK(ex[6].p == 3);
  CHECK(ex[6].reason.find("5.6233") != std::string::npos);
  // no allowed type is excluded
  for (const auto& e : ex) CHECK_FALSE(type_allowed(e.p, e.q));
}
