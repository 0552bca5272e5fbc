#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starbound/certificate.hpp"
#include "starbound/constants.hpp"
#include "starbound/lp.hpp"
#include "starbound/simplex.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

using namespace starbound;

namespace {

using Terms = std::vector<std::pair<int, Quantity>>;

LPProblem toy(const char* rhs) {
  LPProblem lp;
  lp.map_id = "toy";
  lp.case_id = "base";
  int x = lp.add_var("x", 0, 10);
  lp.add_le("cap", {{x, 1}}, Quantity::parse(rhs));
  lp.set_objective({{x, 1}});
  return lp;
}

struct Dense {
  int m, n;
  std::vector<std::vector<int>> a;  // small integers
  std::vector<int> b, c, lo, hi;
};

LPProblem to_lp(const Dense& d) {
  LPProblem lp;
  lp.map_id = "rand";
  lp.case_id = "c";
  for (int j = 0; j < d.n; ++j) lp.add_var("x" + std::to_string(j), d.lo[j], d.hi[j]);
  for (int i = 0; i < d.m; ++i) {
    Terms t;
    for (int j = 0; j < d.n; ++j) t.emplace_back(j, d.a[i][j]);
    lp.add_le("r" + std::to_string(i), t, d.b[i]);
  }
  std::vector<std::pair<int, Rational>> c;
  for (int j = 0; j < d.n; ++j) c.emplace_back(j, d.c[j]);
  lp.set_objective(c);
  return lp;
}

// Maximum over all vertices of the polytope, by solving every n-subset of active constraints.
std::optional<double> brute_force_max(const Dense& d) {
  struct Con {
    std::vector<double> a;
    double b;
  };
  std::vector<Con> cons;
  for (int i = 0; i < d.m; ++i) cons.push_back({std::vector<double>(d.a[i].begin(), d.a[i].end()), double(d.b[i])});
  for (int j = 0; j < d.n; ++j) {
    std::vector<double> e(d.n, 0.0);
    e[j] = 1;
    cons.push_back({e, double(d.hi[j])});
    e[j] = -1;
    cons.push_back({e, double(-d.lo[j])});
  }
  const int K = static_cast<int>(cons.size());
  std::optional<double> best;
  std::vector<int> pick(d.n);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == d.n) {
      Eigen::MatrixXd A(d.n, d.n);
      Eigen::VectorXd b(d.n);
      for (int r = 0; r < d.n; ++r) {
        for (int j = 0; j < d.n; ++j) A(r, j) = cons[pick[r]].a[j];
        b[r] = cons[pick[r]].b;
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
      if (lu.rank() < d.n) return;
      Eigen::VectorXd x = lu.solve(b);
      for (const auto& cn : cons) {
        double s = 0;
        for (int j = 0; j < d.n; ++j) s += cn.a[j] * x[j];
        if (s > cn.b + 1e-7) return;
      }
      double v = 0;
      for (int j = 0; j < d.n; ++j) v += d.c[j] * x[j];
      if (!best || v > *best) best = v;
      return;
    }
    for (int k = start; k < K; ++k) {
      pick[pos] = k;
      rec(pos + 1, k + 1);
    }
  };
  rec(0, 0);
  return best;
}

Dense random_dense(std::mt19937& rng, int max_m, int max_n) {
  std::uniform_int_distribution<int> small(-4, 4);
  Dense d;
  d.n = std::uniform_int_distribution<int>(1, max_n)(rng);
  d.m = std::uniform_int_distribution<int>(0, max_m)(rng);
  d.a.assign(d.m, std::vector<int>(d.n));
  for (auto& row : d.a)
    for (int& v : row) v = small(rng);
  for (int i = 0; i < d.m; ++i) d.b.push_back(std::uniform_int_distribution<int>(-3, 8)(rng));
  for (int j = 0; j < d.n; ++j) {
    d.c.push_back(small(rng));
    int lo = std::uniform_int_distribution<int>(-3, 2)(rng);
    d.lo.push_back(lo);
    d.hi.push_back(lo + std::uniform_int_distribution<int>(0, 5)(rng));
  }
  return d;
}

}  // namespace

TEST_CASE("single row toy") {
  LPProblem lp = toy("1");
  auto res = solve_max(lp);
  REQUIRE(res.status == LPStatus::Optimal);
  CHECK(res.value == doctest::Approx(1.0));
  auto cert = extract_certificate(lp, res);
  CHECK(cert.epsilon == 0);
  CHECK(cert.claimed_bound == 1);
  auto rep = check_certificate(lp, cert);
  CHECK(rep.accepted);
  CHECK(rep.bound == 1);
}

TEST_CASE("symbolic pi right-hand side") {
  LPProblem lp;
  lp.map_id = "toy";
  lp.case_id = "pi";
  int x = lp.add_var("x", 0, 7);
  int y = lp.add_var("y", 0, 7);
  lp.add_le("sum", {{x, 1}, {y, 1}}, Quantity::of(Sym::Pi, 2));
  lp.set_objective({{x, 1}, {y, 1}});
  auto res = solve_max(lp);
  REQUIRE(res.status == LPStatus::Optimal);
  CHECK(res.value == doctest::Approx(2 * M_PI));
  auto rep = check_certificate(lp, extract_certificate(lp, res));
  REQUIRE(rep.accepted);
  // the weakening endpoint of pi is used
  CHECK(rep.bound == 2 * constants().pi_hi);
}

TEST_CASE("degenerate redundant rows terminate") {
  LPProblem lp;
  lp.map_id = "deg";
  lp.case_id = "c";
  const int n = 6;
  for (int j = 0; j < n; ++j) lp.add_var("x" + std::to_string(j), 0, 1);
  for (int copy = 0; copy < 8; ++copy) {
    Terms t;
    for (int j = 0; j < n; ++j) t.emplace_back(j, copy + 1);
    lp.add_le("sum" + std::to_string(copy), t, copy + 1);
    lp.add_le("pair" + std::to_string(copy), {{0, 1}, {1, 1}}, 1);
    lp.add_le("zero" + std::to_string(copy), {{2, 1}, {3, -1}}, 0);
  }
  std::vector<std::pair<int, Rational>> c;
  for (int j = 0; j < n; ++j) c.emplace_back(j, 1);
  lp.set_objective(c);
  for (int bland_after : {0, 1, 50}) {
    SolveOptions opt;
    opt.bland_after = bland_after;
    auto res = solve_max(lp, opt);
    REQUIRE(res.status == LPStatus::Optimal);
    CHECK(res.value == doctest::Approx(1.0));
    CHECK(check_certificate(lp, extract_certificate(lp, res)).accepted);
  }
}

TEST_CASE("solver is deterministic") {
  std::mt19937 rng(7);
  for (int k = 0; k < 20; ++k) {
    LPProblem lp = to_lp(random_dense(rng, 10, 6));
    auto a = solve_max(lp), b = solve_max(lp);
    CHECK(a.status == b.status);
    CHECK(a.dual == b.dual);
    CHECK(a.x == b.x);
  }
}

TEST_CASE("random LPs agree with vertex enumeration and certify") {
  std::mt19937 rng(2024);
  int optimal = 0, infeasible = 0;
  for (int k = 0; k < 1000; ++k) {
    Dense d = random_dense(rng, 7, 4);
    LPProblem lp = to_lp(d);
    auto res = solve_max(lp);
    auto oracle = brute_force_max(d);
    CAPTURE(k);
    if (!oracle) {
      REQUIRE(res.status == LPStatus::Infeasible);
      ++infeasible;
      auto cert = extract_certificate(lp, res);
      CHECK(cert.kind == CertKind::Infeasible);
      CHECK(check_certificate(lp, cert).accepted);
      continue;
    }
    REQUIRE(res.status == LPStatus::Optimal);
    ++optimal;
    CHECK(res.value == doctest::Approx(*oracle).epsilon(1e-7));
    CHECK(max_violation(lp, res.x) < 1e-9);
    auto cert = extract_certificate(lp, res);
    auto rep = check_certificate(lp, cert);
    REQUIRE(rep.accepted);
    // weak duality against the exact optimum and random feasible points
    CHECK(*oracle <= to_double(rep.bound) + 1e-9);
    CHECK(to_double(rep.bound) <= *oracle + 1e-6);
    std::uniform_real_distribution<double> u(0, 1);
    for (int s = 0; s < 20; ++s) {
      std::vector<double> x(d.n);
      for (int j = 0; j < d.n; ++j) x[j] = d.lo[j] + (d.hi[j] - d.lo[j]) * u(rng);
      if (max_violation(lp, x) > 0) continue;
      CHECK(objective_value(lp, x) <= to_double(rep.bound) + 1e-9);
    }
  }
  CHECK(optimal > 300);
  CHECK(infeasible > 50);
}

TEST_CASE("truncated dual epsilon matches column-wise recomputation") {
  std::mt19937 rng(99);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    Dense d = random_dense(rng, 6, 4);
    LPProblem lp = to_lp(d);
    auto res = solve_max(lp);
    if (res.status != LPStatus::Optimal) continue;
    auto cert = extract_certificate(lp, res, 3);
    // recompute max_j (c'_j - (z A')_j) directly on the shifted columns
    // rows with no terms and nonnegative rhs are dropped by the builder
    std::vector<int> kept;
    for (int i = 0; i < d.m; ++i)
      if (d.b[i] < 0 || std::any_of(d.a[i].begin(), d.a[i].end(), [](int v) { return v != 0; })) kept.push_back(i);
    const int m = static_cast<int>(kept.size());
    REQUIRE(lp.num_rows() == m);
    std::vector<Rational> z(m + d.n);
    for (const auto& [i, v] : cert.z) z[i] = v;
    Rational eps = 0;
    for (int j = 0; j < d.n; ++j) {
      int sign = d.c[j] > 0 ? -1 : 1;
      Rational y = z[m + j];
      for (int r = 0; r < m; ++r) y += z[r] * sign * d.a[kept[r]][j];
      Rational gap = Rational(sign * d.c[j]) - y;
      if (gap > eps) eps = gap;
    }
    CHECK(cert.epsilon == eps);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("tampered multipliers are rejected") {
  // nondegenerate fixture: every active row has positive shifted rhs
  LPProblem lp;
  lp.map_id = "fix";
  lp.case_id = "t";
  int x = lp.add_var("x", 0, 10), y = lp.add_var("y", 0, 10), w = lp.add_var("w", 0, 10);
  lp.add_le("a", {{x, 2}, {y, 1}, {w, 1}}, 7);
  lp.add_le("b", {{x, 1}, {y, 3}, {w, 1}}, 9);
  lp.add_le("c", {{x, 1}, {y, 1}, {w, 4}}, 11);
  lp.set_objective({{x, 3}, {y, 2}, {w, 4}});
  auto res = solve_max(lp);
  REQUIRE(res.status == LPStatus::Optimal);
  auto cert = extract_certificate(lp, res);
  REQUIRE(check_certificate(lp, cert).accepted);
  REQUIRE(cert.z.size() == 3);
  for (size_t k = 0; k < cert.z.size(); ++k) {
    for (int sign : {1, -1}) {
      auto bad = cert;
      bad.z[k].second += sign * Rational(1, 1000);
      CAPTURE(k);
      CAPTURE(sign);
      CHECK_FALSE(check_certificate(lp, bad).accepted);
    }
  }
  auto neg = cert;
  neg.z[0].second = -neg.z[0].second;
  auto rep = check_certificate(lp, neg);
  CHECK_FALSE(rep.accepted);
  CHECK(rep.failure == "negative multiplier");
  CHECK(rep.witness == neg.z[0].first);
}

TEST_CASE("certificate for another problem is rejected") {
  LPProblem lp = toy("1");
  auto cert = extract_certificate(lp, solve_max(lp));
  LPProblem other = lp;
  other.add_var("extra", 0, 1);
  CHECK(check_certificate(other, cert).failure == "dimension mismatch");
  LPProblem renamed = lp;
  renamed.map_id = "m0002";
  CHECK_FALSE(check_certificate(renamed, cert).accepted);
}

TEST_CASE("score cutoff against eight points") {
  LPProblem lp = toy("0.4429");
  lp.triangles = 8;
  auto cert = extract_certificate(lp, solve_max(lp));
  auto rep = check_certificate(lp, cert, score_target());
  CHECK(rep.accepted);
  CHECK(rep.bound == parse_rational("0.4429"));
  LPProblem over = toy("0.443");
  auto rep2 = check_certificate(over, extract_certificate(over, solve_max(over)), score_target());
  CHECK_FALSE(rep2.accepted);
  CHECK(rep2.failure.rfind("bound", 0) == 0);
}

TEST_CASE("worst-case error chain stays below eight points") {
  const auto& k = constants();
  Rational zb = parse_rational("7.9999") * k.pt_enc.hi - 116 * k.pt_enc.hi;
  Rational b = error_chain_bound(116, 60, zb, max_epsilon());
  CHECK(b < score_target());
  CHECK(to_double(b) == doctest::Approx(0.44298).epsilon(1e-4));
  // a hundredfold epsilon breaks it
  CHECK_FALSE(error_chain_bound(116, 60, zb, 100 * max_epsilon()) < score_target());
}

TEST_CASE("infeasible problem yields a Farkas certificate") {
  LPProblem lp;
  lp.map_id = "inf";
  lp.case_id = "c";
  int x = lp.add_var("x", 0, 1), y = lp.add_var("y", 0, 1);
  lp.add_le("neg", {{x, 1}, {y, 1}}, -1);
  lp.set_objective({{x, 1}});
  auto res = solve_max(lp);
  REQUIRE(res.status == LPStatus::Infeasible);
  auto cert = extract_certificate(lp, res);
  CHECK(cert.kind == CertKind::Infeasible);
  CHECK(check_certificate(lp, cert).accepted);
  LPProblem feasible = toy("1");
  DualCertificate fake = extract_certificate(feasible, solve_max(feasible));
  fake.kind = CertKind::Infeasible;
  CHECK_FALSE(check_certificate(feasible, fake).accepted);
}

TEST_CASE("reflected columns with symbolic boxes") {
  LPProblem lp;
  lp.map_id = "sym";
  lp.case_id = "c";
  int s = lp.add_var("s", -10, Quantity::of(Sym::Pt));
  int t = lp.add_var("t", 0, Quantity::of(Sym::Sqrt2, 2));
  lp.add_le("mix", {{s, 1}, {t, Quantity::of(Sym::ZetaPt)}}, Quantity::of(Sym::Pt, Rational(1, 2)));
  lp.set_objective({{s, 1}, {t, -1}});
  auto res = solve_max(lp);
  REQUIRE(res.status == LPStatus::Optimal);
  CHECK(res.value == doctest::Approx(constants().pt / 2));
  auto rep = check_certificate(lp, extract_certificate(lp, res));
  CHECK(rep.accepted);
  CHECK(to_double(rep.bound) == doctest::Approx(constants().pt / 2).epsilon(1e-9));
}

TEST_CASE("dump and certificate round trip") {
  LPProblem lp;
  lp.map_id = "m0001";
  lp.case_id = "q0-t2";
  lp.triangles = 14;
  lp.vertices = 9;
  int a = lp.add_var("dih[0,1]", parse_rational("0.8638"), parse_rational("1.874445"));
  int b = lp.add_var("sol[3]", 0, Quantity::parse("4*pi"));
  lp.add_eq("angle-sum[0]", {{a, 1}, {b, Quantity::parse("-1/3*zpt")}}, Quantity::parse("2*pi"));
  lp.add_le("4.1.8[3]", {{a, parse_rational("-0.372")}, {b, parse_rational("0.50")}}, Quantity::parse("0.55+1*pt"));
  lp.set_objective({{b, 1}});
  std::string text = dump_lp(lp);
  LPProblem back = parse_lp(text);
  CHECK(dump_lp(back) == text);
  CHECK(back.num_rows() == 3);
  CHECK(back.rows[1].tag == "angle-sum[0]/ge");
  CHECK(back.vars[1].hi == Quantity::of(Sym::Pi, 4));

  auto res = solve_max(back);
  auto cert = extract_certificate(back, res);
  auto cert2 = parse_certificate(write_certificate(cert));
  CHECK(write_certificate(cert2) == write_certificate(cert));
  CHECK(check_certificate(back, cert2).accepted == check_certificate(back, cert).accepted);

  CHECK_THROWS_AS(parse_lp("lp a b\nvar x 0 1\nrow r 1 5:1\nend\n"), LPError);
  CHECK_THROWS_AS(parse_lp("lp a b\nvar x 0 1\n"), LPError);
  CHECK_THROWS(parse_certificate("certificate a b\nz 0 1\n"));
}
