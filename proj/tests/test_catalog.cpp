#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starbound/catalog.hpp"
#include "starbound/constants.hpp"

#include <map>
#include <set>

using namespace starbound;

namespace {

Quantity coef_of(const Inequality& q, Kind k) {
  const Quantity* c = q.coef(k);
  return c ? *c : Quantity();
}

ClusterContext box_ctx(std::initializer_list<std::pair<Kind, std::pair<double, double>>> items) {
  ClusterContext c;
  for (const auto& [k, b] : items) {
    c.bounds[k] = {Quantity(parse_rational(std::to_string(b.first))), Quantity(parse_rational(std::to_string(b.second)))};
  }
  return c;
}

}  // namespace

TEST_CASE("group tallies") {
  const auto& cat = load_catalog();
  std::map<std::string, size_t> want = {{"4.1", 21}, {"4.2", 3}, {"4.3", 2}, {"G1", 7},  {"G2", 7},
                                        {"G3", 17}, {"G4", 4},  {"G5", 14}, {"A.2", 11}, {"A.3", 11},
                                        {"A.4", 4},  {"A.6", 9}, {"A.6'", 8}, {"A.8", 3}};
  size_t total = 0;
  for (const auto& [g, n] : want) {
    CHECK_MESSAGE(cat.group(g).size() == n, g);
    total += n;
  }
  CHECK(cat.rows().size() == total);
  std::set<std::string> ids;
  for (const auto& r : cat.rows()) CHECK(ids.insert(r.id).second);
}

TEST_CASE("lookup examples") {
  const auto& cat = load_catalog();
  const auto& r = cat.lookup("4.1.11");
  CHECK(r.context == Context::Quad);
  CHECK(r.terms.size() == 2);
  CHECK(coef_of(r, Kind::Sigma) == Quantity(1));
  CHECK(coef_of(r, Kind::Sol) == Quantity::of(Sym::ZetaPt, -1));
  CHECK(r.rhs == Quantity(parse_rational("-0.1317")));
  CHECK(r.open);

  const auto& g11 = cat.lookup("G1.1");
  CHECK(g11.context == Context::QRTet);
  CHECK(g11.terms.size() == 1);
  CHECK(g11.rhs == Quantity::of(Sym::Pt));
  CHECK_FALSE(g11.open);

  const auto& a82 = cat.lookup("A.8.2");
  // stored as -(dih2 + 0.59y1 + ...) < -2.6506
  CHECK(coef_of(a82, Kind::Dih2) == Quantity(-1));
  CHECK(coef_of(a82, Kind::Y1) == Quantity(parse_rational("-0.59")));
  CHECK(coef_of(a82, Kind::Y5) == Quantity(parse_rational("0.6")));
  CHECK(a82.rhs == Quantity(parse_rational("-2.6506")));
  CHECK(a82.condition.size() == 9);

  const auto& s32 = cat.lookup("4.1.16");
  CHECK(coef_of(s32, Kind::Sol) == Quantity::of(Sym::ZetaPt, Rational(-16, 5)));

  const auto& g57 = cat.lookup("G5.7");
  // tau > c + m*sum(dih): -sigma + zpt*sol > ...  =>  sigma - zpt*sol + m*sum(dih) < -c
  CHECK(coef_of(g57, Kind::Sigma) == Quantity(1));
  CHECK(coef_of(g57, Kind::Dih3) == Quantity(parse_rational("0.2384")));

  CHECK_THROWS_AS(cat.lookup("9.9.9"), std::out_of_range);
}

TEST_CASE("export round trip is exact") {
  const auto& cat = load_catalog();
  std::string text = cat.export_text();
  Catalog back = Catalog::import_text(text);
  REQUIRE(back.rows().size() == cat.rows().size());
  for (size_t i = 0; i < cat.rows().size(); ++i) CHECK_MESSAGE(back.rows()[i] == cat.rows()[i], cat.rows()[i].id);
  CHECK(back.export_text() == text);
  CHECK(back.version() == cat.version());
}

TEST_CASE("import accepts ge senses and rejects garbage") {
  auto c = Catalog::import_text("ineq X.1 ; quad.sigma:1 ; rhs 0 ; sense ge ; cond none ; cite x\n");
  CHECK(c.lookup("X.1").terms[0].coef == Quantity(-1));
  CHECK_THROWS(Catalog::import_text("ineq X.1 ; quad.bogus:1 ; rhs 0 ; sense le ; cond none ; cite x\n"));
  CHECK_THROWS(Catalog::import_text("ineq X.1 ; quad.sigma:1 ; rhs 0 ; sense eq ; cond none ; cite x\n"));
  CHECK_THROWS(Catalog::import_text("garbage\n"));
}

TEST_CASE("score variants expand correctly") {
  // substitute sigma = s + lambda*zpt*sol back into each expanded row and compare with the
  // unexpanded statement read from the cite anchor
  const auto& cat = load_catalog();
  int checked = 0;
  for (const auto& r : cat.rows()) {
    std::string stmt = r.cite.substr(0, r.cite.find(" if "));
    auto [raw, rel] = dsl::parse_relation(stmt, false);
    auto [full, rel2] = dsl::parse_relation(stmt, true);
    CHECK(rel == rel2);
    // orientation of the stored row
    int sign = (rel == Rel::Ge || rel == Rel::Gt) ? -1 : 1;
    for (const auto& t : r.terms) CHECK(full.vars[kind_name(t.kind)] == Rational(sign) * t.coef);
    CHECK(-full.constant == Rational(sign) * r.rhs);

    dsl::Linear sub;
    for (const auto& [name, c] : raw.vars) {
      if (name == "sigma1" || name == "sigma32" || name == "tau") {
        Rational lam = name == "sigma32" ? Rational(16, 5) : Rational(1);
        Rational s = name == "tau" ? Rational(-1) : Rational(1);
        REQUIRE(c.is_rational());
        sub.vars["sigma"] += s * c;
        sub.vars["sol"] += Quantity::of(Sym::ZetaPt, -s * lam * c[Sym::One]);
        ++checked;
      } else {
        sub.vars[name] += c;
      }
    }
    for (auto it = sub.vars.begin(); it != sub.vars.end();) it = it->second.is_zero() ? sub.vars.erase(it) : std::next(it);
    CHECK_MESSAGE(sub.vars == full.vars, r.id);
  }
  CHECK(checked >= 20);
}

TEST_CASE("cite anchors resolve and conditions stay in context") {
  for (const auto& r : load_catalog().rows()) {
    CHECK(!r.cite.empty());
    CHECK_NOTHROW(dsl::parse_relation(r.cite.substr(0, r.cite.find(" if ")), true));
    for (const auto& a : r.condition)
      for (const auto& [k, c] : a.terms) CHECK(kind_allowed(r.context, k));
  }
}

TEST_CASE("malformed rows fail closed") {
  CHECK_THROWS(dsl::parse_source_line("X | qrtet | sigma < zeta | none"));
  CHECK_THROWS(dsl::parse_source_line("X | nowhere | sigma < 1 | none"));
  CHECK_THROWS(dsl::parse_source_line("X | qrtet | sigma < 1 | y4 >> 2"));
  CHECK_THROWS(dsl::parse_source_line("X | qrtet | sigma*sol < 1 | none"));
  CHECK_THROWS(dsl::parse_source_line("X | qrtet | sigma < 1"));
}

TEST_CASE("applicable") {
  const auto& cat = load_catalog();
  auto ctx = box_ctx({{Kind::Y2, {2.0, 2.13}}, {Kind::Y3, {2.0, 2.1}}});
  CHECK(applicable(cat.lookup("A.3.11"), ctx));
  ctx.bounds[Kind::Y3].second = Quantity(parse_rational("2.2"));
  CHECK_FALSE(applicable(cat.lookup("A.3.11"), ctx));

  auto c2 = box_ctx({{Kind::Dih1, {0.0, 2.2}}, {Kind::Y1, {2.0, 2.2}}, {Kind::Y2, {2.0, 2.2}}, {Kind::Y3, {2.0, 2.2}}});
  CHECK_FALSE(applicable(cat.lookup("A.4.2"), c2));
  c2.bounds[Kind::Dih1].second = Quantity(parse_rational("2.12"));
  CHECK_FALSE(applicable(cat.lookup("A.4.2"), c2));  // strict
  c2.bounds[Kind::Dih1].second = Quantity(parse_rational("2.1199"));
  CHECK(applicable(cat.lookup("A.4.2"), c2));

  auto c3 = box_ctx({{Kind::Y4, {2.1773, 2.51}}});
  CHECK(applicable(cat.lookup("G5.1"), c3));
  auto c4 = box_ctx({{Kind::Y4, {2.0, 2.51}}});
  CHECK_FALSE(applicable(cat.lookup("G5.1"), c4));
  // a branch hypothesis recorded as a fact
  CondAtom fact{{{Kind::Y4, Rational(1)}}, Rel::Ge, Quantity(parse_rational("2.2"))};
  c4.facts.push_back(fact);
  CHECK(applicable(cat.lookup("G5.1"), c4));

  ClusterContext empty;
  CHECK_THROWS_AS(applicable(cat.lookup("G5.1"), empty), MissingBound);
  CHECK(applicable(cat.lookup("G1.1"), empty));

  // perimeter split fact
  ClusterContext c5;
  c5.facts.push_back({{{Kind::Y4, 1}, {Kind::Y5, 1}, {Kind::Y6, 1}}, Rel::Le, Quantity(parse_rational("6.25"))});
  CHECK(applicable(cat.lookup("A.6.1"), c5));
  CHECK_THROWS_AS(applicable(cat.lookup("A.6.1'"), c5), MissingBound);

  // symbolic bound: A.8.2 needs y4 >= 2 sqrt2
  auto c6 = box_ctx({{Kind::Y1, {2, 2.13}}, {Kind::Y2, {2, 2.13}}, {Kind::Y3, {2, 2.13}}, {Kind::Y5, {2, 2.51}}, {Kind::Y6, {2, 2.51}}});
  c6.bounds[Kind::Y4] = {Quantity::of(Sym::Sqrt2, 2), Quantity(parse_rational("2.93"))};
  CHECK(applicable(cat.lookup("A.8.2"), c6));
  c6.bounds[Kind::Y4].second = Quantity(3);
  CHECK_FALSE(applicable(cat.lookup("A.8.2"), c6));
}

TEST_CASE("truncation rows") {
  const auto& k = constants();
  auto rows = truncation_rows(k.t0_q, Rational(1), Rational(2));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].id == "A.4.5");
  CHECK(rows[1].id == "A.4.6");
  double a1 = a_of_h(1.0);
  double lambda = (0.0 - a1) / (k.t0 - 1.0);
  // steepest secant: h coefficient of A.4.6 is -lambda*dih_max
  CHECK(std::abs(coef_of(rows[1], Kind::H).value() - (-lambda * 2.0)) < 1e-12);
  CHECK(coef_of(rows[1], Kind::H).value() > -lambda * 2.0);  // rounded outward

  // h_max = 1.1, dih_max = 2: Ad <= (A(1) + lambda (h - 1)) * 2
  auto r2 = truncation_rows(parse_rational("1.1"), Rational(1), Rational(2));
  double lam2 = (a_of_h(1.1) - a1) / 0.1;
  CHECK(std::abs(r2[1].rhs.value() - (a1 - lam2) * 2.0) < 1e-12);

  // rows hold at sampled points of the true function
  for (double h : {1.0, 1.05, 1.1}) {
    for (double d : {1.0, 1.5, 2.0}) {
      double ad = a_of_h(h) * d;
      for (const auto& r : r2) {
        double lhs = 0;
        for (const auto& t : r.terms) {
          double v = t.kind == Kind::Ad ? ad : t.kind == Kind::H ? h : d;
          lhs += t.coef.value() * v;
        }
        CHECK(lhs <= r.rhs.value() + 1e-15);
      }
    }
  }
  // collapsed angle interval
  auto r3 = truncation_rows(parse_rational("1.2"), Rational(3, 2), Rational(3, 2));
  double h = 1.2, d = 1.5, ad = a_of_h(h) * d;
  for (const auto& r : r3) {
    double lhs = 0;
    for (const auto& t : r.terms) lhs += t.coef.value() * (t.kind == Kind::Ad ? ad : t.kind == Kind::H ? h : d);
    CHECK(lhs <= r.rhs.value() + 1e-12);
  }
  CHECK_THROWS_AS(truncation_rows(Rational(1), Rational(1), Rational(2)), std::domain_error);
  CHECK_THROWS_AS(truncation_rows(Rational(2), Rational(1), Rational(2)), std::domain_error);
}
