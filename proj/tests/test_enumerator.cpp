#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starbound/constants.hpp"
#include "starbound/enumerator.hpp"

#include <fstream>
#include <set>
#include <sstream>

using namespace starbound;

namespace {

SquanderWeights table_weights() {
  SquanderWeights w;
  const std::pair<std::pair<int, int>, const char*> rows[] = {
      {{0, 2}, "15.18"}, {{0, 3}, "7.135"}, {{0, 4}, "10.6497"}, {{0, 5}, "22.27"}, {{1, 2}, "6.95"},
      {{1, 3}, "7.135"}, {{1, 4}, "17.62"}, {{1, 5}, "32.3"},    {{2, 1}, "8.5"},   {{2, 2}, "4.756"},
      {{2, 3}, "12.9814"}, {{3, 1}, "3.6426"}, {{3, 2}, "8.334"}, {{3, 3}, "20.9"}, {{4, 0}, "4.1396"},
      {{4, 1}, "3.7812"}, {{4, 2}, "16.11"}, {{5, 0}, "0.55"},    {{5, 1}, "11.22"}, {{6, 0}, "6.339"},
      {{7, 0}, "14.76"}};
  for (const auto& [k, v] : rows) w.tau_pt[k] = parse_rational(v);
  const auto& c = constants();
  w.t4_pt = {c.t4_q / c.pt_enc.hi, c.t4_q / c.pt_enc.lo};
  w.budget_pt = {c.budget_enc.lo / c.pt_enc.hi, c.budget_enc.hi / c.pt_enc.lo};
  return w;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PartialMap two_pentagons() {
  PartialMap p;
  p.map.num_vertices = 5;
  p.map.faces = {{0, 1, 2, 3, 4}, {4, 3, 2, 1, 0}};
  p.map.finished = {false, false};
  return p;
}

std::vector<int> sizes_sorted(const PlanarMap& m) {
  std::vector<int> s;
  for (const auto& f : m.faces) s.push_back(int(f.size()));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("extension tuples") {
  auto has = [](const std::vector<ExtensionTuple>& ts, std::vector<int> a) {
    return std::any_of(ts.begin(), ts.end(), [&](const ExtensionTuple& t) { return t.a == a; });
  };
  CHECK(has(tuples(5, 6), {1, 1, 3, 4, 4, 5}));
  CHECK(has(tuples(5, 4), {1, 1, 1, 5}));
  CHECK_FALSE(has(tuples(5, 4), {1, 1, 5, 5}));
  // Brute force over all integer tuples.
  for (int ell = 3; ell <= 7; ++ell) {
    for (int m = 3; m <= 6; ++m) {
      std::vector<std::vector<int>> expect;
      std::vector<int> a(m, 1);
      while (true) {
        bool ok = a[0] == 1 && a[m - 1] == ell && a[m - 2] != a[m - 1];
        for (int i = 1; i < m; ++i) ok = ok && a[i - 1] <= a[i];
        if (ok) expect.push_back(a);
        int i = m - 1;
        while (i >= 0 && a[i] == ell) a[i--] = 1;
        if (i < 0) break;
        ++a[i];
      }
      auto got = tuples(ell, m);
      REQUIRE(got.size() == expect.size());
      for (size_t k = 0; k < got.size(); ++k) {
        CHECK(got[k].m == m);
        CHECK(got[k].a == expect[k]);
      }
    }
  }
  CHECK(tuples(3, 3).size() == 2);
}

TEST_CASE("extend inside a pentagon") {
  EnumConfig cfg;
  cfg.admissible_prune = false;
  auto p = two_pentagons();
  // Edge 4 -> 0 puts corner 1 at vertex 0 and corner 5 at vertex 4.
  SUBCASE("a = (1,1,3,4,4,5)") {
    auto r = extend(p, 0, 4, {6, {1, 1, 3, 4, 4, 5}}, cfg);
    REQUIRE(r.map);
    const auto& m = r.map->map;
    CHECK(m.num_vertices == 7);
    CHECK(m.faces.size() == 4);  // the other pentagon plus three pieces
    CHECK(sizes_sorted(m) == std::vector<int>{3, 4, 5, 6});
    check_structure(m);
    for (size_t f = 0; f < m.faces.size(); ++f) {
      if (m.faces[f].size() == 6 || m.faces[f].size() == 3) CHECK(m.finished[f]);
      if (m.faces[f].size() == 4) CHECK_FALSE(m.finished[f]);
    }
  }
  SUBCASE("a = (1,1,1,5)") {
    auto r = extend(p, 0, 4, {4, {1, 1, 1, 5}}, cfg);
    REQUIRE(r.map);
    const auto& m = r.map->map;
    CHECK(m.faces.size() == 3);  // two pieces
    CHECK(sizes_sorted(m) == std::vector<int>{4, 5, 7});
    check_structure(m);
  }
  SUBCASE("finished face is refused") {
    auto q = p;
    q.map.finished[0] = true;
    CHECK_THROWS_AS(extend(q, 0, 4, {4, {1, 1, 1, 5}}, cfg), std::invalid_argument);
  }
}

TEST_CASE("extend rejections") {
  EnumConfig cfg;
  cfg.admissible_prune = false;
  SUBCASE("multi-join") {
    PartialMap p;
    p.map.num_vertices = 4;
    p.map.faces = {{0, 1, 2, 3}, {0, 3, 2}, {0, 2, 1}};
    p.map.finished = {false, true, true};
    auto r = extend(p, 0, 3, {3, {1, 3, 4}}, cfg);
    CHECK_FALSE(r.map);
    CHECK(r.reason == Reject::MultiJoin);
    auto ok = extend(p, 0, 3, {3, {1, 2, 4}}, cfg);
    CHECK(ok.map);
  }
  SUBCASE("vertex cap") {
    cfg.max_vertices = 5;
    auto r = extend(two_pentagons(), 0, 4, {4, {1, 1, 1, 5}}, cfg);
    CHECK(r.reason == Reject::VertexCap);
  }
  SUBCASE("separating triangle") {
    // Chord 0-2 in the square closes the 3-circuit 0-1-2 around the far side.
    PartialMap p;
    p.map.num_vertices = 5;
    p.map.faces = {{0, 1, 2, 3}, {0, 3, 2, 4}, {0, 4, 2, 1}};
    p.map.finished = {false, false, false};
    auto r = extend(p, 1, 0, {3, {1, 2, 4}}, cfg);
    CHECK_FALSE(r.map);
    CHECK(r.reason == Reject::Circuit3);
  }
}

TEST_CASE("budget prune") {
  auto w = table_weights();
  SUBCASE("nothing finished keeps") {
    auto p = two_pentagons();
    CHECK(budget_prune(p, w));
    CHECK(p.budget_pt.lo == 0);
  }
  SUBCASE("type (7,0) with a quadrilateral rejects") {
    PartialMap p;
    p.map.num_vertices = 9;
    for (int i = 1; i <= 7; ++i) p.map.faces.push_back({0, i, i % 7 + 1});
    for (int i = 1; i <= 5; ++i) p.map.faces.push_back({8, i + 1, i});
    p.map.faces.push_back({8, 1, 7, 6});
    p.map.finished.assign(p.map.faces.size(), true);
    CHECK_FALSE(budget_prune(p, w));
    CHECK(p.budget_pt.lo > w.tau_pt.at({7, 0}));
  }
  SUBCASE("only fully finished vertices count") {
    auto p = seed();
    CHECK(budget_prune(p, w));
    CHECK(p.budget_pt.lo == w.t4_pt.lo);
  }
  SUBCASE("reachable prune is at least as strong") {
    PartialMap p;
    p.map = fixtures::pentagonal_prism_star();
    p.map.finished.assign(p.map.faces.size(), true);
    auto q = p;
    CHECK(budget_prune(p, w) == reachable_budget_prune(q, w));
    CHECK(q.budget_pt.lo >= p.budget_pt.lo);
  }
}

TEST_CASE("exhaustive agreement with the brute-force oracle at nine vertices") {
  auto text = read_file(std::string(STARBOUND_TEST_DIR) + "/oracle/maps_n9.txt");
  auto oracle = parse_archive(text);
  std::set<std::string> want, oracle_forms;
  for (const auto& m : oracle) want.insert(canonical_form(m));
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("# form ", 0) == 0) oracle_forms.insert(line.substr(7));
  CHECK(want.size() == oracle.size());
  CHECK(oracle_forms == want);  // both canonical codes agree

  EnumConfig cfg;
  cfg.max_vertices = 9;
  cfg.budget_prune = false;
  cfg.admissible_prune = false;
  cfg.validate_output = false;
  auto res = enumerate(cfg);
  std::set<std::string> got(res.forms.begin(), res.forms.end());
  CHECK(got.size() == res.forms.size());
  CHECK(got == want);
  for (const auto& m : res.maps) {
    CHECK(canonical_form(m) == canonical_form(canonicalize(m)));
    CHECK(m.count_faces_of_size(4) >= 1);
  }

  SUBCASE("worker count does not change the output") {
    cfg.workers = 3;
    auto par = enumerate(cfg);
    CHECK(par.forms == res.forms);
    CHECK(serialize_archive(par.maps) == serialize_archive(res.maps));
    CHECK(stats_text(par.stats) == stats_text(res.stats));
  }
}

TEST_CASE("budgeted run at twelve vertices") {
  EnumConfig cfg;
  cfg.max_vertices = 12;
  cfg.weights = table_weights();
  auto res = enumerate(cfg);
  CHECK(res.stats.emitted == res.maps.size());
  CHECK(res.stats.emitted > 0);
  std::set<std::string> forms(res.forms.begin(), res.forms.end());
  CHECK(forms.size() == res.forms.size());
  for (auto fx : {fixtures::cuboctahedron(), fixtures::orthobicupola(), fixtures::pentagonal_prism_star()}) {
    CHECK_MESSAGE(forms.count(canonical_form(fx)), fx.id);
  }
  for (const auto& m : res.maps) CHECK(validate(m, &cfg.weights).ok());
  CHECK_FALSE(forms.count(canonical_form(fixtures::icosahedron())));
}
