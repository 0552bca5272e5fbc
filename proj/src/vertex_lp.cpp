#include "starbound/vertex_lp.hpp"

#include "starbound/catalog.hpp"
#include "starbound/constants.hpp"
#include "starbound/simplex.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace starbound {

const char* tau_source_name(TauSource s) {
  switch (s) {
    case TauSource::ComputedLP: return "computed-lp";
    case TauSource::FiveTetrahedra: return "five-tetrahedra";
    case TauSource::TableOnly: return "table-only";
  }
  return "?";
}

const std::map<std::pair<int, int>, Rational>& published_tau_pt() {
  static const std::map<std::pair<int, int>, Rational> table = [] {
    const std::pair<std::pair<int, int>, const char*> rows[] = {
        {{0, 2}, "15.18"},   {{0, 3}, "7.135"},  {{0, 4}, "10.6497"}, {{0, 5}, "22.27"},  {{1, 2}, "6.95"},
        {{1, 3}, "7.135"},   {{1, 4}, "17.62"},  {{1, 5}, "32.3"},    {{2, 1}, "8.5"},    {{2, 2}, "4.756"},
        {{2, 3}, "12.9814"}, {{3, 1}, "3.6426"}, {{3, 2}, "8.334"},   {{3, 3}, "20.9"},   {{4, 0}, "4.1396"},
        {{4, 1}, "3.7812"},  {{4, 2}, "16.11"},  {{5, 0}, "0.55"},    {{5, 1}, "11.22"},  {{6, 0}, "6.339"},
        {{7, 0}, "14.76"}};
    std::map<std::pair<int, int>, Rational> m;
    for (const auto& [k, v] : rows) m[k] = parse_rational(v);
    return m;
  }();
  return table;
}

VertexRowSet VertexRowSet::standard() {
  return {{"G3.4", "G3.5", "G3.6", "G3.7", "G3.8"},
          {"4.1.8", "4.1.9", "4.1.10", "4.1.11", "4.1.12", "4.1.13"}};
}

namespace {

// Rewrites a row over sigma, sol and dih as a row over tau and dih. The sigma and sol
// coefficients must combine into a multiple of tau = zeta*pt*sol - sigma.
std::vector<std::pair<int, Quantity>> tau_terms(const Inequality& ineq, int tau, int dih) {
  Quantity cs, csol;
  std::vector<std::pair<int, Quantity>> out;
  for (const auto& t : ineq.terms) {
    if (t.kind == Kind::Sigma) cs = t.coef;
    else if (t.kind == Kind::Sol) csol = t.coef;
    else if (t.kind == Kind::Dih1) out.emplace_back(dih, t.coef);
    else throw std::invalid_argument("row " + ineq.id + " is not a single-angle squander row");
  }
  if (!cs.is_rational() || csol != Quantity::of(Sym::ZetaPt, -cs[Sym::One]))
    throw std::invalid_argument("row " + ineq.id + " does not factor through tau");
  out.emplace_back(tau, Quantity(-cs[Sym::One]));
  return out;
}

std::vector<std::pair<int, Quantity>> sigma_terms(const Inequality& ineq, int sigma, int dih) {
  std::vector<std::pair<int, Quantity>> out;
  for (const auto& t : ineq.terms) {
    if (t.kind == Kind::Sigma) out.emplace_back(sigma, t.coef);
    else if (t.kind == Kind::Dih1) out.emplace_back(dih, t.coef);
    else throw std::invalid_argument("row " + ineq.id + " is not a single-angle score row");
  }
  return out;
}

std::vector<std::string> binding_rows(const LPProblem& lp, const SolveResult& res) {
  std::vector<std::string> out;
  for (int i = 0; i < lp.num_rows(); ++i) {
    if (res.dual[i] <= 1e-9) continue;
    const std::string& tag = lp.rows[i].tag;
    std::string id = tag.substr(0, tag.find('['));
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  }
  return out;
}

}  // namespace

VertexLPResult tau_lp(int p, int q, const VertexRowSet& rows) {
  const Catalog& cat = load_catalog();
  VertexLPResult r;
  LPProblem& lp = r.lp;
  lp.map_id = "vertex";
  lp.case_id = "p" + std::to_string(p) + "q" + std::to_string(q);
  std::vector<std::pair<int, Quantity>> angle_sum;
  std::vector<std::pair<int, Rational>> objective;
  auto add_cluster = [&](const std::string& name, const Inequality& lo, const Inequality& hi,
                         const std::vector<std::string>& ids) {
    // tau >= 0 holds for every cluster, and a single cluster above 5 already exceeds
    // every entry, so the box [0, 5] does not change the bound.
    int d = lp.add_var("dih[" + name + "]", -lo.rhs, hi.rhs);
    int t = lp.add_var("tau[" + name + "]", 0, 5);
    angle_sum.emplace_back(d, 1);
    objective.emplace_back(t, -1);
    for (const auto& id : ids) lp.add_le(id + "[" + name + "]", tau_terms(cat.lookup(id), t, d), cat.lookup(id).rhs);
  };
  for (int i = 0; i < p; ++i)
    add_cluster("t" + std::to_string(i), cat.lookup("G1.3"), cat.lookup("G1.2"), rows.tet_ids);
  for (int i = 0; i < q; ++i)
    add_cluster("q" + std::to_string(i), cat.lookup("4.3.1"), cat.lookup("4.3.2"), rows.quad_ids);
  lp.add_eq("angle-sum", angle_sum, Quantity::of(Sym::Pi, 2));
  lp.set_objective(objective);

  SolveResult res = solve_max(lp);
  if (res.status != LPStatus::Optimal) {
    r.feasible = false;
    if (res.status == LPStatus::Infeasible) r.cert = extract_certificate(lp, res);
    return r;
  }
  r.feasible = true;
  r.value_pt = -res.value / constants().pt;
  r.binding = binding_rows(lp, res);
  r.cert = extract_certificate(lp, res);
  auto rep = check_certificate(lp, r.cert);
  if (rep.accepted) r.certified = -rep.bound;
  return r;
}

const TauEntry& TauTable::at(int p, int q) const {
  auto it = entries.find({p, q});
  if (it == entries.end())
    throw std::out_of_range("type (" + std::to_string(p) + "," + std::to_string(q) + ") has no squander entry");
  return it->second;
}

SquanderWeights squander_weights(std::map<std::pair<int, int>, Rational> tau) {
  SquanderWeights w;
  w.tau_pt = std::move(tau);
  const auto& c = constants();
  w.t4_pt = {c.t4_q / c.pt_enc.hi, c.t4_q / c.pt_enc.lo};
  w.budget_pt = {c.budget_enc.lo / c.pt_enc.hi, c.budget_enc.hi / c.pt_enc.lo};
  return w;
}

SquanderWeights TauTable::weights() const {
  std::map<std::pair<int, int>, Rational> tau;
  for (const auto& [k, e] : entries) tau[k] = e.weight_pt;
  return squander_weights(std::move(tau));
}

std::string TauTable::text() const {
  std::ostringstream out;
  out << std::left << std::setw(8) << "type" << std::setw(12) << "published" << std::setw(12) << "computed"
      << std::setw(12) << "certified" << std::setw(12) << "diff" << std::setw(16) << "source"
      << "binding\n";
  out << std::fixed;
  for (const auto& [k, e] : entries) {
    std::ostringstream type;
    type << '(' << k.first << ',' << k.second << ')';
    out << std::setw(8) << type.str();
    auto cell = [&](std::optional<double> v, int prec) {
      std::ostringstream s;
      if (v) s << std::fixed << std::setprecision(prec) << *v;
      else s << '-';
      out << std::setw(12) << s.str();
    };
    cell(e.published_pt ? std::optional<double>(to_double(*e.published_pt)) : std::nullopt, 4);
    cell(e.computed_pt, 4);
    cell(e.certified_pt ? std::optional<double>(to_double(*e.certified_pt)) : std::nullopt, 4);
    cell(e.published_pt && e.computed_pt ? std::optional<double>(*e.computed_pt - to_double(*e.published_pt))
                                         : std::nullopt,
         4);
    out << std::setw(16) << tau_source_name(e.source);
    for (size_t i = 0; i < e.binding.size(); ++i) out << (i ? "," : "") << e.binding[i];
    out << '\n';
  }
  return out.str();
}

TauTable compute_tau_table() {
  TauTable t;
  const auto& pt = constants().pt_enc;
  for (const auto& [k, published] : published_tau_pt()) {
    TauEntry e;
    e.p = k.first;
    e.q = k.second;
    e.published_pt = published;
    e.weight_pt = published;
    if (k == std::pair{5, 0}) {
      Lemma53Check l = verify_lemma53_k1();
      e.source = TauSource::FiveTetrahedra;
      Rational lower = min_q(l.tau_long_edge, l.tau_short_edges) / pt.hi;
      e.certified_pt = lower;
      e.weight_pt = min_q(published, lower);
    } else {
      VertexLPResult r = tau_lp(k.first, k.second);
      if (r.feasible && r.certified) {
        e.computed_pt = r.value_pt;
        // a negative certified bound divides by the smaller pt
        e.certified_pt = *r.certified / (*r.certified >= 0 ? pt.hi : pt.lo);
        e.binding = r.binding;
        e.weight_pt = min_q(published, *e.certified_pt);
      } else {
        e.source = TauSource::TableOnly;
      }
    }
    t.entries[k] = e;
  }
  return t;
}

std::vector<Exclusion> excluded_types(const TauTable& table) {
  const auto& c = constants();
  const Rational lo_tet = parse_rational("0.8638"), lo_quad = parse_rational("1.153");
  const Rational hi_tet = parse_rational("1.874445"), hi_quad = parse_rational("3.247");
  std::vector<Exclusion> out;
  // representative extreme type of each range; the bounds are monotone in p and q
  const int lower_cases[6][2] = {{8, 0}, {6, 1}, {5, 2}, {4, 3}, {2, 4}, {0, 6}};
  const char* lower_text[6] = {"p>=8", "p>=6,q>=1", "p>=5,q>=2", "p>=4,q>=3", "p>=2,q>=4", "q>=6"};
  for (int i = 0; i < 6; ++i) {
    Exclusion e{lower_cases[i][0], lower_cases[i][1], 1, i + 1, "", false};
    Rational need = lo_tet * e.p + lo_quad * e.q;
    e.holds = need > 2 * c.pi_hi;
    e.reason = std::string(lower_text[i]) + ": minimum angle " + std::to_string(to_double(need)) + " > 2pi";
    out.push_back(e);
  }
  const int upper_cases[2][2] = {{3, 0}, {1, 1}};
  const char* upper_text[2] = {"p<=3,q=0", "p<=1,q=1"};
  for (int i = 0; i < 2; ++i) {
    Exclusion e{upper_cases[i][0], upper_cases[i][1], 1, i + 7, "", false};
    Rational room = hi_tet * e.p + hi_quad * e.q;
    e.holds = room < 2 * c.pi_lo;
    e.reason = std::string(upper_text[i]) + ": maximum angle " + std::to_string(to_double(room)) + " < 2pi";
    out.push_back(e);
  }
  const Rational budget_pt = c.budget_enc.hi / c.pt_enc.lo;
  const int budget_cases[7][2] = {{4, 2}, {3, 3}, {1, 4}, {1, 5}, {0, 5}, {0, 2}, {7, 0}};
  for (int i = 0; i < 7; ++i) {
    Exclusion e{budget_cases[i][0], budget_cases[i][1], 2, i + 1, "", false};
    Rational tau = table.at(e.p, e.q).weight_pt;
    std::string extra;
    if (e.p == 7) {
      // an all-triangle star is handled separately, so some quad adds t4
      tau += c.t4_q / c.pt_enc.hi;
      extra = " + t4";
    }
    e.holds = tau > budget_pt;
    e.reason = "tau" + extra + " = " + std::to_string(to_double(tau)) + " pt > budget " +
               std::to_string(to_double(budget_pt)) + " pt";
    out.push_back(e);
  }
  return out;
}

Lemma53Check verify_lemma53_k1() {
  const Catalog& cat = load_catalog();
  const auto& c = constants();
  Lemma53Check out;
  const Rational pt_lo = c.pt_enc.lo, pt_hi = c.pt_enc.hi;

  // some top edge is long: one tetrahedron gives 0.55 pt, the others are nonnegative
  out.tau_long_edge = parse_rational("0.55") * pt_lo;
  // score: one tetrahedron below 0.52 pt, four below pt each
  out.sigma_long_edge = (parse_rational("0.52") + 4) * pt_hi;

  auto five = [&](bool tau_mode) {
    LPProblem lp;
    lp.map_id = "vertex";
    lp.case_id = tau_mode ? "lemma-tau" : "lemma-sigma";
    std::vector<std::pair<int, Quantity>> angles;
    std::vector<std::pair<int, Rational>> obj;
    for (int i = 0; i < 5; ++i) {
      std::string name = "t" + std::to_string(i);
      int d = lp.add_var("dih[" + name + "]", -cat.lookup("G1.3").rhs, cat.lookup("G1.2").rhs);
      int v = lp.add_var((tau_mode ? "tau[" : "sigma[") + name + "]", tau_mode ? 0 : -5, tau_mode ? 5 : 1);
      angles.emplace_back(d, 1);
      obj.emplace_back(v, tau_mode ? -1 : 1);
      if (tau_mode) {
        for (const char* id : {"G5.3", "G3.6"})
          lp.add_le(std::string(id) + "[" + name + "]", tau_terms(cat.lookup(id), v, d), cat.lookup(id).rhs);
      } else {
        for (const char* id : {"G5.10", "G1.1"})
          lp.add_le(std::string(id) + "[" + name + "]", sigma_terms(cat.lookup(id), v, d), cat.lookup(id).rhs);
      }
    }
    lp.add_eq("angle-sum", angles, Quantity::of(Sym::Pi, 2));
    lp.set_objective(obj);
    SolveResult res = solve_max(lp);
    auto rep = check_certificate(lp, extract_certificate(lp, res));
    if (!rep.accepted) throw std::runtime_error("lemma LP certificate rejected: " + rep.failure);
    return tau_mode ? Rational(-rep.bound) : rep.bound;
  };
  out.tau_short_edges = five(true);
  out.sigma_short_edges = five(false);

  Rational tau_need = (parse_rational("0.55") - parse_rational("0.001")) * pt_hi;
  out.tau_ok = out.tau_long_edge >= tau_need && out.tau_short_edges >= tau_need;
  Rational sigma_cap = parse_rational("4.52") * pt_lo;
  out.sigma_ok = out.sigma_long_edge <= parse_rational("4.52") * pt_hi && out.sigma_short_edges <= sigma_cap;
  return out;
}

}  // namespace starbound
