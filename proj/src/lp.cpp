#include "starbound/lp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace starbound {

namespace {

bool has_space(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char ch) { return ch == ' ' || ch == '\t' || ch == '\n'; });
}

std::vector<std::pair<int, Quantity>> normalize(std::vector<std::pair<int, Quantity>> terms) {
  std::map<int, Quantity> merged;
  for (auto& [j, q] : terms) merged[j] += q;
  std::vector<std::pair<int, Quantity>> out;
  for (auto& [j, q] : merged)
    if (!q.is_zero()) out.emplace_back(j, std::move(q));
  return out;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::pair<int, std::string_view> split_term(std::string_view tok) {
  auto colon = tok.find(':');
  if (colon == std::string_view::npos) throw LPError("term without ':': " + std::string(tok));
  return {std::stoi(std::string(tok.substr(0, colon))), tok.substr(colon + 1)};
}

}  // namespace

int LPProblem::add_var(std::string name, Quantity lo, Quantity hi) {
  vars.push_back({std::move(name), std::move(lo), std::move(hi)});
  return num_vars() - 1;
}

void LPProblem::add_le(std::string tag, std::vector<std::pair<int, Quantity>> terms, Quantity rhs) {
  auto t = normalize(std::move(terms));
  if (t.empty() && rhs.lower() >= 0) return;
  rows.push_back({std::move(tag), std::move(t), std::move(rhs)});
}

void LPProblem::add_ge(std::string tag, std::vector<std::pair<int, Quantity>> terms, Quantity rhs) {
  for (auto& [j, q] : terms) q = -q;
  add_le(std::move(tag), std::move(terms), -rhs);
}

void LPProblem::add_eq(const std::string& tag, std::vector<std::pair<int, Quantity>> terms, Quantity rhs) {
  add_le(tag, terms, rhs);
  add_ge(tag + "/ge", std::move(terms), std::move(rhs));
}

void LPProblem::set_objective(std::vector<std::pair<int, Rational>> c) {
  std::map<int, Rational> merged;
  for (auto& [j, r] : c) merged[j] += r;
  objective.clear();
  for (auto& [j, r] : merged)
    if (r != 0) objective.emplace_back(j, r);
}

int LPProblem::find_var(std::string_view name) const {
  for (int j = 0; j < num_vars(); ++j)
    if (vars[j].name == name) return j;
  return -1;
}

void LPProblem::check() const {
  if (map_id.empty() || case_id.empty() || has_space(map_id) || has_space(case_id))
    throw LPError("map and case ids must be non-empty words");
  for (const auto& v : vars) {
    if (v.name.empty() || has_space(v.name)) throw LPError("bad variable name '" + v.name + "'");
    if (v.lo.upper() > v.hi.lower() && v.lo != v.hi) throw LPError("inverted box on " + v.name);
  }
  auto col_ok = [&](int j) { return j >= 0 && j < num_vars(); };
  for (const auto& r : rows) {
    if (r.tag.empty() || has_space(r.tag)) throw LPError("row without a tag");
    for (const auto& [j, q] : r.terms)
      if (!col_ok(j)) throw LPError("row " + r.tag + " references column " + std::to_string(j));
  }
  for (const auto& [j, c] : objective)
    if (!col_ok(j)) throw LPError("objective references column " + std::to_string(j));
}

std::string dump_lp(const LPProblem& lp) {
  std::ostringstream out;
  out << "lp " << lp.map_id << ' ' << lp.case_id << '\n';
  out << "meta triangles " << lp.triangles << " vertices " << lp.vertices << '\n';
  for (const auto& v : lp.vars) out << "var " << v.name << ' ' << v.lo.str() << ' ' << v.hi.str() << '\n';
  out << "obj";
  for (const auto& [j, c] : lp.objective) out << ' ' << j << ':' << to_string(c);
  out << '\n';
  for (const auto& r : lp.rows) {
    out << "row " << r.tag << ' ' << r.rhs.str();
    for (const auto& [j, q] : r.terms) out << ' ' << j << ':' << q.str();
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

LPProblem parse_lp(std::string_view text) {
  LPProblem lp;
  bool header = false, ended = false;
  int line_no = 0;
  size_t pos = 0;
  while (pos < text.size() && !ended) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    auto tok = split(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    try {
      if (tok[0] == "lp" && tok.size() == 3) {
        lp.map_id = tok[1];
        lp.case_id = tok[2];
        header = true;
      } else if (!header) {
        throw LPError("expected 'lp <map> <case>'");
      } else if (tok[0] == "meta" && tok.size() == 5 && tok[1] == "triangles" && tok[3] == "vertices") {
        lp.triangles = std::stoi(std::string(tok[2]));
        lp.vertices = std::stoi(std::string(tok[4]));
      } else if (tok[0] == "var" && tok.size() == 4) {
        lp.add_var(std::string(tok[1]), Quantity::parse(tok[2]), Quantity::parse(tok[3]));
      } else if (tok[0] == "obj") {
        std::vector<std::pair<int, Rational>> c;
        for (size_t i = 1; i < tok.size(); ++i) {
          auto [j, s] = split_term(tok[i]);
          c.emplace_back(j, parse_rational(s));
        }
        lp.set_objective(std::move(c));
      } else if (tok[0] == "row" && tok.size() >= 3) {
        LPRow r;
        r.tag = tok[1];
        r.rhs = Quantity::parse(tok[2]);
        for (size_t i = 3; i < tok.size(); ++i) {
          auto [j, s] = split_term(tok[i]);
          r.terms.emplace_back(j, Quantity::parse(s));
        }
        lp.rows.push_back(std::move(r));
      } else if (tok[0] == "end") {
        ended = true;
      } else {
        throw LPError("unrecognized line");
      }
    } catch (const std::exception& e) {
      throw LPError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!ended) throw LPError("missing end");
  lp.check();
  return lp;
}

double objective_value(const LPProblem& lp, const std::vector<double>& x) {
  double s = 0;
  for (const auto& [j, c] : lp.objective) s += c.get_d() * x.at(j);
  return s;
}

double max_violation(const LPProblem& lp, const std::vector<double>& x) {
  double worst = 0;
  for (int j = 0; j < lp.num_vars(); ++j) {
    worst = std::max(worst, lp.vars[j].lo.value() - x[j]);
    worst = std::max(worst, x[j] - lp.vars[j].hi.value());
  }
  for (const auto& r : lp.rows) {
    double s = 0;
    for (const auto& [j, q] : r.terms) s += q.value() * x[j];
    worst = std::max(worst, s - r.rhs.value());
  }
  return worst;
}

}  // namespace starbound
