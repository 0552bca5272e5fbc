#include "starbound/catalog.hpp"

#include "starbound/constants.hpp"
#include "starbound/hash.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace starbound {

namespace {

constexpr const char* kContextNames[] = {"qrtet", "quad", "flat", "upright", "half", "vertex"};
constexpr const char* kKindNames[] = {"sigma", "sol", "dih1", "dih2", "dih3", "y1", "y2", "y3",
                                      "y4",    "y5",  "y6",   "quo",  "vor0", "solA", "Ad", "h"};

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, std::string_view sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t at = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, at == std::string_view::npos ? std::string_view::npos : at - pos)));
    if (at == std::string_view::npos) break;
    pos = at + sep.size();
  }
  return out;
}

}  // namespace

const char* context_name(Context c) { return kContextNames[static_cast<int>(c)]; }
const char* kind_name(Kind k) { return kKindNames[static_cast<int>(k)]; }

std::optional<Context> parse_context(std::string_view s) {
  for (int i = 0; i < 6; ++i)
    if (s == kContextNames[i]) return static_cast<Context>(i);
  return std::nullopt;
}

std::optional<Kind> parse_kind(std::string_view s) {
  for (int i = 0; i < kNumKinds; ++i)
    if (s == kKindNames[i]) return static_cast<Kind>(i);
  return std::nullopt;
}

const char* rel_text(Rel r) {
  switch (r) {
    case Rel::Le: return "<=";
    case Rel::Lt: return "<";
    case Rel::Ge: return ">=";
    case Rel::Gt: return ">";
  }
  return "?";
}

// ---------------------------------------------------------------- dsl

namespace dsl {

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;
  bool expand = true;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at column " + std::to_string(pos) + " in '" + std::string(s) + "'");
  }

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  static bool is_const(const Linear& l) { return l.vars.empty(); }

  Linear expr() {
    Linear acc = term();
    while (true) {
      if (eat('+')) {
        add(acc, term(), 1);
      } else if (eat('-')) {
        add(acc, term(), -1);
      } else {
        return acc;
      }
    }
  }

  static void add(Linear& a, const Linear& b, int sign) {
    for (const auto& [k, v] : b.vars) {
      Quantity& slot = a.vars[k];
      slot += Rational(sign) * v;
      if (slot.is_zero()) a.vars.erase(k);
    }
    a.constant += Rational(sign) * b.constant;
  }

  Linear term() {
    Linear acc = unary();
    while (eat('*')) acc = multiply(acc, unary());
    return acc;
  }

  Linear multiply(const Linear& a, const Linear& b) {
    const Linear* scalar = nullptr;
    const Linear* other = nullptr;
    if (is_const(a) && a.constant.is_rational()) {
      scalar = &a;
      other = &b;
    } else if (is_const(b) && b.constant.is_rational()) {
      scalar = &b;
      other = &a;
    } else {
      fail("product needs a rational factor");
    }
    Rational k = (*scalar).constant[Sym::One];
    Linear r = *other;
    for (auto& [name, v] : r.vars) v *= k;
    r.constant *= k;
    for (auto it = r.vars.begin(); it != r.vars.end();)
      it = it->second.is_zero() ? r.vars.erase(it) : std::next(it);
    return r;
  }

  Linear unary() {
    if (eat('-')) {
      Linear l = unary();
      for (auto& [k, v] : l.vars) v *= -1;
      l.constant *= -1;
      return l;
    }
    if (eat('+')) return unary();
    return atom();
  }

  Linear atom() {
    skip();
    if (eat('(')) {
      Linear l = expr();
      if (!eat(')')) fail("expected ')'");
      return l;
    }
    if (pos >= s.size()) fail("unexpected end");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t start = pos;
      while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) ++pos;
      Linear l;
      l.constant = Quantity(parse_rational(s.substr(start, pos - start)));
      return l;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
      return name(std::string(s.substr(start, pos - start)));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Linear var(const std::string& n, Quantity coef = Quantity(1)) {
    Linear l;
    l.vars[n] = coef;
    return l;
  }

  Linear name(const std::string& n) {
    Linear l;
    if (n == "pi") {
      l.constant = Quantity::of(Sym::Pi);
      return l;
    }
    if (n == "pt") {
      l.constant = Quantity::of(Sym::Pt);
      return l;
    }
    if (n == "sqrt2") {
      l.constant = Quantity::of(Sym::Sqrt2);
      return l;
    }
    if (n == "dih") return var("dih1");
    if (n == "sigma1" || n == "sigma32" || n == "tau") {
      if (!expand) return var(n);
      // sigma_lambda = sigma - lambda*zeta*pt*sol; tau = -sigma_1
      Rational lambda = n == "sigma32" ? Rational(16, 5) : Rational(1);
      l.vars["sigma"] = Quantity(1);
      l.vars["sol"] = Quantity::of(Sym::ZetaPt, -lambda);
      if (n == "tau") {
        for (auto& [k, v] : l.vars) v *= -1;
      }
      return l;
    }
    if (!parse_kind(n)) fail("unknown variable '" + n + "'");
    return var(n);
  }

  std::optional<Rel> relation() {
    skip();
    if (pos >= s.size()) return std::nullopt;
    if (s.compare(pos, 2, "<=") == 0) { pos += 2; return Rel::Le; }
    if (s.compare(pos, 2, ">=") == 0) { pos += 2; return Rel::Ge; }
    if (s[pos] == '<') { ++pos; return Rel::Lt; }
    if (s[pos] == '>') { ++pos; return Rel::Gt; }
    return std::nullopt;
  }
};

}  // namespace

Linear parse_expr(std::string_view text, bool expand) {
  Parser p{text, 0, expand};
  Linear l = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return l;
}

std::pair<Linear, Rel> parse_relation(std::string_view text, bool expand) {
  Parser p{text, 0, expand};
  Linear lhs = p.expr();
  auto rel = p.relation();
  if (!rel) p.fail("expected relation");
  Linear rhs = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  Parser::add(lhs, rhs, -1);
  return {lhs, *rel};
}

namespace {

std::vector<Term> to_terms(const Linear& l, std::string_view where) {
  std::vector<Term> out;
  for (const auto& [name, coef] : l.vars) {
    auto k = parse_kind(name);
    if (!k) throw std::invalid_argument("unexpanded variable '" + name + "' in " + std::string(where));
    out.push_back({*k, coef});
  }
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.kind < b.kind; });
  return out;
}

CondAtom parse_atom(std::string_view text) {
  auto [lin, rel] = parse_relation(text, false);
  CondAtom a;
  a.rel = rel;
  for (const auto& t : to_terms(lin, text)) {
    if (!t.coef.is_rational()) throw std::invalid_argument("irrational coefficient in condition '" + std::string(text) + "'");
    a.terms.emplace_back(t.kind, t.coef[Sym::One]);
  }
  if (a.terms.empty()) throw std::invalid_argument("condition without variables: '" + std::string(text) + "'");
  a.bound = -lin.constant;
  return a;
}

}  // namespace

Inequality parse_source_line(std::string_view line) {
  auto fields = split(line, "|");
  if (fields.size() != 4) throw std::invalid_argument("source line needs 4 fields: '" + std::string(line) + "'");
  Inequality q;
  q.id = fields[0];
  auto ctx = parse_context(fields[1]);
  if (!ctx) throw std::invalid_argument("unknown context '" + fields[1] + "'");
  q.context = *ctx;
  auto [lin, rel] = parse_relation(fields[2], true);
  if (rel == Rel::Ge || rel == Rel::Gt) {
    for (auto& [k, v] : lin.vars) v *= -1;
    lin.constant *= -1;
  }
  q.open = rel == Rel::Lt || rel == Rel::Gt;
  q.terms = to_terms(lin, fields[2]);
  if (q.terms.empty()) throw std::invalid_argument("row without variables: " + q.id);
  q.rhs = -lin.constant;
  if (fields[3] != "none") {
    for (const auto& atom : split(fields[3], "&")) q.condition.push_back(parse_atom(atom));
  }
  q.cite = fields[2] + (fields[3] == "none" ? "" : " if " + fields[3]);
  return q;
}

}  // namespace dsl

// ---------------------------------------------------------------- rows

std::string Inequality::group() const {
  if (id.rfind("A.6.", 0) == 0 && !id.empty() && id.back() == '\'') return "A.6'";
  auto dot = id.rfind('.');
  return dot == std::string::npos ? id : id.substr(0, dot);
}

const Quantity* Inequality::coef(Kind k) const {
  for (const auto& t : terms)
    if (t.kind == k) return &t.coef;
  return nullptr;
}

bool Inequality::operator==(const Inequality& o) const {
  return id == o.id && context == o.context && terms == o.terms && rhs == o.rhs && open == o.open &&
         condition == o.condition && cite == o.cite;
}

namespace {

bool nonneg(const Quantity& q, bool strict) {
  Rational lo = q.lower();
  return strict ? lo > 0 : lo >= 0;
}

bool same_terms(const CondAtom& a, const CondAtom& b, int sign) {
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].first != b.terms[i].first || a.terms[i].second != sign * b.terms[i].second) return false;
  return true;
}

bool upper_rel(Rel r) { return r == Rel::Le || r == Rel::Lt; }
bool strict_rel(Rel r) { return r == Rel::Lt || r == Rel::Gt; }

// Does fact f (assumed true) imply atom a? Both compare the same linear form.
bool fact_implies(const CondAtom& f, const CondAtom& a) {
  for (int sign : {1, -1}) {
    if (!same_terms(f, a, sign)) continue;
    // normalize f to the orientation of a
    Rel fr = f.rel;
    Quantity fb = f.bound;
    if (sign < 0) {
      fb = -fb;
      fr = fr == Rel::Le ? Rel::Ge : fr == Rel::Lt ? Rel::Gt : fr == Rel::Ge ? Rel::Le : Rel::Lt;
    }
    if (upper_rel(fr) != upper_rel(a.rel)) continue;
    // a: L <= b (or <). f: L <= fb (or <).
    Quantity gap = upper_rel(a.rel) ? a.bound - fb : fb - a.bound;
    bool need_strict = strict_rel(a.rel) && !strict_rel(fr);
    if (nonneg(gap, need_strict)) return true;
  }
  return false;
}

}  // namespace

bool implied(const CondAtom& atom, const ClusterContext& ctx) {
  for (const auto& f : ctx.facts)
    if (fact_implies(f, atom)) return true;
  Quantity extreme;
  bool up = upper_rel(atom.rel);
  for (const auto& [k, c] : atom.terms) {
    auto it = ctx.bounds.find(k);
    if (it == ctx.bounds.end()) throw MissingBound(std::string("no certified bound for ") + kind_name(k));
    const auto& [lo, hi] = it->second;
    bool take_hi = (c > 0) == up;
    extreme += c * (take_hi ? hi : lo);
  }
  Quantity gap = up ? atom.bound - extreme : extreme - atom.bound;
  return nonneg(gap, strict_rel(atom.rel));
}

bool applicable(const Inequality& ineq, const ClusterContext& ctx) {
  for (const auto& a : ineq.condition)
    if (!implied(a, ctx)) return false;
  return true;
}

// ---------------------------------------------------------------- catalog

Catalog::Catalog(std::vector<Inequality> rows) : rows_(std::move(rows)) {
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (!index_.emplace(rows_[i].id, i).second) throw std::runtime_error("duplicate catalogue id " + rows_[i].id);
  }
}

const Inequality* Catalog::find(std::string_view id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &rows_[it->second];
}

const Inequality& Catalog::lookup(std::string_view id) const {
  if (auto* r = find(id)) return *r;
  throw std::out_of_range("unknown catalogue id " + std::string(id));
}

std::vector<const Inequality*> Catalog::group(std::string_view g) const {
  std::vector<const Inequality*> out;
  for (const auto& r : rows_)
    if (r.group() == g) out.push_back(&r);
  return out;
}

std::vector<const Inequality*> Catalog::in_context(Context c) const {
  std::vector<const Inequality*> out;
  for (const auto& r : rows_)
    if (r.context == c) out.push_back(&r);
  return out;
}

namespace {

std::string atom_text(Context c, const CondAtom& a) {
  std::string s;
  for (const auto& [k, v] : a.terms) s += std::string(context_name(c)) + "." + kind_name(k) + ":" + to_string(v) + " ";
  s += rel_text(a.rel);
  s += " ";
  s += a.bound.str();
  return s;
}

}  // namespace

std::string Catalog::export_text() const {
  std::ostringstream out;
  for (const auto& r : rows_) {
    out << "ineq " << r.id << " ;";
    for (const auto& t : r.terms) out << ' ' << context_name(r.context) << '.' << kind_name(t.kind) << ':' << t.coef.str();
    out << " ; rhs " << r.rhs.str() << " ; sense " << (r.open ? "lt" : "le") << " ; cond ";
    if (r.condition.empty()) {
      out << "none";
    } else {
      for (size_t i = 0; i < r.condition.size(); ++i) out << (i ? " & " : "") << atom_text(r.context, r.condition[i]);
    }
    out << " ; cite " << r.cite << '\n';
  }
  return out.str();
}

namespace {

std::pair<Context, Kind> parse_var(std::string_view tok, std::string_view line) {
  auto dot = tok.find('.');
  if (dot == std::string_view::npos) throw std::invalid_argument("bad variable '" + std::string(tok) + "' in: " + std::string(line));
  auto c = parse_context(tok.substr(0, dot));
  auto k = parse_kind(tok.substr(dot + 1));
  if (!c || !k) throw std::invalid_argument("bad variable '" + std::string(tok) + "' in: " + std::string(line));
  return {*c, *k};
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace

Catalog Catalog::import_text(std::string_view text) {
  std::vector<Inequality> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto where = "line " + std::to_string(lineno);
    // cite is last and may not contain " ; "
    auto fields = split(t, " ; ");
    if (fields.size() != 6 || fields[0].rfind("ineq ", 0) != 0 || fields[2].rfind("rhs ", 0) != 0 ||
        fields[3].rfind("sense ", 0) != 0 || fields[4].rfind("cond ", 0) != 0 || fields[5].rfind("cite", 0) != 0)
      throw std::invalid_argument("malformed catalogue record at " + where);
    Inequality q;
    q.id = trim(fields[0].substr(5));
    bool have_ctx = false;
    for (const auto& tok : tokens(fields[1])) {
      auto colon = tok.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("bad term at " + where);
      auto [c, k] = parse_var(tok.substr(0, colon), t);
      if (have_ctx && c != q.context) throw std::invalid_argument("mixed contexts at " + where);
      q.context = c;
      have_ctx = true;
      q.terms.push_back({k, Quantity::parse(tok.substr(colon + 1))});
    }
    std::sort(q.terms.begin(), q.terms.end(), [](const Term& a, const Term& b) { return a.kind < b.kind; });
    q.rhs = Quantity::parse(trim(fields[2].substr(4)));
    std::string sense = trim(fields[3].substr(6));
    bool negate = false;
    if (sense == "le" || sense == "lt") {
      q.open = sense == "lt";
    } else if (sense == "ge" || sense == "gt") {
      q.open = sense == "gt";
      negate = true;
    } else {
      throw std::invalid_argument("bad sense at " + where);
    }
    if (negate) {
      for (auto& term : q.terms) term.coef *= -1;
      q.rhs *= -1;
    }
    std::string cond = trim(fields[4].substr(5));
    if (cond != "none") {
      for (const auto& atom : split(cond, "&")) {
        CondAtom a;
        auto toks = tokens(atom);
        size_t i = 0;
        for (; i < toks.size() && toks[i].find(':') != std::string::npos; ++i) {
          auto colon = toks[i].find(':');
          auto [c, k] = parse_var(std::string_view(toks[i]).substr(0, colon), t);
          (void)c;
          a.terms.emplace_back(k, parse_rational(std::string_view(toks[i]).substr(colon + 1)));
        }
        if (i + 2 != toks.size()) throw std::invalid_argument("bad condition at " + where);
        const std::string& r = toks[i];
        a.rel = r == "<=" ? Rel::Le : r == "<" ? Rel::Lt : r == ">=" ? Rel::Ge : r == ">" ? Rel::Gt
                : throw std::invalid_argument("bad relation at " + where);
        a.bound = Quantity::parse(toks[i + 1]);
        q.condition.push_back(std::move(a));
      }
    }
    q.cite = fields[5].size() > 5 ? fields[5].substr(5) : "";
    if (q.terms.empty()) throw std::invalid_argument("row without terms at " + where);
    rows.push_back(std::move(q));
  }
  return Catalog(std::move(rows));
}

std::string Catalog::version() const { return sha256_hex(export_text()).substr(0, 16); }

extern const char* const kCatalogSource;

bool kind_allowed(Context c, Kind k) {
  int i = static_cast<int>(k);
  bool dih = k == Kind::Dih1 || k == Kind::Dih2 || k == Kind::Dih3;
  bool edge = i >= static_cast<int>(Kind::Y1) && i <= static_cast<int>(Kind::Y6);
  switch (c) {
    case Context::QRTet:
    case Context::Flat:
    case Context::Upright: return k == Kind::Sigma || k == Kind::Sol || dih || edge;
    case Context::Quad: return k == Kind::Sigma || k == Kind::Sol || k == Kind::Dih1 || k == Kind::Dih2;
    case Context::Half:
      return dih || edge || k == Kind::Vor0 || k == Kind::SolA || k == Kind::Quo || k == Kind::Ad || k == Kind::H;
    case Context::Vertex: return k == Kind::Sigma || k == Kind::Sol || k == Kind::Dih1;
  }
  return false;
}

Catalog build_catalog() {
  std::vector<Inequality> rows;
  std::istringstream in{kCatalogSource};
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    Inequality q;
    try {
      q = dsl::parse_source_line(t);
    } catch (const std::exception& e) {
      throw std::runtime_error(std::string("catalogue self-check failed: ") + e.what());
    }
    for (const auto& term : q.terms)
      if (!kind_allowed(q.context, term.kind))
        throw std::runtime_error("catalogue self-check failed: " + q.id + " uses " + kind_name(term.kind));
    for (const auto& atom : q.condition)
      for (const auto& [kind, c] : atom.terms)
        if (!kind_allowed(q.context, kind))
          throw std::runtime_error("catalogue self-check failed: condition of " + q.id + " uses " + kind_name(kind));
    rows.push_back(std::move(q));
  }
  return Catalog(std::move(rows));
}

const Catalog& load_catalog() {
  static const Catalog cat = build_catalog();
  return cat;
}

std::vector<Inequality> truncation_rows(const Rational& h_max, const Rational& dih_min, const Rational& dih_max) {
  const auto& k = constants();
  if (!(h_max > 1 && h_max <= k.t0_q)) throw std::domain_error("truncation_rows: h_max outside (1, t0]");
  if (!(dih_min > 0 && dih_min <= dih_max)) throw std::domain_error("truncation_rows: bad dihedral range");
  Rational rho = (a_of_h_over_delta(h_max) - a_of_h_over_delta(Rational(1))) / (h_max - 1);
  Rational lambda_hi = (rho * k.delta_enc).hi;
  Rational a1_hi = a_of_h_enclosure(Rational(1)).hi;

  std::string range = " on h in [1, " + to_string(h_max) + "], dih in [" + to_string(dih_min) + ", " + to_string(dih_max) + "]";
  Inequality r5;
  r5.id = "A.4.5";
  r5.context = Context::Half;
  r5.terms = {{Kind::Dih1, Quantity(Rational(-a1_hi))}, {Kind::Ad, Quantity(1)}, {Kind::H, Quantity(Rational(-lambda_hi * dih_min))}};
  r5.rhs = Quantity(Rational(-lambda_hi * dih_min));
  r5.cite = "Ad - A(1) dih <= lambda (h - 1) dih_min" + range;

  Inequality r6;
  r6.id = "A.4.6";
  r6.context = Context::Half;
  r6.terms = {{Kind::Ad, Quantity(1)}, {Kind::H, Quantity(Rational(-lambda_hi * dih_max))}};
  r6.rhs = Quantity(Rational((a1_hi - lambda_hi) * dih_max));
  r6.cite = "Ad <= (A(1) + lambda (h - 1)) dih_max" + range;
  for (auto* r : {&r5, &r6})
    std::sort(r->terms.begin(), r->terms.end(), [](const Term& a, const Term& b) { return a.kind < b.kind; });
  return {r5, r6};
}

}  // namespace starbound
