#include "starbound/star.hpp"

#include "starbound/constants.hpp"
#include "starbound/simplex.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

namespace starbound {

const char* quad_type_name(QuadType t) {
  switch (t) {
    case QuadType::Any: return "any";
    case QuadType::Flat13: return "f13";
    case QuadType::Flat24: return "f24";
    case QuadType::Upright: return "up";
    case QuadType::TruncatedA: return "t13";
    case QuadType::TruncatedB: return "t24";
  }
  return "?";
}

const std::vector<QuadType>& quad_leaves() {
  static const std::vector<QuadType> v = {QuadType::Flat13, QuadType::Flat24, QuadType::Upright,
                                          QuadType::TruncatedA, QuadType::TruncatedB};
  return v;
}

std::vector<BranchCase> branch_quads(const PlanarMap& m) {
  const QuadType types[] = {QuadType::Flat13, QuadType::Flat24, QuadType::Upright, QuadType::TruncatedA};
  int r = m.count_faces_of_size(4);
  std::vector<BranchCase> out;
  std::vector<int> digit(r, 0);
  while (true) {
    BranchCase c;
    for (int d : digit) c.quads.push_back(types[d]);
    out.push_back(std::move(c));
    int i = 0;
    while (i < r && ++digit[i] == 4) digit[i++] = 0;
    if (i == r) break;
  }
  return out;
}

BranchCase parse_case_id(std::string_view id, int quads) {
  BranchCase c;
  c.quads.assign(quads, QuadType::Any);
  if (id == "base") return c;
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("bad case id '" + std::string(id) + "': " + why);
  };
  size_t pos = 0;
  while (pos <= id.size()) {
    size_t bar = id.find('|', pos);
    std::string_view part = id.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
    if (part.size() < 2 || part[1] != ':') throw fail("part '" + std::string(part) + "'");
    std::string body(part.substr(2));
    std::vector<std::string> items;
    char sep = part[0] == 'q' ? '.' : ',';
    size_t b = 0;
    while (b <= body.size()) {
      size_t e = body.find(sep, b);
      items.push_back(body.substr(b, e == std::string::npos ? std::string::npos : e - b));
      if (e == std::string::npos) break;
      b = e + 1;
    }
    if (part[0] == 'q') {
      if (static_cast<int>(items.size()) != quads) throw fail("quad count");
      for (int i = 0; i < quads; ++i) {
        bool found = false;
        for (QuadType t : {QuadType::Any, QuadType::Flat13, QuadType::Flat24, QuadType::Upright,
                           QuadType::TruncatedA, QuadType::TruncatedB})
          if (items[i] == quad_type_name(t)) {
            c.quads[i] = t;
            found = true;
          }
        if (!found) throw fail("quad type '" + items[i] + "'");
      }
    } else if (part[0] == 't') {
      for (const auto& it : items) {
        if (it.size() < 2 || (it.back() != 's' && it.back() != 'l')) throw fail("split '" + it + "'");
        TetSplit sp;
        try {
          sp.face = std::stoi(it.substr(0, it.size() - 1));
        } catch (const std::exception&) {
          throw fail("split '" + it + "'");
        }
        sp.short_perimeter = it.back() == 's';
        c.tet_splits.push_back(sp);
      }
    } else if (part[0] == 'i') {
      c.injected = items;
    } else {
      throw fail("part '" + std::string(part) + "'");
    }
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  return c;
}

std::string BranchCase::id() const {
  std::string out;
  bool any = false;
  for (QuadType t : quads) any = any || t != QuadType::Any;
  if (any) {
    out += "q:";
    for (size_t i = 0; i < quads.size(); ++i) out += (i ? "." : "") + std::string(quad_type_name(quads[i]));
  }
  if (!tet_splits.empty()) {
    if (!out.empty()) out += "|";
    out += "t:";
    for (size_t i = 0; i < tet_splits.size(); ++i)
      out += (i ? "," : "") + std::to_string(tet_splits[i].face) + (tet_splits[i].short_perimeter ? "s" : "l");
  }
  if (!injected.empty()) {
    if (!out.empty()) out += "|";
    out += "i:";
    for (size_t i = 0; i < injected.size(); ++i) out += (i ? "," : "") + injected[i];
  }
  return out.empty() ? "base" : out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Eliminated: return "eliminated";
    case Verdict::Survivor: return "survivor";
    case Verdict::Reference: return "reference-map";
  }
  return "?";
}

namespace {

using Terms = std::vector<std::pair<int, Quantity>>;

Quantity pi_q(long k = 1) { return Quantity::of(Sym::Pi, k); }
Quantity pt_q(const Rational& k) { return Quantity::of(Sym::Pt, k); }
Quantity dec(const char* s) { return Quantity(parse_rational(s)); }
Quantity two_sqrt2() { return Quantity::of(Sym::Sqrt2, 2); }

// Rows stated as boxes on the variables.
const std::set<std::string>& box_rows() {
  static const std::set<std::string> s = {"G1.1", "G1.2", "G1.3", "G1.7", "4.3.1", "4.3.2"};
  return s;
}

bool injectable(const std::string& id) { return id.rfind("A.8.", 0) == 0; }

struct Binding {
  std::array<int, kNumKinds> col;
  Binding() { col.fill(-1); }
  int& operator[](Kind k) { return col[static_cast<int>(k)]; }
  int operator[](Kind k) const { return col[static_cast<int>(k)]; }
};

class Builder {
 public:
  Builder(const Tightening& tight, StarLP& s) : tight_(tight), s_(s) {}

  int var(const std::string& name, Quantity lo, Quantity hi) {
    auto it = tight_.find(name);
    if (it != tight_.end()) {
      if (it->second.first > lo.upper()) lo = Quantity(it->second.first);
      if (it->second.second < hi.lower()) hi = Quantity(it->second.second);
    }
    return s_.lp.add_var(name, lo, hi);
  }

  ClusterContext context(const Binding& b, const std::vector<CondAtom>& facts) const {
    ClusterContext ctx;
    for (int k = 0; k < kNumKinds; ++k) {
      int c = b.col[k];
      if (c < 0) continue;
      ctx.bounds[static_cast<Kind>(k)] = {s_.lp.vars[c].lo, s_.lp.vars[c].hi};
    }
    ctx.facts = facts;
    return ctx;
  }

  // Adds the row under this labeling when every kind is bound and the condition is
  // implied. Returns whether the row (or an identical one) is present.
  bool instantiate(const Inequality& q, const Binding& b, const ClusterContext& ctx, const std::string& where) {
    Terms t;
    for (const auto& term : q.terms) {
      int c = b[term.kind];
      if (c < 0) return false;
      t.emplace_back(c, term.coef);
    }
    try {
      if (!applicable(q, ctx)) return false;
    } catch (const MissingBound&) {
      return false;
    }
    std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::string key;
    for (const auto& [c, coef] : t) key += std::to_string(c) + ":" + coef.str() + " ";
    key += "<= " + q.rhs.str();
    if (!seen_.insert(key).second) return true;
    s_.lp.add_le(q.id + "[" + where + "]", std::move(t), q.rhs);
    return true;
  }

  // All rows of a context under each labeling; A.8 rows only when injected.
  void cluster_rows(Context c, const std::vector<Binding>& labelings, const std::vector<CondAtom>& facts,
                    const std::string& where, const std::vector<std::string>& injected = {}) {
    for (const Inequality* q : load_catalog().in_context(c)) {
      if (box_rows().count(q->id)) continue;
      bool inj = injectable(q->id);
      if (inj && std::find(injected.begin(), injected.end(), q->id) == injected.end()) continue;
      bool any = false;
      for (const Binding& b : labelings) any = instantiate(*q, b, context(b, facts), where) || any;
      if (inj && !any) throw LPError("uncertified injection " + q->id + " at " + where);
    }
  }

  int edge(int u, int v) const { return s_.len.at({std::min(u, v), std::max(u, v)}); }

 private:
  const Tightening& tight_;
  StarLP& s_;
  std::set<std::string> seen_;
};

std::string fv(int f, int v) { return std::to_string(f) + "," + std::to_string(v); }

// Quarter (or half) labeling: apex a, base corners c1, c2, y4 = diagonal column.
Binding quarter_binding(Builder& b, const StarLP& s, int apex, int c1, int c2, int diag, int dih1, int dih2,
                        int dih3, int sol, int sigma) {
  Binding r;
  r[Kind::Y1] = s.height[apex];
  r[Kind::Y2] = s.height[c1];
  r[Kind::Y3] = s.height[c2];
  r[Kind::Y4] = diag;
  r[Kind::Y5] = b.edge(apex, c2);
  r[Kind::Y6] = b.edge(apex, c1);
  r[Kind::Dih1] = dih1;
  r[Kind::Dih2] = dih2;
  r[Kind::Dih3] = dih3;
  r[Kind::Sol] = sol;
  r[Kind::SolA] = sol;
  r[Kind::Sigma] = sigma;
  return r;
}

Binding mirror(Binding r) {
  std::swap(r[Kind::Y2], r[Kind::Y3]);
  std::swap(r[Kind::Y5], r[Kind::Y6]);
  std::swap(r[Kind::Dih2], r[Kind::Dih3]);
  return r;
}

const Quantity kSubLo = Quantity(-16), kSubHi = Quantity(2);

// Two simplices along the diagonal between corners d and d+2 of quad face f.
void split_quad(Builder& b, StarLP& s, const PlanarMap& m, int f, int d, bool truncated,
                const std::vector<std::string>& injected) {
  const auto& face = m.faces[f];
  int p0 = d, p2 = d + 2, o1 = d + 1, o3 = (d + 3) % 4;
  std::string tag = std::to_string(f);
  int diag = truncated ? b.var("diag[" + tag + "]", two_sqrt2(), dec("5.02"))
                       : b.var("diag[" + tag + "]", dec("2.51"), two_sqrt2());
  if (truncated) {
    int other = b.var("diag2[" + tag + "]", two_sqrt2(), dec("5.02"));
    s.lp.add_le("shorter-diagonal[" + tag + "]", {{diag, Quantity(1)}, {other, Quantity(-1)}}, Quantity(0));
  }
  Context ctx = truncated ? Context::Half : Context::Flat;
  std::vector<int> vor;
  std::array<std::array<int, 2>, 2> part{};  // part[k][0] at corner p0, part[k][1] at corner p2
  std::array<int, 2> qsig{};
  for (int k = 0; k < 2; ++k) {
    int apex = k == 0 ? o1 : o3;
    int c1 = k == 0 ? p0 : p2, c2 = k == 0 ? p2 : p0;
    std::string qt = tag + "," + std::to_string(k);
    int d2 = b.var("pdih[" + qt + "," + std::to_string(face[c1]) + "]", Quantity(0), pi_q());
    int d3 = b.var("pdih[" + qt + "," + std::to_string(face[c2]) + "]", Quantity(0), pi_q());
    part[k][c1 == p0 ? 0 : 1] = d2;
    part[k][c1 == p0 ? 1 : 0] = d3;
    int qsol = b.var("qsol[" + qt + "]", Quantity(0), pi_q(2));
    int sig = truncated ? -1 : b.var("qsig[" + qt + "]", kSubLo, kSubHi);
    qsig[k] = sig;
    int da = s.dih[f][apex];
    s.lp.add_eq("quarter-sol[" + qt + "]",
                {{qsol, Quantity(1)}, {da, Quantity(-1)}, {d2, Quantity(-1)}, {d3, Quantity(-1)}}, -pi_q());
    Binding lab = quarter_binding(b, s, face[apex], face[c1], face[c2], diag, da, d2, d3, qsol, sig);
    if (truncated) {
      lab[Kind::Sigma] = -1;
      lab[Kind::Vor0] = b.var("vor0[" + qt + "]", Quantity(-5), Quantity(9));
      vor.push_back(lab[Kind::Vor0]);
    }
    b.cluster_rows(ctx, {lab, mirror(lab)}, {}, (truncated ? "half:" : "flat:") + qt, injected);
  }
  s.lp.add_eq("quad-split[" + tag + "," + std::to_string(face[p0]) + "]",
              {{s.dih[f][p0], Quantity(1)}, {part[0][0], Quantity(-1)}, {part[1][0], Quantity(-1)}}, Quantity(0));
  s.lp.add_eq("quad-split[" + tag + "," + std::to_string(face[p2]) + "]",
              {{s.dih[f][p2], Quantity(1)}, {part[0][1], Quantity(-1)}, {part[1][1], Quantity(-1)}}, Quantity(0));
  if (truncated)
    s.lp.add_le("truncated-score[" + tag + "]",
                {{s.sigma[f], Quantity(1)}, {vor[0], Quantity(-1)}, {vor[1], Quantity(-1)}}, Quantity(0));
  else
    s.lp.add_eq("quad-score[" + tag + "]",
                {{s.sigma[f], Quantity(1)}, {qsig[0], Quantity(-1)}, {qsig[1], Quantity(-1)}}, Quantity(0));
}

// Four upright quarters around a diagonal from the origin through the quad.
void upright_quad(Builder& b, StarLP& s, const PlanarMap& m, int f) {
  const auto& face = m.faces[f];
  std::string tag = std::to_string(f);
  int up = b.var("up[" + tag + "]", dec("2.51"), two_sqrt2());
  std::array<int, 4> wv{}, udih{}, qsig{};
  std::array<std::array<int, 2>, 4> part{};  // part[i][0] at corner i, part[i][1] at corner i+1
  for (int i = 0; i < 4; ++i) wv[i] = b.var("wv[" + fv(f, face[i]) + "]", Quantity(2), dec("2.51"));
  for (int i = 0; i < 4; ++i) {
    int j = (i + 1) % 4;
    std::string qt = tag + "," + std::to_string(i);
    udih[i] = b.var("udih[" + qt + "]", Quantity(0), pi_q());
    part[i][0] = b.var("pdih[" + qt + "," + std::to_string(face[i]) + "]", Quantity(0), pi_q());
    part[i][1] = b.var("pdih[" + qt + "," + std::to_string(face[j]) + "]", Quantity(0), pi_q());
    int qsol = b.var("qsol[" + qt + "]", Quantity(0), pi_q(2));
    qsig[i] = b.var("qsig[" + qt + "]", kSubLo, kSubHi);
    s.lp.add_eq("quarter-sol[" + qt + "]",
                {{qsol, Quantity(1)}, {udih[i], Quantity(-1)}, {part[i][0], Quantity(-1)}, {part[i][1], Quantity(-1)}},
                -pi_q());
    Binding lab;
    lab[Kind::Y1] = up;
    lab[Kind::Y2] = s.height[face[i]];
    lab[Kind::Y3] = s.height[face[j]];
    lab[Kind::Y4] = b.edge(face[i], face[j]);
    lab[Kind::Y5] = wv[j];
    lab[Kind::Y6] = wv[i];
    lab[Kind::Dih1] = udih[i];
    lab[Kind::Dih2] = part[i][0];
    lab[Kind::Dih3] = part[i][1];
    lab[Kind::Sol] = qsol;
    lab[Kind::Sigma] = qsig[i];
    b.cluster_rows(Context::Upright, {lab, mirror(lab)}, {}, "upright:" + qt);
  }
  Terms around;
  for (int i = 0; i < 4; ++i) around.emplace_back(udih[i], Quantity(1));
  s.lp.add_eq("upright-angle-sum[" + tag + "]", around, pi_q(2));
  for (int i = 0; i < 4; ++i) {
    int prev = (i + 3) % 4;
    s.lp.add_eq("quad-split[" + fv(f, face[i]) + "]",
                {{s.dih[f][i], Quantity(1)}, {part[i][0], Quantity(-1)}, {part[prev][1], Quantity(-1)}}, Quantity(0));
  }
  Terms score{{s.sigma[f], Quantity(1)}};
  for (int i = 0; i < 4; ++i) score.emplace_back(qsig[i], Quantity(-1));
  s.lp.add_eq("quad-score[" + tag + "]", score, Quantity(0));
}

// Connected sets of up to k vertices of type (5,0), adjacency by a shared triangle.
std::vector<std::vector<int>> five_clusters(const PlanarMap& m, const std::vector<int>& five,
                                            const std::vector<std::vector<int>>& at, int k) {
  std::vector<std::vector<int>> out;
  auto share = [&](int u, int v) {
    for (int f : at[u])
      if (std::find(at[v].begin(), at[v].end(), f) != at[v].end()) return true;
    return false;
  };
  std::set<std::vector<int>> seen;
  std::function<void(std::vector<int>)> grow = [&](std::vector<int> cur) {
    std::vector<int> key = cur;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) return;
    out.push_back(key);
    if (static_cast<int>(cur.size()) >= k) return;
    for (int v : five) {
      if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
      bool adj = false;
      for (int u : cur) adj = adj || share(u, v);
      if (!adj) continue;
      auto next = cur;
      next.push_back(v);
      grow(next);
    }
  };
  (void)m;
  for (int v : five) grow({v});
  return out;
}

void vertex_rows(Builder& b, StarLP& s, const PlanarMap& m, const SquanderWeights& w, const StarOptions& opt) {
  const auto at = faces_at_vertices(m);
  const auto types = vertex_types(m);
  const Quantity zpt = Quantity::of(Sym::ZetaPt);
  auto corner = [&](int f, int v) {
    const auto& face = m.faces[f];
    return static_cast<int>(std::find(face.begin(), face.end(), v) - face.begin());
  };
  // tau_F = zpt*sol_F - sigma_F; these rows bound -tau sums from above
  auto neg_tau = [&](const std::vector<int>& faces) {
    Terms t;
    for (int f : faces) {
      t.emplace_back(s.sigma[f], Quantity(1));
      t.emplace_back(s.sol[f], -zpt);
    }
    return t;
  };

  if (opt.vertex_rows) {
    const Catalog& cat = load_catalog();
    for (int v = 0; v < m.num_vertices; ++v) {
      const char* id = types[v] == VertexType{4, 0, 0} ? "G4.1" : types[v] == VertexType{5, 0, 0} ? "G4.3" : nullptr;
      if (!id) continue;
      const Inequality& q = cat.lookup(id);
      Terms t;
      for (const auto& term : q.terms)
        for (int f : at[v]) {
          int c = term.kind == Kind::Sigma ? s.sigma[f] : term.kind == Kind::Sol ? s.sol[f] : s.dih[f][corner(f, v)];
          t.emplace_back(c, term.coef);
        }
      s.lp.add_le(std::string(id) + "[v" + std::to_string(v) + "]", t, q.rhs);
    }

    std::vector<int> five;
    for (int v = 0; v < m.num_vertices; ++v)
      if (types[v] == VertexType{5, 0, 0}) five.push_back(v);
    for (const auto& set : five_clusters(m, five, at, opt.lemma_subsets)) {
      std::set<int> faces;
      for (int v : set) faces.insert(at[v].begin(), at[v].end());
      std::vector<int> fl(faces.begin(), faces.end());
      int k = static_cast<int>(set.size());
      int r = static_cast<int>(fl.size());
      std::string tag = "five-group[";
      for (size_t i = 0; i < set.size(); ++i) tag += (i ? "," : "") + std::string("v") + std::to_string(set[i]);
      tag += "]";
      s.lp.add_le(tag + "/tau", neg_tau(fl), pt_q(Rational(-55, 100) * k));
      Terms sig;
      for (int f : fl) sig.emplace_back(s.sigma[f], Quantity(1));
      s.lp.add_le(tag + "/sigma", sig, pt_q(Rational(r) - Rational(48, 100) * k));
    }
  }

  if (opt.squander_rows) {
    for (int v = 0; v < m.num_vertices; ++v) {
      auto it = w.tau_pt.find({types[v].p, types[v].q});
      if (types[v].r != 0 || it == w.tau_pt.end()) continue;
      s.lp.add_le("vertex-squander[v" + std::to_string(v) + "]", neg_tau(at[v]), pt_q(-it->second));
    }
    SquanderResult sq = squander_bound(m, w);
    std::vector<int> faces;
    Rational total = 0;
    for (int v : sq.vertices) {
      faces.insert(faces.end(), at[v].begin(), at[v].end());
      total += w.tau_pt.at({types[v].p, types[v].q});
    }
    if (!sq.vertices.empty()) s.lp.add_le("separated-squander", neg_tau(faces), pt_q(-total));
  }
  (void)b;
}

}  // namespace

StarLP build_case_lp(const PlanarMap& m, const SquanderWeights& w, const BranchCase& c, const Tightening& tight,
                     const StarOptions& opt) {
  for (const auto& face : m.faces)
    if (face.size() != 3 && face.size() != 4)
      throw LPError("map " + m.id + " has a face of size " + std::to_string(face.size()));
  StarLP s;
  s.lp.map_id = m.id;
  s.lp.case_id = c.id();
  s.lp.vertices = m.num_vertices;
  s.lp.triangles = m.count_faces_of_size(3);
  Builder b(tight, s);
  const int nf = static_cast<int>(m.faces.size());

  for (int v = 0; v < m.num_vertices; ++v)
    s.height.push_back(b.var("h[" + std::to_string(v) + "]", Quantity(2), dec("2.51")));
  for (const auto& face : m.faces)
    for (size_t i = 0; i < face.size(); ++i) {
      int u = face[i], v = face[(i + 1) % face.size()];
      std::pair<int, int> e{std::min(u, v), std::max(u, v)};
      if (!s.len.count(e))
        s.len[e] = b.var("len[" + std::to_string(e.first) + "," + std::to_string(e.second) + "]", Quantity(2),
                         dec("2.51"));
    }
  s.dih.resize(nf);
  for (int f = 0; f < nf; ++f) {
    bool tri = m.faces[f].size() == 3;
    for (int v : m.faces[f])
      s.dih[f].push_back(tri ? b.var("dih[" + fv(f, v) + "]", dec("0.8638"), dec("1.874445"))
                             : b.var("dih[" + fv(f, v) + "]", dec("1.153"), dec("3.247")));
    s.sol.push_back(b.var("sol[" + std::to_string(f) + "]", Quantity(0), pi_q(2)));
    s.sigma.push_back(tri ? b.var("sigma[" + std::to_string(f) + "]", Quantity(-10), Quantity::of(Sym::Pt))
                          : b.var("sigma[" + std::to_string(f) + "]", Quantity(-10), Quantity(0)));
    if (!tri) s.quad_faces.push_back(f);
  }
  if (!c.quads.empty() && c.quads.size() != s.quad_faces.size())
    throw LPError("case " + c.id() + " assigns " + std::to_string(c.quads.size()) + " quads, map has " +
                  std::to_string(s.quad_faces.size()));

  // structural rows
  const auto at = faces_at_vertices(m);
  for (int v = 0; v < m.num_vertices; ++v) {
    Terms t;
    for (int f : at[v]) {
      const auto& face = m.faces[f];
      int i = static_cast<int>(std::find(face.begin(), face.end(), v) - face.begin());
      t.emplace_back(s.dih[f][i], Quantity(1));
    }
    s.lp.add_eq("angle-sum[v" + std::to_string(v) + "]", t, pi_q(2));
  }
  for (int f = 0; f < nf; ++f) {
    Terms t{{s.sol[f], Quantity(1)}};
    for (int d : s.dih[f]) t.emplace_back(d, Quantity(-1));
    s.lp.add_eq("sol-relation[" + std::to_string(f) + "]", t, pi_q(-static_cast<long>(m.faces[f].size() - 2)));
  }
  std::vector<std::pair<int, Rational>> obj;
  for (int f = 0; f < nf; ++f) obj.emplace_back(s.sigma[f], Rational(1));
  s.lp.set_objective(obj);

  // cluster rows
  std::map<int, bool> split;
  for (const auto& t : c.tet_splits) split[t.face] = t.short_perimeter;
  for (int f = 0; f < nf; ++f) {
    const auto& face = m.faces[f];
    if (face.size() == 3) {
      std::vector<CondAtom> facts;
      auto sp = split.find(f);
      if (sp != split.end()) {
        CondAtom a;
        a.terms = {{Kind::Y4, 1}, {Kind::Y5, 1}, {Kind::Y6, 1}};
        a.rel = sp->second ? Rel::Le : Rel::Ge;
        a.bound = dec("6.25");
        facts.push_back(a);
      }
      std::vector<Binding> labs;
      std::array<int, 3> perm{0, 1, 2};
      do {
        int a = face[perm[0]], bb = face[perm[1]], cc = face[perm[2]];
        Binding lab;
        lab[Kind::Y1] = s.height[a];
        lab[Kind::Y2] = s.height[bb];
        lab[Kind::Y3] = s.height[cc];
        lab[Kind::Y4] = b.edge(bb, cc);
        lab[Kind::Y5] = b.edge(a, cc);
        lab[Kind::Y6] = b.edge(a, bb);
        lab[Kind::Dih1] = s.dih[f][perm[0]];
        lab[Kind::Dih2] = s.dih[f][perm[1]];
        lab[Kind::Dih3] = s.dih[f][perm[2]];
        lab[Kind::Sol] = s.sol[f];
        lab[Kind::Sigma] = s.sigma[f];
        labs.push_back(lab);
      } while (std::next_permutation(perm.begin(), perm.end()));
      b.cluster_rows(Context::QRTet, labs, facts, "tet:" + std::to_string(f));
      if (sp != split.end() && sp->second)
        s.lp.add_le("perimeter[" + std::to_string(f) + "]",
                    {{b.edge(face[0], face[1]), Quantity(1)},
                     {b.edge(face[1], face[2]), Quantity(1)},
                     {b.edge(face[0], face[2]), Quantity(1)}},
                    dec("6.25"));
    } else {
      std::vector<Binding> labs;
      for (int i = 0; i < 4; ++i) {
        Binding lab;
        lab[Kind::Dih1] = s.dih[f][i];
        lab[Kind::Dih2] = s.dih[f][(i + 1) % 4];
        lab[Kind::Sol] = s.sol[f];
        lab[Kind::Sigma] = s.sigma[f];
        labs.push_back(lab);
      }
      b.cluster_rows(Context::Quad, labs, {}, "quad:" + std::to_string(f));
    }
  }
  for (size_t qi = 0; qi < c.quads.size(); ++qi) {
    int f = s.quad_faces[qi];
    switch (c.quads[qi]) {
      case QuadType::Any: break;
      case QuadType::Flat13: split_quad(b, s, m, f, 0, false, {}); break;
      case QuadType::Flat24: split_quad(b, s, m, f, 1, false, {}); break;
      case QuadType::Upright: upright_quad(b, s, m, f); break;
      case QuadType::TruncatedA: split_quad(b, s, m, f, 0, true, c.injected); break;
      case QuadType::TruncatedB: split_quad(b, s, m, f, 1, true, c.injected); break;
    }
  }
  if (!c.injected.empty()) {
    bool any_truncated = false;
    for (QuadType t : c.quads) any_truncated = any_truncated || t == QuadType::TruncatedA || t == QuadType::TruncatedB;
    if (!any_truncated) throw LPError("uncertified injection: case has no truncated quad");
  }

  vertex_rows(b, s, m, w, opt);
  s.lp.check();
  return s;
}

StarLP build_base_lp(const PlanarMap& m, const SquanderWeights& w, const StarOptions& opt) {
  return build_case_lp(m, w, BranchCase{}, {}, opt);
}

CaseResult solve_case(const LPProblem& lp, bool keep_dump) {
  CaseResult r;
  r.case_id = lp.case_id;
  if (keep_dump) r.lp_dump = dump_lp(lp);
  const double pt = constants().pt;
  const Rational target = score_target();
  for (double tol : {1e-9, 1e-11}) {
    SolveOptions so;
    so.tol = tol;
    SolveResult res = solve_max(lp, so);
    if (res.status == LPStatus::IterationLimit) {
      r.failure = "iteration limit";
      continue;
    }
    r.solved = true;
    r.infeasible = res.status == LPStatus::Infeasible;
    r.value_pt = r.infeasible ? -std::numeric_limits<double>::infinity() : res.value / pt;
    r.x = res.x;
    for (int digits : {12, 15}) {
      DualCertificate cert = extract_certificate(lp, res, digits);
      CertReport rep = check_certificate(lp, cert);
      if (!rep.accepted) {
        r.failure = rep.failure;
        continue;
      }
      r.cert = cert;
      r.failure.clear();
      if (r.infeasible) {
        r.eliminated = true;
      } else {
        r.bound = rep.bound;
        r.eliminated = rep.bound < target;
      }
      return r;
    }
  }
  return r;
}

LPProblem make_probe_lp(const StarLP& s, int column, bool maximize) {
  LPProblem lp = s.lp;
  lp.case_id += "|probe:" + std::string(maximize ? "max:" : "min:") + s.lp.vars.at(column).name;
  Terms t;
  for (int f : s.sigma) t.emplace_back(f, Quantity(-1));
  lp.add_le("score-hypothesis", t, pt_q(-8));
  lp.set_objective({{column, Rational(maximize ? 1 : -1)}});
  return lp;
}

ProbeResult probe_bound(const StarLP& s, int column, bool maximize) {
  ProbeResult out;
  out.lp = make_probe_lp(s, column, maximize);
  CaseResult r = solve_case(out.lp);
  out.cert = r.cert;
  if (!r.solved || !r.failure.empty()) return out;
  if (r.infeasible) {
    out.infeasible = true;
    return out;
  }
  if (r.bound) out.bound = maximize ? *r.bound : Rational(-*r.bound);
  return out;
}

std::optional<std::string> reference_name(const PlanarMap& m) {
  static const std::vector<std::pair<std::string, std::string>> refs = {
      {"fcc", canonical_form(fixtures::cuboctahedron())},
      {"hcp", canonical_form(fixtures::orthobicupola())},
      {"prism", canonical_form(fixtures::pentagonal_prism_star())}};
  std::string cf = canonical_form(m);
  for (const auto& [name, form] : refs)
    if (form == cf) return name;
  return std::nullopt;
}

std::vector<int> pick_split_faces(const StarLP& s, const std::vector<double>& x, int k) {
  // slack of the tetrahedron's score below its box cap pt; smallest slack first means
  // the face is scoring most, and splitting it moves the bound the most
  const double pt = constants().pt;
  std::vector<std::pair<double, int>> order;
  for (size_t f = 0; f < s.sigma.size(); ++f) {
    if (s.dih[f].size() != 3) continue;
    order.emplace_back(pt - x[s.sigma[f]], static_cast<int>(f));
  }
  std::sort(order.begin(), order.end());
  std::vector<int> out;
  for (int i = 0; i < k && i < static_cast<int>(order.size()); ++i) out.push_back(order[i].second);
  return out;
}

namespace {

struct TreeSearch {
  const PlanarMap& m;
  const SquanderWeights& w;
  const BranchOptions& opt;
  BoundReport& rep;

  bool budget_left() const { return rep.lp_solves < opt.max_lps; }

  CaseResult run(const BranchCase& c, const Tightening& tight, StarLP* keep = nullptr,
                 std::vector<double>* x = nullptr) {
    StarLP s = build_case_lp(m, w, c, tight, opt.star);
    CaseResult r = solve_case(s.lp, opt.keep_dumps);
    ++rep.lp_solves;
    if (x && r.solved && !r.infeasible) *x = r.x;
    if (keep) *keep = std::move(s);
    return r;
  }

  // Certified caps under the 8 pt hypothesis on heights, truncated diagonals and apex
  // angles. Returns false when a probe shows the hypothesis infeasible.
  bool probe(const BranchCase& c, const StarLP& s, Tightening& tight, CaseResult& infeasible_case) {
    std::vector<int> cols = s.height;
    for (size_t qi = 0; qi < c.quads.size(); ++qi) {
      if (c.quads[qi] != QuadType::TruncatedA && c.quads[qi] != QuadType::TruncatedB) continue;
      int f = s.quad_faces[qi];
      for (const char* pre : {"diag[", "diag2["}) cols.push_back(s.lp.find_var(pre + std::to_string(f) + "]"));
      for (int d : s.dih[f]) cols.push_back(d);
    }
    for (int c : cols) {
      if (!budget_left()) return true;
      ProbeResult p = probe_bound(s, c, true);
      ++rep.lp_solves;
      if (p.infeasible) {
        infeasible_case.case_id = p.lp.case_id;
        infeasible_case.solved = infeasible_case.infeasible = infeasible_case.eliminated = true;
        infeasible_case.cert = p.cert;
        if (opt.keep_dumps) infeasible_case.lp_dump = dump_lp(p.lp);
        return false;
      }
      if (!p.bound) continue;
      CaseResult sup;
      sup.case_id = p.lp.case_id;
      sup.solved = true;
      sup.bound = p.bound;
      sup.cert = p.cert;
      if (opt.keep_dumps) sup.lp_dump = dump_lp(p.lp);
      rep.supports.push_back(std::move(sup));
      const auto& name = s.lp.vars[c].name;
      auto it = tight.find(name);
      if (it == tight.end()) tight[name] = {s.lp.vars[c].lo.lower(), *p.bound};
      else it->second.second = min_q(it->second.second, *p.bound);
    }
    return true;
  }

  // A fully assigned quad case that failed: certify caps, inject the final-analysis
  // rows where their conditions now hold, then split tetrahedra.
  bool refine(BranchCase c, const CaseResult& failed) {
    if (!opt.probe_heights && opt.max_tet_splits == 0) {
      rep.cases.push_back(failed);
      return false;
    }
    Tightening tight;
    StarLP s;
    std::vector<double> x;
    if (opt.probe_heights) {
      s = build_case_lp(m, w, c, tight, opt.star);
      CaseResult dead;
      if (!probe(c, s, tight, dead)) {
        rep.cases.push_back(dead);
        return true;
      }
      for (const char* id : {"A.8.2", "A.8.3"}) {
        BranchCase t = c;
        t.injected.push_back(id);
        try {
          build_case_lp(m, w, t, tight, opt.star);
          c = t;
        } catch (const LPError&) {
        }
      }
    }
    if (!budget_left()) return false;
    CaseResult r = run(c, tight, &s, &x);
    if (r.eliminated) {
      rep.cases.push_back(r);
      return true;
    }
    if (opt.max_tet_splits == 0 || x.empty()) {
      rep.cases.push_back(r);
      return false;
    }
    std::vector<int> faces = pick_split_faces(s, x, opt.max_tet_splits);
    return split(c, tight, faces, 0);
  }

  bool split(const BranchCase& c, const Tightening& tight, const std::vector<int>& faces, size_t depth) {
    for (bool shortp : {true, false}) {
      if (!budget_left()) return false;
      BranchCase t = c;
      t.tet_splits.push_back({faces[depth], shortp});
      CaseResult r = run(t, tight);
      if (r.eliminated) {
        rep.cases.push_back(r);
        continue;
      }
      if (depth + 1 >= faces.size()) {
        rep.cases.push_back(r);
        return false;
      }
      if (!split(t, tight, faces, depth + 1)) return false;
    }
    return true;
  }

  bool quads(BranchCase c, size_t qi) {
    if (qi == c.quads.size()) return false;
    for (QuadType t : quad_leaves()) {
      if (!budget_left()) return false;
      c.quads[qi] = t;
      CaseResult r = run(c, {});
      if (r.eliminated) {
        rep.cases.push_back(r);
        continue;
      }
      bool ok = qi + 1 < c.quads.size() ? quads(c, qi + 1) : refine(c, r);
      if (!ok) return false;
    }
    return true;
  }
};

}  // namespace

BoundReport score_bound(const PlanarMap& m, const SquanderWeights& w, const StarOptions& opt) {
  BranchOptions b;
  b.quads = false;
  b.probe_heights = false;
  b.max_tet_splits = 0;
  b.star = opt;
  return bound_map(m, w, b);
}

BoundReport bound_map(const PlanarMap& m, const SquanderWeights& w, const BranchOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  BoundReport rep;
  rep.map_id = m.id;
  StarLP base = build_base_lp(m, w, opt.star);
  CaseResult r = solve_case(base.lp, opt.keep_dumps);
  rep.lp_solves = 1;
  rep.base_value_pt = r.value_pt;
  rep.base_bound = r.bound;
  rep.base_eliminated = r.eliminated;
  rep.cases.push_back(r);
  auto ref = reference_name(m);
  if (ref) {
    rep.verdict = Verdict::Reference;
    rep.reference_name = *ref;
    rep.note = "reference configuration, excluded from elimination";
  } else if (r.eliminated) {
    rep.verdict = Verdict::Eliminated;
  } else if (!r.failure.empty() && !r.solved) {
    rep.note = "unresolved: " + r.failure;
  } else {
    TreeSearch ts{m, w, opt, rep};
    bool done = false;
    if (opt.quads && !base.quad_faces.empty()) {
      BranchCase c;
      c.quads.assign(base.quad_faces.size(), QuadType::Any);
      rep.cases.erase(rep.cases.begin() + 1, rep.cases.end());
      done = ts.quads(c, 0);
    } else if (opt.probe_heights || opt.max_tet_splits > 0) {
      done = ts.refine(BranchCase{}, r);
    }
    if (done) {
      rep.verdict = Verdict::Eliminated;
    } else {
      if (!ts.budget_left()) rep.note = "LP budget exhausted";
      // failing leaf is last; keep the tree only when it certifies elimination
      if (rep.cases.size() > 1) {
        CaseResult last = rep.cases.back();
        rep.cases.erase(rep.cases.begin() + 1, rep.cases.end());
        rep.cases.push_back(last);
      }
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace starbound
