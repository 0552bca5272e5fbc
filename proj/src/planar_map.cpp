#include "starbound/planar_map.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace starbound {

namespace {

// Face and position of every directed edge, indexed u * V + w; -1 when absent.
struct DartPos {
  int n = 0;
  std::vector<int> face;
  std::vector<int> pos;

  explicit DartPos(const PlanarMap& m) : n(m.num_vertices), face(size_t(n) * n, -1), pos(size_t(n) * n, -1) {
    for (size_t f = 0; f < m.faces.size(); ++f) {
      const auto& fc = m.faces[f];
      for (size_t i = 0; i < fc.size(); ++i) {
        int u = fc[i], w = fc[(i + 1) % fc.size()];
        face[size_t(u) * n + w] = int(f);
        pos[size_t(u) * n + w] = int(i);
      }
    }
  }
  int face_of(int u, int w) const { return face[size_t(u) * n + w]; }
};

std::string face_text(const std::vector<int>& f) {
  std::string s;
  for (int v : f) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

std::vector<std::vector<int>> rotations(const PlanarMap& m) {
  DartPos d(m);
  auto nb = neighbors(m);
  std::vector<std::vector<int>> rot(m.num_vertices);
  for (int v = 0; v < m.num_vertices; ++v) {
    if (nb[v].empty()) continue;
    int b = nb[v].front();
    for (size_t k = 0; k < nb[v].size(); ++k) {
      rot[v].push_back(b);
      int f = d.face_of(v, b);
      const auto& fc = m.faces[f];
      int i = d.pos[size_t(v) * d.n + b];
      b = fc[(i + fc.size() - 1) % fc.size()];
    }
  }
  return rot;
}

}  // namespace

int PlanarMap::num_edges() const {
  size_t s = 0;
  for (const auto& f : faces) s += f.size();
  return int(s / 2);
}

int PlanarMap::count_faces_of_size(int n) const {
  return int(std::count_if(faces.begin(), faces.end(), [n](const auto& f) { return int(f.size()) == n; }));
}

void check_structure(const PlanarMap& m) {
  const int n = m.num_vertices;
  if (n <= 0) throw MapError("empty map");
  if (!m.finished.empty() && m.finished.size() != m.faces.size()) throw MapError("finished flags do not match faces");
  std::vector<int> dart(size_t(n) * n, -1);
  std::vector<bool> used(n, false);
  for (size_t f = 0; f < m.faces.size(); ++f) {
    const auto& fc = m.faces[f];
    if (fc.size() < 3) throw MapError("face " + std::to_string(f) + " has fewer than 3 vertices");
    for (size_t i = 0; i < fc.size(); ++i) {
      if (fc[i] < 0 || fc[i] >= n) throw MapError("face " + std::to_string(f) + ": vertex out of range");
      if (fc[i] == fc[(i + 1) % fc.size()]) throw MapError("loop in face " + std::to_string(f) + " at vertex " + std::to_string(fc[i]));
      used[fc[i]] = true;
    }
    std::set<int> seen(fc.begin(), fc.end());
    if (seen.size() != fc.size()) throw MapError("duplicate vertex in face " + std::to_string(f) + ": " + face_text(fc));
    for (size_t i = 0; i < fc.size(); ++i) {
      int u = fc[i], w = fc[(i + 1) % fc.size()];
      int& slot = dart[size_t(u) * n + w];
      if (slot >= 0) {
        throw MapError("inconsistent edge pairing: " + std::to_string(u) + "->" + std::to_string(w) + " in faces " +
                       std::to_string(slot) + " and " + std::to_string(f));
      }
      slot = int(f);
    }
  }
  for (int u = 0; u < n; ++u) {
    if (!used[u]) throw MapError("vertex " + std::to_string(u) + " lies on no face");
    for (int w = 0; w < n; ++w) {
      if (dart[size_t(u) * n + w] >= 0 && dart[size_t(w) * n + u] < 0) {
        throw MapError("inconsistent edge pairing: " + std::to_string(u) + "->" + std::to_string(w) + " has no reverse");
      }
    }
  }
  auto nb = neighbors(m);
  auto rot = rotations(m);
  for (int v = 0; v < n; ++v) {
    std::set<int> cyc(rot[v].begin(), rot[v].end());
    if (cyc.size() != nb[v].size()) throw MapError("pinched vertex " + std::to_string(v));
  }
  const int e = m.num_edges(), f = int(m.faces.size());
  if (n - e + f != 2) {
    throw MapError("Euler failure: V - E + F = " + std::to_string(n - e + f));
  }
}

std::vector<std::vector<int>> neighbors(const PlanarMap& m) {
  std::vector<std::vector<int>> nb(m.num_vertices);
  for (const auto& f : m.faces) {
    for (size_t i = 0; i < f.size(); ++i) nb[f[i]].push_back(f[(i + 1) % f.size()]);
  }
  for (auto& l : nb) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return nb;
}

std::vector<std::vector<int>> faces_at_vertices(const PlanarMap& m) {
  std::vector<std::vector<int>> out(m.num_vertices);
  for (size_t f = 0; f < m.faces.size(); ++f) {
    for (int v : m.faces[f]) out[v].push_back(int(f));
  }
  return out;
}

std::vector<int> rotation(const PlanarMap& m, int v) { return rotations(m).at(v); }

VertexType vertex_type(const PlanarMap& m, int v) {
  if (v < 0 || v >= m.num_vertices) throw std::out_of_range("vertex out of range");
  VertexType t;
  for (const auto& f : m.faces) {
    if (std::find(f.begin(), f.end(), v) == f.end()) continue;
    if (f.size() == 3) ++t.p;
    else if (f.size() == 4) ++t.q;
    else ++t.r;
  }
  return t;
}

std::vector<VertexType> vertex_types(const PlanarMap& m) {
  std::vector<VertexType> t(m.num_vertices);
  for (const auto& f : m.faces) {
    for (int v : f) {
      if (f.size() == 3) ++t[v].p;
      else if (f.size() == 4) ++t[v].q;
      else ++t[v].r;
    }
  }
  return t;
}

// ---------------------------------------------------------------- text format

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

std::vector<PlanarMap> parse_archive(std::string_view text) {
  std::vector<PlanarMap> out;
  std::optional<PlanarMap> cur;
  int start_line = 0;
  int lineno = 0;
  size_t at = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw MapError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (at <= text.size()) {
    size_t nl = text.find('\n', at);
    std::string_view line = text.substr(at, nl == std::string_view::npos ? std::string_view::npos : nl - at);
    at = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "map") {
      if (cur) fail("map record not closed");
      if (tok.size() != 2) fail("expected: map <id>");
      cur = PlanarMap{};
      cur->id = tok[1];
      start_line = lineno;
    } else if (tok[0] == "face") {
      if (!cur) fail("face outside a map record");
      std::vector<int> f;
      for (size_t i = 1; i < tok.size(); ++i) {
        size_t used = 0;
        int v = -1;
        try {
          v = std::stoi(tok[i], &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != tok[i].size() || v < 0) fail("bad vertex '" + tok[i] + "'");
        f.push_back(v);
        cur->num_vertices = std::max(cur->num_vertices, v + 1);
      }
      if (f.size() < 3) fail("face needs at least 3 vertices");
      for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == f[(i + 1) % f.size()]) fail("loop at vertex " + std::to_string(f[i]));
      }
      if (std::set<int>(f.begin(), f.end()).size() != f.size()) fail("duplicate vertex in face");
      cur->faces.push_back(std::move(f));
    } else if (tok[0] == "end") {
      if (!cur) fail("end outside a map record");
      try {
        check_structure(*cur);
      } catch (const MapError& e) {
        throw MapError("map " + cur->id + " (line " + std::to_string(start_line) + "): " + e.what());
      }
      out.push_back(std::move(*cur));
      cur.reset();
    } else {
      fail("unknown directive '" + tok[0] + "'");
    }
  }
  if (cur) throw MapError("map " + cur->id + " (line " + std::to_string(start_line) + "): missing end");
  return out;
}

PlanarMap parse_map(std::string_view text) {
  auto maps = parse_archive(text);
  if (maps.size() != 1) throw MapError("expected exactly one map record, found " + std::to_string(maps.size()));
  return maps.front();
}

std::string serialize(const PlanarMap& m) {
  std::string s = "map " + (m.id.empty() ? std::string("-") : m.id) + "\n";
  for (const auto& f : m.faces) s += "face " + face_text(f) + "\n";
  return s + "end\n";
}

std::string serialize_archive(const std::vector<PlanarMap>& maps) {
  std::string s;
  for (const auto& m : maps) s += serialize(m);
  return s;
}

// ---------------------------------------------------------------- canonical form

namespace {

struct CodeResult {
  std::vector<int> code;
  std::vector<int> number;  // 1-based BFS numbers
};

// Breadth-first code rooted at dart u->w. Returns false as soon as the code exceeds `bound`.
bool bfs_code(const std::vector<std::vector<int>>& rot, const std::vector<std::vector<int>>& where, int u, int w,
              const std::vector<int>* bound, CodeResult& out) {
  const int n = int(rot.size());
  out.code.clear();
  out.number.assign(n, 0);
  std::vector<int> first(n, -1), queue;
  queue.reserve(n);
  out.number[u] = 1;
  first[u] = w;
  queue.push_back(u);
  int next = 2;
  bool tied = bound != nullptr;
  auto emit = [&](int x) {
    if (tied) {
      int b = (*bound)[out.code.size()];
      if (x > b) return false;
      if (x < b) tied = false;
    }
    out.code.push_back(x);
    return true;
  };
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    const auto& r = rot[v];
    int start = where[v][first[v]];
    for (size_t k = 0; k < r.size(); ++k) {
      int x = r[(start + k) % r.size()];
      if (out.number[x] == 0) {
        out.number[x] = next++;
        first[x] = v;
        queue.push_back(x);
      }
      if (!emit(out.number[x])) return false;
    }
    if (!emit(0)) return false;
  }
  return true;
}

struct Canon {
  std::vector<int> code;
  std::vector<int> number;
  bool mirrored = false;
};

Canon compute_canon(const PlanarMap& m) {
  check_structure(m);
  const int n = m.num_vertices;
  auto fwd = rotations(m);
  std::vector<std::vector<int>> rev(n);
  for (int v = 0; v < n; ++v) rev[v].assign(fwd[v].rbegin(), fwd[v].rend());
  auto index = [n](const std::vector<std::vector<int>>& rot) {
    std::vector<std::vector<int>> where(n, std::vector<int>(n, -1));
    for (int v = 0; v < n; ++v) {
      for (size_t i = 0; i < rot[v].size(); ++i) where[v][rot[v][i]] = int(i);
    }
    return where;
  };
  auto wf = index(fwd), wr = index(rev);
  Canon best;
  CodeResult cur;
  for (int mir = 0; mir < 2; ++mir) {
    const auto& rot = mir ? rev : fwd;
    const auto& where = mir ? wr : wf;
    for (int u = 0; u < n; ++u) {
      for (int w : rot[u]) {
        bool have = !best.code.empty();
        if (!bfs_code(rot, where, u, w, have ? &best.code : nullptr, cur)) continue;
        if (!have || cur.code < best.code) {
          best.code = cur.code;
          best.number = cur.number;
          best.mirrored = mir == 1;
        }
      }
    }
  }
  return best;
}

}  // namespace

std::string canonical_form(const PlanarMap& m) {
  Canon c = compute_canon(m);
  std::string s = std::to_string(m.num_vertices) + ":";
  for (size_t i = 0; i < c.code.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c.code[i]);
  }
  return s;
}

PlanarMap canonicalize(const PlanarMap& m) {
  Canon c = compute_canon(m);
  PlanarMap out;
  out.id = m.id;
  out.num_vertices = m.num_vertices;
  for (const auto& f : m.faces) {
    std::vector<int> g;
    for (int v : f) g.push_back(c.number[v] - 1);
    if (c.mirrored) std::reverse(g.begin(), g.end());
    std::rotate(g.begin(), std::min_element(g.begin(), g.end()), g.end());
    out.faces.push_back(std::move(g));
  }
  std::sort(out.faces.begin(), out.faces.end());
  return out;
}

// ---------------------------------------------------------------- admissibility

const std::vector<std::pair<int, int>>& allowed_types() {
  static const std::vector<std::pair<int, int>> t = {{6, 0}, {5, 0}, {4, 0}, {5, 1}, {4, 1}, {3, 1}, {2, 1},
                                                     {3, 2}, {2, 2}, {1, 2}, {2, 3}, {1, 3}, {0, 3}, {0, 4}};
  return t;
}

bool type_allowed(int p, int q) {
  const auto& t = allowed_types();
  return std::find(t.begin(), t.end(), std::make_pair(p, q)) != t.end();
}

DartIndex::DartIndex(const PlanarMap& m) : n_(m.num_vertices), face_(size_t(n_) * size_t(n_), -1) {
  for (size_t f = 0; f < m.faces.size(); ++f) {
    const auto& fc = m.faces[f];
    for (size_t i = 0; i < fc.size(); ++i) face_[size_t(fc[i]) * size_t(n_) + size_t(fc[(i + 1) % fc.size()])] = int(f);
  }
}

std::pair<std::vector<int>, std::vector<int>> cycle_sides(const PlanarMap& m, const std::vector<int>& cycle) {
  return cycle_sides(m, DartIndex(m), cycle);
}

std::pair<std::vector<int>, std::vector<int>> cycle_sides(const PlanarMap& m, const DartIndex& d,
                                                          const std::vector<int>& cycle) {
  const size_t k = cycle.size();
  std::set<std::pair<int, int>> cyc_edges;
  for (size_t i = 0; i < k; ++i) {
    int a = cycle[i], b = cycle[(i + 1) % k];
    if (d.face_of(a, b) < 0) throw std::invalid_argument("cycle uses a non-edge");
    cyc_edges.insert({std::min(a, b), std::max(a, b)});
  }
  std::vector<int> side(m.faces.size(), -1);
  std::vector<int> stack;
  for (size_t i = 0; i < k; ++i) {
    int a = cycle[i], b = cycle[(i + 1) % k];
    for (auto [f, s] : {std::pair{d.face_of(a, b), 0}, std::pair{d.face_of(b, a), 1}}) {
      if (side[f] == -1) {
        side[f] = s;
        stack.push_back(f);
      } else if (side[f] != s) {
        throw std::invalid_argument("cycle does not separate the sphere");
      }
    }
  }
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    const auto& fc = m.faces[f];
    for (size_t i = 0; i < fc.size(); ++i) {
      int a = fc[i], b = fc[(i + 1) % fc.size()];
      if (cyc_edges.count({std::min(a, b), std::max(a, b)})) continue;
      int g = d.face_of(b, a);
      if (side[g] == -1) {
        side[g] = side[f];
        stack.push_back(g);
      }
    }
  }
  std::set<int> on(cycle.begin(), cycle.end());
  std::set<int> s0, s1;
  for (size_t f = 0; f < m.faces.size(); ++f) {
    for (int v : m.faces[f]) {
      if (on.count(v)) continue;
      (side[f] == 0 ? s0 : s1).insert(v);
    }
  }
  return {{s0.begin(), s0.end()}, {s1.begin(), s1.end()}};
}

bool ValidationReport::has(int property) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.property == property; });
}

std::vector<int> max_weight_separated(const PlanarMap& m, const std::vector<double>& weight) {
  const int n = m.num_vertices;
  std::vector<int> cand;
  for (int v = 0; v < n; ++v)
    if (weight[v] > 0) cand.push_back(v);
  if (cand.empty()) return {};
  std::vector<std::vector<char>> conflict(n, std::vector<char>(n, 0));
  for (const auto& f : m.faces) {
    for (int a : f)
      for (int b : f) conflict[a][b] = 1;
  }
  std::sort(cand.begin(), cand.end(), [&](int a, int b) { return weight[a] > weight[b] || (weight[a] == weight[b] && a < b); });
  double best = 0;
  std::vector<int> chosen, best_set;
  // Branch on the heaviest open vertex: take it or drop it.
  auto search = [&](auto&& self, const std::vector<int>& open, double cur) -> void {
    if (cur > best) {
      best = cur;
      best_set = chosen;
    }
    double cap = cur;
    for (int v : open) cap += weight[v];
    if (open.empty() || cap <= best) return;
    int v = open.front();
    std::vector<int> rest;
    rest.reserve(open.size());
    for (size_t i = 1; i < open.size(); ++i)
      if (!conflict[v][open[i]]) rest.push_back(open[i]);
    chosen.push_back(v);
    self(self, rest, cur + weight[v]);
    chosen.pop_back();
    self(self, std::vector<int>(open.begin() + 1, open.end()), cur);
  };
  search(search, cand, 0.0);
  std::sort(best_set.begin(), best_set.end());
  return best_set;
}

SquanderResult squander_bound(const PlanarMap& m, const SquanderWeights& w, const std::vector<bool>* eligible) {
  const int n = m.num_vertices;
  SquanderResult res;
  for (size_t f = 0; f < m.faces.size(); ++f) {
    if (m.faces[f].size() == 4 && m.is_finished(f)) ++res.quads;
  }
  const double t4 = to_double(w.t4_pt.lo);
  std::vector<double> weight(n, 0.0);
  std::vector<VertexType> types = vertex_types(m);
  for (int v = 0; v < n; ++v) {
    if ((eligible && !(*eligible)[v]) || types[v].r) continue;
    auto it = w.tau_pt.find({types[v].p, types[v].q});
    if (it != w.tau_pt.end()) weight[v] = to_double(it->second) - t4 * types[v].q;
  }
  res.vertices = max_weight_separated(m, weight);
  Interval value = Rational(res.quads) * w.t4_pt;
  for (int v : res.vertices) {
    Rational tau = w.tau_pt.at({types[v].p, types[v].q});
    value = value + Interval{tau, tau} - Rational(types[v].q) * w.t4_pt;
  }
  res.value_pt = value;
  return res;
}

ValidationReport validate(const PlanarMap& m, const SquanderWeights* w) {
  ValidationReport rep;
  auto add = [&](int p, std::string msg, std::vector<int> wit) { rep.violations.push_back({p, std::move(msg), std::move(wit)}); };
  if (!m.finished.empty() && std::find(m.finished.begin(), m.finished.end(), false) != m.finished.end()) {
    throw std::invalid_argument("validate requires a finished map");
  }
  try {
    check_structure(m);
  } catch (const MapError& e) {
    add(1, e.what(), {});
    return rep;
  }
  for (const auto& f : m.faces) {
    if (f.size() != 3 && f.size() != 4) add(2, "face of size " + std::to_string(f.size()), f);
  }
  const int tri = m.count_faces_of_size(3), quad = m.count_faces_of_size(4);
  if (tri < 8) add(3, std::to_string(tri) + " triangles, need at least 8", {});
  if (quad < 1 || quad > 6) add(4, std::to_string(quad) + " quadrilaterals, need 1 to 6", {});
  for (int v = 0; v < m.num_vertices; ++v) {
    VertexType t = vertex_type(m, v);
    if (t.r || !type_allowed(t.p, t.q)) {
      add(5, "vertex type (" + std::to_string(t.p) + "," + std::to_string(t.q) + "," + std::to_string(t.r) + ") not allowed", {v});
    }
  }
  auto nb = neighbors(m);
  const int n = m.num_vertices;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v)
    for (int x : nb[v]) adj[v][x] = true;
  std::set<std::vector<int>> face_sets;
  for (const auto& f : m.faces) {
    std::vector<int> s = f;
    std::sort(s.begin(), s.end());
    face_sets.insert(s);
  }
  for (int a = 0; a < n; ++a) {
    for (int b : nb[a]) {
      if (b <= a) continue;
      for (int c : nb[b]) {
        if (c <= b || !adj[a][c]) continue;
        if (!face_sets.count({a, b, c})) add(6, "3-circuit bounds no face", {a, b, c});
      }
    }
  }
  // 4-circuits a-b-c-d with a the least vertex and b < d.
  DartIndex darts(m);
  for (int a = 0; a < n; ++a) {
    for (int b : nb[a]) {
      if (b <= a) continue;
      for (int c : nb[b]) {
        if (c <= a || c == b) continue;
        for (int d : nb[c]) {
          if (d <= b || d == a || d == c || !adj[d][a]) continue;
          std::vector<int> cyc{a, b, c, d};
          auto [s0, s1] = cycle_sides(m, darts, cyc);
          if (s0.empty() || s1.empty()) continue;
          bool ok = false;
          for (const auto* s : {&s0, &s1}) {
            if (s->size() != 1) continue;
            VertexType t = vertex_type(m, s->front());
            if (t.r == 0 && ((t.p == 4 && t.q == 0) || (t.p == 2 && t.q == 1))) ok = true;
          }
          if (!ok) {
            std::vector<int> wit = cyc;
            add(7, "4-circuit encloses " + std::to_string(s0.size()) + " and " + std::to_string(s1.size()) + " vertices", wit);
          }
        }
      }
    }
  }
  if (w) {
    SquanderResult sq = squander_bound(m, *w);
    if (sq.value_pt.lo > w->budget_pt.hi) {
      add(8, "squander " + std::to_string(to_double(sq.value_pt.lo)) + " pt exceeds the budget", sq.vertices);
    }
  }
  return rep;
}

// ---------------------------------------------------------------- fixtures

namespace fixtures {

namespace {
PlanarMap make(std::string id, int n, std::vector<std::vector<int>> faces) {
  PlanarMap m;
  m.id = std::move(id);
  m.num_vertices = n;
  m.faces = std::move(faces);
  check_structure(m);
  return m;
}
}  // namespace

PlanarMap tetrahedron() { return make("tetrahedron", 4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}); }

PlanarMap cube() {
  return make("cube", 8, {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}});
}

PlanarMap octahedron() {
  return make("octahedron", 6,
              {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}});
}

PlanarMap icosahedron() {
  // Apex 0, upper ring 1..5, lower ring 6..10, apex 11.
  std::vector<std::vector<int>> f;
  for (int i = 0; i < 5; ++i) {
    int u = 1 + i, u1 = 1 + (i + 1) % 5, l = 6 + i, l1 = 6 + (i + 1) % 5;
    f.push_back({0, u, u1});
    f.push_back({u, l, u1});
    f.push_back({u1, l, l1});
    f.push_back({11, l1, l});
  }
  return make("icosahedron", 12, f);
}

PlanarMap cuboctahedron() {
  return make("cuboctahedron", 12,
              {{1, 0, 2}, {1, 8, 3}, {4, 3, 11}, {5, 0, 4}, {5, 10, 6}, {7, 2, 6}, {9, 8, 7},
               {11, 9, 10}, {2, 0, 5, 6}, {3, 8, 9, 11}, {4, 0, 1, 3}, {7, 8, 1, 2}, {10, 9, 7, 6}, {11, 10, 5, 4}});
}

PlanarMap orthobicupola() {
  return make("orthobicupola", 12,
              {{1, 0, 9}, {4, 11, 5}, {5, 8, 4}, {6, 0, 1}, {7, 2, 3}, {7, 8, 6}, {10, 3, 2},
               {10, 9, 11}, {0, 6, 8, 5}, {3, 4, 8, 7}, {6, 1, 2, 7}, {9, 0, 5, 11}, {10, 2, 1, 9}, {10, 11, 4, 3}});
}

PlanarMap pentagonal_prism_star() {
  return make("pentagonal_prism_star", 12,
              {{1, 8, 7}, {2, 0, 6}, {3, 0, 2}, {4, 0, 3}, {5, 0, 4}, {6, 0, 5}, {9, 8, 1}, {10, 1, 11},
               {10, 9, 1}, {11, 1, 7}, {2, 7, 8, 3}, {3, 8, 9, 4}, {4, 9, 10, 5}, {5, 10, 11, 6}, {7, 2, 6, 11}});
}

}  // namespace fixtures

}  // namespace starbound
