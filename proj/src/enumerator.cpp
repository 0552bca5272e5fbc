#include "starbound/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace starbound {

std::vector<ExtensionTuple> tuples(int ell, int m) {
  std::vector<ExtensionTuple> out;
  if (ell < 2 || m < 3) return out;
  std::vector<int> a(m, 1);
  a[m - 1] = ell;
  // a[1..m-2] nondecreasing in [1, ell-1].
  std::function<void(int)> rec = [&](int i) {
    if (i == m - 1) {
      out.push_back({m, a});
      return;
    }
    for (int x = a[i - 1]; x <= ell - 1; ++x) {
      a[i] = x;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

const char* reject_name(Reject r) {
  switch (r) {
    case Reject::None: return "none";
    case Reject::VertexCap: return "vertex-cap";
    case Reject::MultiJoin: return "multi-join";
    case Reject::Degree: return "degree";
    case Reject::Circuit3: return "3-circuit";
    case Reject::Circuit4: return "4-circuit";
    case Reject::VertexType: return "vertex-type";
    case Reject::QuadCount: return "quad-count";
    case Reject::Budget: return "budget";
    case Reject::Count_: break;
  }
  return "?";
}

namespace {

bool type_reachable(int p, int q, int unfinished) {
  if (unfinished == 0) return type_allowed(p, q);
  for (auto [tp, tq] : allowed_types()) {
    if (tp >= p && tq >= q && tp + tq >= p + q + unfinished) return true;
  }
  return false;
}

ExtendResult rejected(Reject r) { return {std::nullopt, r}; }

}  // namespace

ExtendResult extend(const PartialMap& partial, size_t face, size_t edge, const ExtensionTuple& t, const EnumConfig& cfg) {
  const PlanarMap& old = partial.map;
  if (old.is_finished(face)) throw std::invalid_argument("extend: face is finished");
  const auto& F = old.faces.at(face);
  const int ell = int(F.size());
  const int m = t.m;
  auto f = [&](int i) { return F[(edge + size_t(i)) % size_t(ell)]; };  // 1-based corner

  int n = old.num_vertices;
  std::vector<int> v(m);
  std::vector<bool> fresh(m, false);
  for (int i = 0; i < m; ++i) {
    if (i == 0 || t.a[i] != t.a[i - 1]) {
      v[i] = f(t.a[i]);
    } else {
      v[i] = n++;
      fresh[i] = true;
    }
  }
  if (n > cfg.max_vertices) return rejected(Reject::VertexCap);

  auto old_nb = neighbors(old);
  auto adjacent = [&](int x, int y) {
    return x < old.num_vertices && y < old.num_vertices && std::binary_search(old_nb[x].begin(), old_nb[x].end(), y);
  };

  PartialMap next;
  PlanarMap& nm = next.map;
  nm.id = old.id;
  nm.num_vertices = n;
  for (size_t g = 0; g < old.faces.size(); ++g) {
    if (g == face) continue;
    nm.faces.push_back(old.faces[g]);
    nm.finished.push_back(old.is_finished(g));
  }
  nm.faces.push_back(v);
  nm.finished.push_back(true);

  std::vector<std::pair<int, int>> new_edges;
  for (int i = 0; i + 1 < m; ++i) {
    int x = v[i], y = v[i + 1];
    if (fresh[i] || fresh[i + 1]) {
      new_edges.push_back({x, y});
    } else if (t.a[i + 1] > t.a[i] + 1) {
      if (adjacent(x, y)) return rejected(Reject::MultiJoin);
      new_edges.push_back({x, y});
    }
  }

  std::vector<int> touch;
  for (int i = 0; i < m; ++i)
    if (!fresh[i]) touch.push_back(i);
  for (size_t j = 0; j + 1 < touch.size(); ++j) {
    int i0 = touch[j], i1 = touch[j + 1];
    int alpha = t.a[i0], beta = t.a[i1];
    std::vector<int> poly;
    for (int k = alpha; k <= beta; ++k) poly.push_back(f(k));
    for (int k = i1 - 1; k > i0; --k) poly.push_back(v[k]);
    if (poly.size() < 3) continue;
    nm.finished.push_back(poly.size() == 3);
    nm.faces.push_back(std::move(poly));
  }

  auto nb = neighbors(nm);
  for (int x = 0; x < n; ++x)
    if (nb[x].size() > 6) return rejected(Reject::Degree);

  if (cfg.admissible_prune) {
    int quads = 0;
    for (size_t g = 0; g < nm.faces.size(); ++g)
      if (nm.finished[g] && nm.faces[g].size() == 4) ++quads;
    if (quads > 6) return rejected(Reject::QuadCount);
    std::vector<int> p(n, 0), q(n, 0), u(n, 0);
    for (size_t g = 0; g < nm.faces.size(); ++g) {
      for (int x : nm.faces[g]) {
        if (!nm.finished[g]) ++u[x];
        else if (nm.faces[g].size() == 3) ++p[x];
        else if (nm.faces[g].size() == 4) ++q[x];
        else return rejected(Reject::VertexType);
      }
    }
    for (int x = 0; x < n; ++x)
      if (!type_reachable(p[x], q[x], u[x])) return rejected(Reject::VertexType);
  }

  auto adj = [&](int x, int y) { return std::binary_search(nb[x].begin(), nb[x].end(), y); };
  std::set<std::array<int, 3>> tri_faces;
  for (const auto& g : nm.faces) {
    if (g.size() != 3) continue;
    std::array<int, 3> s{g[0], g[1], g[2]};
    std::sort(s.begin(), s.end());
    tri_faces.insert(s);
  }
  for (auto [x, y] : new_edges) {
    for (int z : nb[x]) {
      if (z == y || !adj(y, z)) continue;
      std::array<int, 3> s{x, y, z};
      std::sort(s.begin(), s.end());
      if (!tri_faces.count(s)) return rejected(Reject::Circuit3);
    }
  }
  std::optional<DartIndex> darts;
  auto circuit4_bad = [&](int x, int y, int z, int w) {
    if (!darts) darts.emplace(nm);
    // A quadrilateral face on either side needs no further work.
    int f0 = darts->face_of(x, y);
    if (f0 == darts->face_of(y, z) && f0 == darts->face_of(z, w) && f0 == darts->face_of(w, x)) return false;
    int f1 = darts->face_of(y, x);
    if (f1 == darts->face_of(z, y) && f1 == darts->face_of(w, z) && f1 == darts->face_of(x, w)) return false;
    auto [s0, s1] = cycle_sides(nm, *darts, {x, y, z, w});
    return s0.size() >= 2 && s1.size() >= 2;
  };
  if (n > old.num_vertices) {
    // Fresh vertices can enlarge a side of any existing circuit.
    for (int x = 0; x < n; ++x)
      for (int y : nb[x]) {
        if (y <= x) continue;
        for (int z : nb[y]) {
          if (z <= x) continue;
          for (int w : nb[z]) {
            if (w <= y || w == x || !adj(w, x)) continue;
            if (circuit4_bad(x, y, z, w)) return rejected(Reject::Circuit4);
          }
        }
      }
  } else {
    for (auto [x, y] : new_edges) {
      for (int z : nb[y]) {
        if (z == x) continue;
        for (int w : nb[z]) {
          if (w == x || w == y || !adj(w, x)) continue;
          if (circuit4_bad(x, y, z, w)) return rejected(Reject::Circuit4);
        }
      }
    }
  }
  return {std::move(next), Reject::None};
}

bool budget_prune(PartialMap& partial, const SquanderWeights& w) {
  const PlanarMap& m = partial.map;
  std::vector<bool> eligible(m.num_vertices, true);
  for (size_t g = 0; g < m.faces.size(); ++g) {
    if (m.is_finished(g)) continue;
    for (int x : m.faces[g]) eligible[x] = false;
  }
  SquanderResult sq = squander_bound(m, w, &eligible);
  partial.budget_pt = sq.value_pt;
  return !(sq.value_pt.lo > w.budget_pt.hi);
}

bool reachable_budget_prune(PartialMap& partial, const SquanderWeights& w) {
  const PlanarMap& m = partial.map;
  const int n = m.num_vertices;
  std::vector<int> p(n, 0), q(n, 0), u(n, 0);
  int quads = 0;
  for (size_t g = 0; g < m.faces.size(); ++g) {
    bool fin = m.is_finished(g);
    if (fin && m.faces[g].size() == 4) ++quads;
    for (int x : m.faces[g]) {
      if (!fin) ++u[x];
      else if (m.faces[g].size() == 3) ++p[x];
      else if (m.faces[g].size() == 4) ++q[x];
    }
  }
  const double t4 = to_double(w.t4_pt.lo);
  std::vector<std::optional<Rational>> cheapest(n);
  std::vector<double> weight(n, 0.0);
  for (int x = 0; x < n; ++x) {
    for (auto [tp, tq] : allowed_types()) {
      bool reach = u[x] == 0 ? (tp == p[x] && tq == q[x]) : (tp >= p[x] && tq >= q[x] && tp + tq >= p[x] + q[x] + u[x]);
      if (!reach) continue;
      auto it = w.tau_pt.find({tp, tq});
      Rational tau = it == w.tau_pt.end() ? Rational(0) : it->second;
      if (!cheapest[x] || tau < *cheapest[x]) cheapest[x] = tau;
    }
    if (cheapest[x]) weight[x] = to_double(*cheapest[x]) - t4 * q[x];
  }
  Interval value = Rational(quads) * w.t4_pt;
  for (int x : max_weight_separated(m, weight)) {
    value = value + Interval{*cheapest[x], *cheapest[x]} - Rational(q[x]) * w.t4_pt;
  }
  partial.budget_pt = value;
  return !(value.lo > w.budget_pt.hi);
}

PartialMap seed() {
  PartialMap s;
  s.map.id = "seed";
  s.map.num_vertices = 4;
  s.map.faces = {{0, 1, 2, 3}, {3, 2, 1, 0}};
  s.map.finished = {true, false};
  return s;
}

namespace {

bool all_finished(const PlanarMap& m) {
  return std::all_of(m.finished.begin(), m.finished.end(), [](bool b) { return b; });
}

// Smallest unfinished face; ties and the edge go to the lowest vertex pair.
std::pair<size_t, size_t> choose(const PlanarMap& m) {
  size_t best_f = SIZE_MAX, best_e = 0;
  std::pair<int, int> best_key{INT32_MAX, INT32_MAX};
  for (size_t g = 0; g < m.faces.size(); ++g) {
    if (m.finished[g]) continue;
    const auto& fc = m.faces[g];
    if (best_f != SIZE_MAX && fc.size() > m.faces[best_f].size()) continue;
    bool smaller = best_f == SIZE_MAX || fc.size() < m.faces[best_f].size();
    for (size_t i = 0; i < fc.size(); ++i) {
      int a = fc[i], b = fc[(i + 1) % fc.size()];
      std::pair<int, int> key{std::min(a, b), std::max(a, b)};
      if (smaller || key < best_key) {
        best_f = g;
        best_e = i;
        best_key = key;
        smaller = false;
      }
    }
  }
  return {best_f, best_e};
}

struct Worker {
  const EnumConfig& cfg;
  EnumStats stats;
  std::map<std::string, PlanarMap> found;

  explicit Worker(const EnumConfig& c) : cfg(c) {}

  // Children of one node; finished ones are recorded, the rest returned.
  std::vector<PartialMap> expand(const PartialMap& node) {
    ++stats.nodes;
    std::vector<PartialMap> out;
    auto [face, edge] = choose(node.map);
    const int ell = int(node.map.faces[face].size());
    for (int msize : cfg.face_sizes) {
      for (const auto& t : tuples(ell, msize)) {
        ++stats.extensions;
        auto r = extend(node, face, edge, t, cfg);
        if (!r.map) {
          ++stats.rejected[size_t(r.reason)];
          continue;
        }
        bool keep = !cfg.budget_prune ||
                    (cfg.admissible_prune ? reachable_budget_prune(*r.map, cfg.weights) : budget_prune(*r.map, cfg.weights));
        if (!keep) {
          ++stats.rejected[size_t(Reject::Budget)];
          continue;
        }
        if (all_finished(r.map->map)) {
          ++stats.finished;
          PlanarMap fm = r.map->map;
          fm.finished.clear();
          std::string key = canonical_form(fm);
          if (!found.count(key)) found.emplace(std::move(key), canonicalize(fm));
        } else {
          out.push_back(std::move(*r.map));
        }
      }
    }
    return out;
  }

  void run(PartialMap root) {
    std::vector<PartialMap> stack{std::move(root)};
    while (!stack.empty()) {
      PartialMap node = std::move(stack.back());
      stack.pop_back();
      auto kids = expand(node);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(std::move(*it));
    }
  }
};

void add_stats(EnumStats& into, const EnumStats& s) {
  into.nodes += s.nodes;
  into.extensions += s.extensions;
  for (size_t i = 0; i < into.rejected.size(); ++i) into.rejected[i] += s.rejected[i];
  into.finished += s.finished;
}

}  // namespace

EnumResult enumerate(const EnumConfig& cfg) {
  for (int s : cfg.face_sizes)
    if (s < 3) throw std::invalid_argument("face sizes must be at least 3");
  EnumStats total;
  std::map<std::string, PlanarMap> found;
  Worker head(cfg);
  // Breadth-first until there is enough work to spread.
  std::vector<PartialMap> frontier{seed()};
  const size_t want = cfg.workers > 1 ? size_t(cfg.workers) * 16 : 1;
  while (!frontier.empty() && frontier.size() < want) {
    std::vector<PartialMap> next;
    for (const auto& node : frontier) {
      auto kids = head.expand(node);
      for (auto& k : kids) next.push_back(std::move(k));
    }
    frontier = std::move(next);
  }
  add_stats(total, head.stats);
  found.merge(head.found);

  const int nthreads = std::max(1, cfg.workers);
  std::vector<Worker> workers;
  workers.reserve(nthreads);
  for (int i = 0; i < nthreads; ++i) workers.emplace_back(cfg);
  std::atomic<size_t> cursor{0};
  auto body = [&](Worker& w) {
    for (size_t i = cursor++; i < frontier.size(); i = cursor++) w.run(std::move(frontier[i]));
  };
  if (nthreads == 1) {
    body(workers[0]);
  } else {
    std::vector<std::thread> threads;
    for (auto& w : workers) threads.emplace_back(body, std::ref(w));
    for (auto& th : threads) th.join();
  }
  for (auto& w : workers) {
    add_stats(total, w.stats);
    found.merge(w.found);
  }

  EnumResult res;
  total.unique = found.size();
  for (auto& [form, m] : found) {
    if (cfg.validate_output) {
      auto rep = validate(m, cfg.budget_prune ? &cfg.weights : nullptr);
      if (!rep.ok()) {
        ++total.invalid;
        continue;
      }
    }
    char id[16];
    std::snprintf(id, sizeof id, "m%04zu", res.maps.size() + 1);
    m.id = id;
    res.forms.push_back(form);
    res.maps.push_back(std::move(m));
  }
  total.emitted = res.maps.size();
  res.stats = total;
  return res;
}

std::string stats_text(const EnumStats& s) {
  std::string out;
  auto line = [&](const std::string& k, std::uint64_t v) { out += k + " = " + std::to_string(v) + "\n"; };
  line("nodes", s.nodes);
  line("extensions", s.extensions);
  for (size_t i = 1; i < s.rejected.size(); ++i) line(std::string("rejected.") + reject_name(Reject(i)), s.rejected[i]);
  line("finished", s.finished);
  line("unique", s.unique);
  line("invalid", s.invalid);
  line("emitted", s.emitted);
  return out;
}

}  // namespace starbound
