#pragma once

#include "starbound/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace starbound {

/// Sphere decomposition: faces as cyclic vertex lists, consistently oriented so that
/// every directed edge occurs in exactly one face.
struct PlanarMap {
  std::string id;
  int num_vertices = 0;
  std::vector<std::vector<int>> faces;
  std::vector<bool> finished;  // empty means every face is finished

  int num_edges() const;
  int count_faces_of_size(int n) const;
  bool is_finished(size_t f) const { return finished.empty() || finished[f]; }
};

struct VertexType {
  int p = 0;  // triangles
  int q = 0;  // quadrilaterals
  int r = 0;  // other faces
  bool operator==(const VertexType&) const = default;
  auto operator<=>(const VertexType&) const = default;
};

struct MapError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Throws MapError naming the first violated structural invariant: loop, duplicate
/// vertex in a face, unpaired or repeated directed edge, pinched vertex, Euler failure.
void check_structure(const PlanarMap& m);

PlanarMap parse_map(std::string_view text);
std::vector<PlanarMap> parse_archive(std::string_view text);
std::string serialize(const PlanarMap& m);
std::string serialize_archive(const std::vector<PlanarMap>& maps);

VertexType vertex_type(const PlanarMap& m, int v);
std::vector<std::vector<int>> faces_at_vertices(const PlanarMap& m);
std::vector<std::vector<int>> neighbors(const PlanarMap& m);

/// Neighbors of v in rotation order (consistent with face orientation).
std::vector<int> rotation(const PlanarMap& m, int v);

/// Minimum breadth-first code over all roots and both orientations. Equal iff the maps
/// are isomorphic as unoriented planar maps.
std::string canonical_form(const PlanarMap& m);

/// Relabels vertices in canonical order and sorts faces; id is kept.
PlanarMap canonicalize(const PlanarMap& m);

/// Vertex types admitted by the exclusion lemmas.
const std::vector<std::pair<int, int>>& allowed_types();
bool type_allowed(int p, int q);

/// Per-vertex squander weights in pt units plus the quad constant.
struct SquanderWeights {
  std::map<std::pair<int, int>, Rational> tau_pt;  // tau_LP(p,q)/pt
  Interval t4_pt;                                  // t4/pt
  Interval budget_pt;                              // total budget / pt
};

struct SquanderResult {
  std::vector<int> vertices;  // the maximizing separated set
  Interval value_pt;          // t4 q + sum (tau - t4 q_v), in pt units
  int quads = 0;
};

/// Exact maximum-weight set of vertices, no two on a common face. Vertices with
/// weight <= 0 are never chosen.
std::vector<int> max_weight_separated(const PlanarMap& m, const std::vector<double>& weight);

/// Exact maximum over separated vertex sets (no two on a common face). When
/// `eligible` is given only those vertices may be chosen and only finished quads count.
SquanderResult squander_bound(const PlanarMap& m, const SquanderWeights& w,
                              const std::vector<bool>* eligible = nullptr);

struct Violation {
  int property;
  std::string message;
  std::vector<int> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(int property) const;
};

/// Checks the admissibility properties. Property 8 is checked only when weights are given.
ValidationReport validate(const PlanarMap& m, const SquanderWeights* w = nullptr);

/// Face holding each directed edge.
class DartIndex {
 public:
  explicit DartIndex(const PlanarMap& m);
  int face_of(int u, int w) const { return face_[size_t(u) * size_t(n_) + size_t(w)]; }

 private:
  int n_;
  std::vector<int> face_;
};

/// For a simple cycle in the map, the vertices strictly on each side.
std::pair<std::vector<int>, std::vector<int>> cycle_sides(const PlanarMap& m, const std::vector<int>& cycle);
std::pair<std::vector<int>, std::vector<int>> cycle_sides(const PlanarMap& m, const DartIndex& d,
                                                          const std::vector<int>& cycle);

/// Types of all vertices in one pass.
std::vector<VertexType> vertex_types(const PlanarMap& m);

namespace fixtures {
PlanarMap tetrahedron();
PlanarMap cube();
PlanarMap octahedron();
PlanarMap icosahedron();
PlanarMap cuboctahedron();          // face-centered cubic neighbourhood
PlanarMap orthobicupola();          // hexagonal close packing neighbourhood
PlanarMap pentagonal_prism_star();  // 10 triangles, 5 quads
}  // namespace fixtures

}  // namespace starbound
