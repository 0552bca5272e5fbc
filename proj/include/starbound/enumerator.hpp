#pragma once

#include "starbound/planar_map.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace starbound {

/// Map under construction. Faces carry finished flags; triangles are always finished.
struct PartialMap {
  PlanarMap map;
  Interval budget_pt{Rational(0), Rational(0)};  // condition-7 accumulator, pt units
};

struct ExtensionTuple {
  int m = 0;
  std::vector<int> a;  // 1 = a_1 <= ... <= a_m = ell, a_{m-1} != a_m
};

/// All tuples for a host face of `ell` vertices and a new face of `m` vertices, in
/// lexicographic order.
std::vector<ExtensionTuple> tuples(int ell, int m);

enum class Reject : int {
  None,
  VertexCap,
  MultiJoin,
  Degree,
  Circuit3,
  Circuit4,
  VertexType,
  QuadCount,
  Budget,
  Count_
};
const char* reject_name(Reject r);

struct EnumConfig {
  int max_vertices = 60;
  std::vector<int> face_sizes{3, 4};
  bool budget_prune = true;
  bool admissible_prune = true;  // vertex types and quad count during search
  bool validate_output = true;   // drop outputs failing the admissibility checks
  SquanderWeights weights;
  int workers = 1;
};

struct ExtendResult {
  std::optional<PartialMap> map;
  Reject reason = Reject::None;
};

/// Draws the new face F_a inside unfinished face `face` along its edge from
/// faces[face][edge] to the next corner, then checks conditions 1-6.
ExtendResult extend(const PartialMap& partial, size_t face, size_t edge, const ExtensionTuple& t, const EnumConfig& cfg);

/// Condition 7: false (reject) when finished quads plus the best separated set of
/// fully finished vertices certainly reach the budget. Updates budget_pt.
bool budget_prune(PartialMap& partial, const SquanderWeights& w);

/// Stronger form of condition 7 for admissible maps: every vertex is charged the
/// cheapest allowed type it can still reach, and vertices sharing any face (finished
/// or not) are never both chosen. Implies budget_prune. Updates budget_pt.
bool reachable_budget_prune(PartialMap& partial, const SquanderWeights& w);

/// Finished quadrilateral 0-1-2-3 with its unfinished complement.
PartialMap seed();

struct EnumStats {
  std::uint64_t nodes = 0;
  std::uint64_t extensions = 0;
  std::array<std::uint64_t, static_cast<size_t>(Reject::Count_)> rejected{};
  std::uint64_t finished = 0;     // finished maps reached, with repeats
  std::uint64_t unique = 0;       // distinct up to isomorphism
  std::uint64_t invalid = 0;      // distinct maps dropped by validation
  std::uint64_t emitted = 0;
};

struct EnumResult {
  std::vector<PlanarMap> maps;  // canonicalized, sorted by canonical form, ids m0001...
  std::vector<std::string> forms;
  EnumStats stats;
};

EnumResult enumerate(const EnumConfig& cfg);

std::string stats_text(const EnumStats& s);

}  // namespace starbound
