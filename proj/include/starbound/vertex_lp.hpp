#pragma once

#include "starbound/certificate.hpp"
#include "starbound/lp.hpp"
#include "starbound/planar_map.hpp"
#include "starbound/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace starbound {

enum class TauSource { ComputedLP, FiveTetrahedra, TableOnly };
const char* tau_source_name(TauSource s);

/// Published lower bounds on the squander around a vertex of type (p,q), in pt.
const std::map<std::pair<int, int>, Rational>& published_tau_pt();

/// Catalogue rows used by the vertex LPs: tetrahedron rows and quad rows that
/// bound tau from below by an affine function of one dihedral angle.
struct VertexRowSet {
  std::vector<std::string> tet_ids;
  std::vector<std::string> quad_ids;
  static VertexRowSet standard();
};

struct VertexLPResult {
  bool feasible = false;
  double value_pt = 0;               // float minimum of the summed squander, in pt
  std::optional<Rational> certified;  // certified lower bound, score units
  std::vector<std::string> binding;  // rows with a positive multiplier
  LPProblem lp;
  DualCertificate cert;
};

/// min sum(tau) over p tetrahedra and q quad clusters whose dihedral angles sum to 2*pi.
VertexLPResult tau_lp(int p, int q, const VertexRowSet& rows = VertexRowSet::standard());

struct TauEntry {
  int p = 0;
  int q = 0;
  std::optional<Rational> published_pt;
  std::optional<double> computed_pt;
  std::optional<Rational> certified_pt;  // certified lower bound divided by pt_hi
  TauSource source = TauSource::ComputedLP;
  std::vector<std::string> binding;
  /// Value used downstream: min(published, certified), in pt.
  Rational weight_pt;
};

struct TauTable {
  std::map<std::pair<int, int>, TauEntry> entries;

  /// Throws std::out_of_range for entries absent from the table.
  const TauEntry& at(int p, int q) const;
  SquanderWeights weights() const;
  std::string text() const;
};

TauTable compute_tau_table();

/// Weights with the given tau entries (in pt) and the t4 and budget enclosures.
SquanderWeights squander_weights(std::map<std::pair<int, int>, Rational> tau_pt);

struct Exclusion {
  int p = 0;
  int q = 0;
  int lemma = 0;  // 1: angle arithmetic, 2: squander over budget
  int item = 0;
  std::string reason;
  bool holds = false;
};

/// The eight angle-arithmetic exclusions (checked at the extreme type of each range)
/// and the seven squander-budget exclusions.
std::vector<Exclusion> excluded_types(const TauTable& table);

struct Lemma53Check {
  Rational tau_long_edge;    // some top edge >= 2.1773: one tetrahedron alone
  Rational tau_short_edges;  // all top edges <= 2.1773: certified LP bound
  Rational sigma_long_edge;  // upper bounds on the summed score
  Rational sigma_short_edges;
  bool tau_ok = false;    // both tau bounds >= 0.55 pt (within 0.001 pt)
  bool sigma_ok = false;  // both sigma bounds <= 4.52 pt
};

/// Five tetrahedra around a vertex of type (5,0).
Lemma53Check verify_lemma53_k1();

}  // namespace starbound
