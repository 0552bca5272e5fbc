#pragma once

#include "starbound/catalog.hpp"
#include "starbound/certificate.hpp"
#include "starbound/lp.hpp"
#include "starbound/planar_map.hpp"
#include "starbound/rational.hpp"

#include <map>
#include <optional>
#include <string_view>
#include <string>
#include <vector>

namespace starbound {

/// Quad cluster types. Truncated clusters are split along whichever diagonal is
/// shorter, so that type carries two leaves (TruncatedA: corners 0-2, TruncatedB: 1-3).
enum class QuadType { Any, Flat13, Flat24, Upright, TruncatedA, TruncatedB };
const char* quad_type_name(QuadType t);
/// The five leaves covering every quad cluster.
const std::vector<QuadType>& quad_leaves();

struct TetSplit {
  int face = 0;
  bool short_perimeter = true;  // y4+y5+y6 <= 6.25, else >= 6.25
};

struct BranchCase {
  std::vector<QuadType> quads;  // indexed by quad order (faces of size 4 in face order)
  std::vector<TetSplit> tet_splits;
  std::vector<std::string> injected;  // final-analysis rows whose conditions are certified
  std::string id() const;
};

/// Inverse of BranchCase::id for a map with `quads` quad faces. A trailing probe
/// suffix is not accepted here. Throws std::invalid_argument.
BranchCase parse_case_id(std::string_view id, int quads);

/// Certified box refinements keyed by variable name, intersected with the defaults.
using Tightening = std::map<std::string, std::pair<Rational, Rational>>;

struct StarOptions {
  bool vertex_rows = true;     // G4.1, G4.3 and the (5,0) rows
  bool squander_rows = true;   // per-vertex squander and the separated-set row
  int lemma_subsets = 4;       // largest k for the (5,0) group rows
};

/// The relaxation of one map under one case, with handles to its columns.
struct StarLP {
  LPProblem lp;
  std::vector<std::vector<int>> dih;  // per face, per corner position
  std::vector<int> sol;
  std::vector<int> sigma;
  std::vector<int> height;            // per vertex
  std::map<std::pair<int, int>, int> len;  // per edge (u < v)
  std::vector<int> quad_faces;        // face index of each quad
};

/// The 4^r quad-type assignments. Type 4 appears as TruncatedA; every truncated quad
/// is also solved as TruncatedB and eliminated only when both diagonals are.
std::vector<BranchCase> branch_quads(const PlanarMap& m);

/// Base relaxation: structural rows, cluster rows and vertex rows. Rejects maps with
/// faces other than triangles and quads.
StarLP build_base_lp(const PlanarMap& m, const SquanderWeights& w, const StarOptions& opt = {});

/// Base relaxation plus the rows activated by a branch case and certified boxes.
StarLP build_case_lp(const PlanarMap& m, const SquanderWeights& w, const BranchCase& c,
                     const Tightening& tight = {}, const StarOptions& opt = {});

struct CaseResult {
  std::string case_id;
  bool solved = false;
  bool infeasible = false;
  double value_pt = 0;              // float optimum in pt (for infeasible: -inf)
  std::optional<Rational> bound;    // certified score bound
  bool eliminated = false;          // certified below 8 pt or certified infeasible
  std::string failure;              // certificate failure text, when any
  DualCertificate cert;
  std::string lp_dump;              // filled only when requested
  std::vector<double> x;            // float primal point
};

/// Solves, extracts a certificate, checks it against 8 pt. Retries once with a
/// tighter tolerance when the first certificate is rejected.
CaseResult solve_case(const LPProblem& lp, bool keep_dump = false);

struct ProbeResult {
  bool infeasible = false;
  std::optional<Rational> bound;  // certified max (or min) under the 8 pt hypothesis
  DualCertificate cert;
  LPProblem lp;
};

/// The case LP plus the row sum(sigma) >= 8 pt, with the column as objective.
LPProblem make_probe_lp(const StarLP& s, int column, bool maximize);

/// Max (or min) of one column subject to the case rows and sum(sigma) >= 8 pt.
ProbeResult probe_bound(const StarLP& s, int column, bool maximize);

enum class Verdict { Eliminated, Survivor, Reference };
const char* verdict_name(Verdict v);

struct BoundReport {
  std::string map_id;
  Verdict verdict = Verdict::Survivor;
  std::string reference_name;
  double base_value_pt = 0;
  std::optional<Rational> base_bound;
  bool base_eliminated = false;
  std::vector<CaseResult> cases;     // base case first, then the leaves of the branch tree
  std::vector<CaseResult> supports;  // max probes whose certified caps tightened boxes
  int lp_solves = 0;
  double seconds = 0;
  std::string note;
};

/// Which reference configuration a map is, if any ("fcc", "hcp", "prism").
std::optional<std::string> reference_name(const PlanarMap& m);

struct BranchOptions {
  bool quads = true;          // branch over the quad types
  int max_tet_splits = 0;     // perimeter splits at surviving leaves (0: off)
  bool probe_heights = true;  // certify height caps before perimeter splits
  int max_lps = 20000;        // per map; exceeding leaves the map a survivor
  bool keep_dumps = false;
  StarOptions star;
};

/// Base bound, then (when it fails) a depth-first case tree over quad types and
/// optional perimeter splits. Eliminated only when every leaf is certified.
BoundReport bound_map(const PlanarMap& m, const SquanderWeights& w, const BranchOptions& opt = {});

/// Base bound only.
BoundReport score_bound(const PlanarMap& m, const SquanderWeights& w, const StarOptions& opt = {});

/// Faces with the largest primal slack in their score rows, used for perimeter splits.
std::vector<int> pick_split_faces(const StarLP& s, const std::vector<double>& x, int k);

}  // namespace starbound
