#pragma once

#include "starbound/planar_map.hpp"
#include "starbound/rational.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace starbound {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Line-oriented "key = value" settings; '#' starts a comment.
struct PipelineConfig {
  int vertex_cap = 60;
  bool branch = true;          // quad-type branching
  bool probes = true;          // certified caps at failing leaves
  int max_tet_splits = 10;     // perimeter splits at failing leaves
  int max_lps = 3000;          // per map
  std::string archive;         // bound this archive instead of enumerating
  std::string out_dir = "starbound-out";
  std::string cache_dir;       // empty: <out_dir>/cache
  bool cache = true;
  int workers = 1;

  /// Settings that affect results, one per line, in fixed order.
  std::string canonical_text() const;
  /// SHA-256 of canonical_text(); output locations and worker count are excluded.
  std::string hash() const;
};

PipelineConfig parse_config(std::string_view text);
PipelineConfig load_config(const std::string& path);

/// Worker count from STARBOUND_WORKERS when set to a positive integer.
std::optional<int> worker_override();

enum class MapStatus { EliminatedBase, EliminatedBranch, Survivor, Reference, Unresolved, Invalid };
const char* map_status_name(MapStatus s);

struct LeafRecord {
  std::string case_id;
  std::string kind;  // "bound", "infeasible", "probe" or "none" (no accepted certificate)
  std::optional<Rational> bound;
  std::string cert_path;  // relative to the output directory
  std::string lp_path;
};

struct MapRecord {
  std::string map_id;
  int vertices = 0;
  int triangles = 0;
  int quads = 0;
  MapStatus status = MapStatus::Survivor;
  std::string reference;
  double base_value_pt = 0;
  std::optional<Rational> base_bound;
  int lp_solves = 0;
  LeafRecord base;                   // base relaxation, always present for bounded maps
  std::vector<LeafRecord> leaves;    // covering case tree for eliminated maps; the open leaf for survivors
  std::vector<LeafRecord> supports;  // probe certificates behind tightened boxes
  std::string note;
  double seconds = 0;  // not part of the manifest text
};

struct RunManifest {
  std::string config_hash;
  std::string catalogue_version;
  std::string archive_path = "archive.txt";  // relative to the output directory
  std::string archive_sha;
  int enumerated = 0;
  int eliminated_base = 0;
  int eliminated_branch = 0;
  int survivors = 0;
  int references = 0;
  int unresolved = 0;
  int invalid = 0;
  long lp_solves = 0;
  std::vector<MapRecord> maps;

  bool counters_consistent() const;
  std::string text() const;
};

RunManifest parse_manifest(std::string_view text);

/// Enumerate (or load), bound, certify. Writes archive.txt, weights.txt, certs/, manifest.txt,
/// report.txt, report_table.txt and timing.txt under out_dir.
RunManifest run_pipeline(const PipelineConfig& cfg, std::ostream* log = nullptr);

/// Structured per-map records.
std::string report_text(const RunManifest& m);
/// Aligned table for people.
std::string report_table(const RunManifest& m);

struct RecheckResult {
  int certificates = 0;
  int passed = 0;
  std::vector<std::string> failures;  // "<path>: <reason>"
  bool ok() const { return failures.empty(); }
};

/// Re-verifies every certificate listed in out_dir/manifest.txt from files alone.
/// Each LP dump is compared with the relaxation rebuilt from the archived map (boxes
/// tightened only by caps whose own certificates pass), and each eliminated map's
/// leaves must cover its case tree. Uses no solver code.
RecheckResult recheck(const std::string& out_dir);

/// Depth-first coverage of the case tree by leaf ids (probe suffixes and injected
/// rows stripped). Quad positions are refined in index order, then perimeter splits.
bool covers_case_tree(const std::vector<std::string>& leaf_ids, int quads);

/// Gzip helpers for LP dumps.
void write_gz(const std::string& path, std::string_view data);
std::string read_gz(const std::string& path);

}  // namespace starbound
