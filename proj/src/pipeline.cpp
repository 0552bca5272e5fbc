#include "starbound/pipeline.hpp"

#include "starbound/catalog.hpp"
#include "starbound/certificate.hpp"
#include "starbound/enumerator.hpp"
#include "starbound/hash.hpp"
#include "starbound/lp.hpp"
#include "starbound/star.hpp"
#include "starbound/vertex_lp.hpp"

#include <zlib.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;

namespace starbound {

namespace {

std::string trim(std::string_view s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  size_t b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split_ws(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

int parse_int(const std::string& key, const std::string& v, int lo) {
  size_t used = 0;
  int x = 0;
  try {
    x = std::stoi(v, &used);
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an integer, got '" + v + "'");
  }
  if (used != v.size()) throw ConfigError(key + ": expected an integer, got '" + v + "'");
  if (x < lo) throw ConfigError(key + ": must be at least " + std::to_string(lo));
  return x;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
  if (v == "false" || v == "no" || v == "off" || v == "0") return false;
  throw ConfigError(key + ": expected true or false, got '" + v + "'");
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& p, std::string_view data) {
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("short write to " + p.string());
}

std::string fixed(double x, int prec) {
  std::ostringstream s;
  if (x == -std::numeric_limits<double>::infinity()) return "-inf";
  s << std::fixed << std::setprecision(prec) << x;
  return s.str();
}

// ---- manifest serialization ----

std::string leaf_line(const char* tag, const LeafRecord& l) {
  return std::string("  ") + tag + ' ' + l.kind + ' ' + l.case_id + ' ' + (l.bound ? to_string(*l.bound) : "-") +
         ' ' + (l.cert_path.empty() ? "-" : l.cert_path) + ' ' + (l.lp_path.empty() ? "-" : l.lp_path) + '\n';
}

LeafRecord parse_leaf(const std::vector<std::string>& w) {
  if (w.size() != 6) throw std::invalid_argument("manifest: bad leaf line");
  LeafRecord l;
  l.kind = w[1];
  l.case_id = w[2];
  if (w[3] != "-") l.bound = parse_rational(w[3]);
  l.cert_path = w[4] == "-" ? "" : w[4];
  l.lp_path = w[5] == "-" ? "" : w[5];
  return l;
}

std::string record_text(const MapRecord& r) {
  std::ostringstream o;
  o << "map " << r.map_id << ' ' << r.vertices << ' ' << r.triangles << ' ' << r.quads << ' '
    << map_status_name(r.status) << '\n';
  o << "  reference " << (r.reference.empty() ? "-" : r.reference) << '\n';
  o << "  base_value_pt " << fixed(r.base_value_pt, 6) << '\n';
  o << "  base_bound " << (r.base_bound ? to_string(*r.base_bound) : "-") << '\n';
  o << "  lp_solves " << r.lp_solves << '\n';
  o << "  note " << (r.note.empty() ? "-" : r.note) << '\n';
  if (!r.base.case_id.empty()) o << leaf_line("base", r.base);
  for (const auto& l : r.leaves) o << leaf_line("leaf", l);
  for (const auto& l : r.supports) o << leaf_line("support", l);
  o << "end\n";
  return o.str();
}

MapStatus parse_status(const std::string& s) {
  for (MapStatus m : {MapStatus::EliminatedBase, MapStatus::EliminatedBranch, MapStatus::Survivor,
                      MapStatus::Reference, MapStatus::Unresolved, MapStatus::Invalid})
    if (s == map_status_name(m)) return m;
  throw std::invalid_argument("manifest: unknown status '" + s + "'");
}

// Parses "map" blocks from a stream positioned at a "map" line.
std::vector<MapRecord> parse_records(std::istream& in, std::string first) {
  std::vector<MapRecord> out;
  std::string line = std::move(first);
  do {
    if (trim(line).empty()) continue;
    auto w = split_ws(line);
    if (w[0] != "map" || w.size() != 6) throw std::invalid_argument("manifest: expected map line, got '" + line + "'");
    MapRecord r;
    r.map_id = w[1];
    r.vertices = std::stoi(w[2]);
    r.triangles = std::stoi(w[3]);
    r.quads = std::stoi(w[4]);
    r.status = parse_status(w[5]);
    bool closed = false;
    while (std::getline(in, line)) {
      std::string t = trim(line);
      if (t == "end") {
        closed = true;
        break;
      }
      auto v = split_ws(t);
      if (v.empty()) continue;
      std::string rest = trim(std::string_view(t).substr(v[0].size()));
      if (v[0] == "reference") r.reference = rest == "-" ? "" : rest;
      else if (v[0] == "base_value_pt") r.base_value_pt = rest == "-inf" ? -std::numeric_limits<double>::infinity() : std::stod(rest);
      else if (v[0] == "base_bound") r.base_bound = rest == "-" ? std::nullopt : std::optional(parse_rational(rest));
      else if (v[0] == "lp_solves") r.lp_solves = std::stoi(rest);
      else if (v[0] == "note") r.note = rest == "-" ? "" : rest;
      else if (v[0] == "base") r.base = parse_leaf(v);
      else if (v[0] == "leaf") r.leaves.push_back(parse_leaf(v));
      else if (v[0] == "support") r.supports.push_back(parse_leaf(v));
      else throw std::invalid_argument("manifest: unknown key '" + v[0] + "'");
    }
    if (!closed) throw std::invalid_argument("manifest: unterminated map " + r.map_id);
    out.push_back(std::move(r));
  } while (std::getline(in, line));
  return out;
}

// ---- bounding one map ----

struct FileBlob {
  std::string path;  // relative
  std::string data;
  bool gz = false;
};

struct MapOutcome {
  MapRecord record;
  std::vector<FileBlob> files;
};

LeafRecord store_case(const std::string& map_id, const std::string& stem, const CaseResult& c,
                      std::vector<FileBlob>& files) {
  LeafRecord l;
  l.case_id = c.case_id;
  if (!c.solved || !c.failure.empty()) l.kind = "none";
  else if (c.infeasible) l.kind = "infeasible";
  else l.kind = "bound";
  if (c.case_id.find("|probe:") != std::string::npos && c.infeasible) l.kind = "probe";
  l.bound = c.bound;
  std::string dir = "certs/" + map_id + "/";
  if (l.kind != "none") {
    l.cert_path = dir + stem + ".cert";
    files.push_back({l.cert_path, write_certificate(c.cert), false});
  }
  if (!c.lp_dump.empty()) {
    l.lp_path = dir + stem + ".lp.gz";
    files.push_back({l.lp_path, c.lp_dump, true});
  }
  return l;
}

MapOutcome bound_one(const PlanarMap& m, const SquanderWeights& w, const PipelineConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  MapOutcome out;
  MapRecord& r = out.record;
  r.map_id = m.id;
  r.vertices = m.num_vertices;
  r.triangles = m.count_faces_of_size(3);
  r.quads = m.count_faces_of_size(4);
  try {
    check_structure(m);
    ValidationReport v = validate(m, &w);
    if (!v.ok()) {
      r.status = MapStatus::Invalid;
      r.note = "property " + std::to_string(v.violations[0].property) + ": " + v.violations[0].message;
    }
  } catch (const MapError& e) {
    r.status = MapStatus::Invalid;
    r.note = e.what();
  }
  if (r.status == MapStatus::Invalid) return out;

  BranchOptions b;
  b.quads = cfg.branch;
  b.probe_heights = cfg.branch && cfg.probes;
  b.max_tet_splits = cfg.branch ? cfg.max_tet_splits : 0;
  b.max_lps = cfg.max_lps;
  b.keep_dumps = true;
  BoundReport rep;
  try {
    rep = bound_map(m, w, b);
  } catch (const std::exception& e) {
    r.status = MapStatus::Unresolved;
    r.note = std::string("error: ") + e.what();
    return out;
  }
  r.lp_solves = rep.lp_solves;
  r.base_value_pt = rep.base_value_pt;
  r.base_bound = rep.base_bound;
  r.reference = rep.reference_name;
  r.note = rep.note;
  r.base = store_case(m.id, "base", rep.cases.front(), out.files);
  if (rep.verdict == Verdict::Reference) {
    r.status = MapStatus::Reference;
  } else if (rep.verdict == Verdict::Eliminated) {
    r.status = rep.base_eliminated ? MapStatus::EliminatedBase : MapStatus::EliminatedBranch;
  } else if (r.base.kind == "none") {
    r.status = MapStatus::Unresolved;
  } else {
    r.status = MapStatus::Survivor;
  }
  if (r.status == MapStatus::EliminatedBase) {
    r.leaves.push_back(r.base);
  } else {
    for (size_t i = 1; i < rep.cases.size(); ++i)
      r.leaves.push_back(store_case(m.id, "leaf-" + std::to_string(i), rep.cases[i], out.files));
  }
  if (r.status == MapStatus::EliminatedBranch || r.status == MapStatus::Survivor)
    for (size_t i = 0; i < rep.supports.size(); ++i)
      r.supports.push_back(store_case(m.id, "support-" + std::to_string(i + 1), rep.supports[i], out.files));
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

// ---- cache ----

std::string cache_key(const PlanarMap& m, const PipelineConfig& cfg, const std::string& catalogue) {
  return sha256_hex(canonical_form(m) + "\n" + m.id + "\n" + cfg.canonical_text() + "catalogue " + catalogue + "\n");
}

std::optional<MapOutcome> cache_load(const fs::path& dir) {
  fs::path rec = dir / "record.txt";
  if (!fs::exists(rec)) return std::nullopt;
  try {
    std::istringstream in(read_file(rec));
    std::string first;
    std::getline(in, first);
    auto recs = parse_records(in, first);
    if (recs.size() != 1) return std::nullopt;
    MapOutcome o;
    o.record = recs[0];
    auto add = [&](const LeafRecord& l) {
      if (!l.cert_path.empty()) o.files.push_back({l.cert_path, read_file(dir / l.cert_path), false});
      if (!l.lp_path.empty()) o.files.push_back({l.lp_path, read_gz((dir / l.lp_path).string()), true});
    };
    add(o.record.base);
    for (const auto& l : o.record.leaves)
      if (l.cert_path != o.record.base.cert_path) add(l);
    for (const auto& l : o.record.supports) add(l);
    return o;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void put_files(const fs::path& root, const std::vector<FileBlob>& files) {
  for (const auto& f : files) {
    if (f.gz) {
      fs::create_directories((root / f.path).parent_path());
      write_gz((root / f.path).string(), f.data);
    } else {
      write_file(root / f.path, f.data);
    }
  }
}

void cache_store(const fs::path& dir, const MapOutcome& o) {
  fs::path tmp = dir;
  tmp += ".tmp";
  fs::remove_all(tmp);
  put_files(tmp, o.files);
  write_file(tmp / "record.txt", record_text(o.record));
  fs::remove_all(dir);
  fs::rename(tmp, dir);
}

std::string weights_text(const SquanderWeights& w) {
  std::ostringstream o;
  for (const auto& [k, v] : w.tau_pt) o << "tau " << k.first << ' ' << k.second << ' ' << to_string(v) << '\n';
  return o.str();
}

// Weights read back are accepted only at or below the published entries.
SquanderWeights parse_weights(std::string_view text) {
  std::map<std::pair<int, int>, Rational> tau;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    auto w = split_ws(line);
    if (w.empty()) continue;
    if (w.size() != 4 || w[0] != "tau") throw std::invalid_argument("weights: bad line '" + line + "'");
    std::pair<int, int> k{std::stoi(w[1]), std::stoi(w[2])};
    Rational v = parse_rational(w[3]);
    auto pub = published_tau_pt().find(k);
    if (pub == published_tau_pt().end()) throw std::invalid_argument("weights: no published entry for " + line);
    if (v > pub->second) throw std::invalid_argument("weights: " + line + " exceeds the published entry");
    tau[k] = v;
  }
  return squander_weights(std::move(tau));
}

std::string without_probe(const std::string& id) {
  size_t p = id.find("|probe:");
  return p == std::string::npos ? id : id.substr(0, p);
}

}  // namespace

// ---- config ----

std::string PipelineConfig::canonical_text() const {
  std::ostringstream o;
  o << "vertex_cap = " << vertex_cap << '\n'
    << "branch = " << (branch ? "true" : "false") << '\n'
    << "probes = " << (probes ? "true" : "false") << '\n'
    << "max_tet_splits = " << max_tet_splits << '\n'
    << "max_lps = " << max_lps << '\n';
  return o.str();
}

std::string PipelineConfig::hash() const { return sha256_hex(canonical_text()); }

PipelineConfig parse_config(std::string_view text) {
  PipelineConfig c;
  std::istringstream in{std::string(text)};
  std::set<std::string> seen;
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(std::string_view(t).substr(0, eq));
    std::string val = trim(std::string_view(t).substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError("line " + std::to_string(lineno) + ": duplicate key " + key);
    if (key == "vertex_cap") c.vertex_cap = parse_int(key, val, 4);
    else if (key == "branch") c.branch = parse_bool(key, val);
    else if (key == "probes") c.probes = parse_bool(key, val);
    else if (key == "max_tet_splits") c.max_tet_splits = parse_int(key, val, 0);
    else if (key == "max_lps") c.max_lps = parse_int(key, val, 1);
    else if (key == "archive") c.archive = val;
    else if (key == "out_dir") c.out_dir = val;
    else if (key == "cache_dir") c.cache_dir = val;
    else if (key == "cache") c.cache = parse_bool(key, val);
    else if (key == "workers") c.workers = parse_int(key, val, 1);
    else throw ConfigError("line " + std::to_string(lineno) + ": unknown key " + key);
  }
  if (c.out_dir.empty()) throw ConfigError("out_dir: must not be empty");
  return c;
}

PipelineConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path);
  std::ostringstream s;
  s << in.rdbuf();
  PipelineConfig c = parse_config(s.str());
  // relative paths in a config file are relative to the file
  fs::path base = fs::path(path).parent_path();
  auto rebase = [&](std::string& p) {
    if (!p.empty() && fs::path(p).is_relative()) p = (base / p).lexically_normal().string();
  };
  rebase(c.archive);
  rebase(c.out_dir);
  rebase(c.cache_dir);
  return c;
}

std::optional<int> worker_override() {
  const char* v = std::getenv("STARBOUND_WORKERS");
  if (!v || !*v) return std::nullopt;
  try {
    size_t used = 0;
    int n = std::stoi(v, &used);
    if (used == std::string_view(v).size() && n > 0) return n;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

const char* map_status_name(MapStatus s) {
  switch (s) {
    case MapStatus::EliminatedBase: return "eliminated-base";
    case MapStatus::EliminatedBranch: return "eliminated-branch";
    case MapStatus::Survivor: return "survivor";
    case MapStatus::Reference: return "reference-map";
    case MapStatus::Unresolved: return "unresolved";
    case MapStatus::Invalid: return "invalid";
  }
  return "?";
}

// ---- manifest ----

bool RunManifest::counters_consistent() const {
  int by_status[6] = {};
  for (const auto& r : maps) ++by_status[static_cast<int>(r.status)];
  return enumerated == static_cast<int>(maps.size()) && eliminated_base == by_status[0] &&
         eliminated_branch == by_status[1] && survivors == by_status[2] && references == by_status[3] &&
         unresolved == by_status[4] && invalid == by_status[5] &&
         eliminated_base + eliminated_branch + survivors + references + unresolved + invalid == enumerated;
}

std::string RunManifest::text() const {
  std::ostringstream o;
  o << "starbound-manifest 1\n"
    << "config_hash " << config_hash << '\n'
    << "catalogue_version " << catalogue_version << '\n'
    << "archive " << archive_path << '\n'
    << "archive_sha " << archive_sha << '\n'
    << "counters enumerated " << enumerated << " eliminated-base " << eliminated_base << " eliminated-branch "
    << eliminated_branch << " survivors " << survivors << " reference-maps " << references << " unresolved "
    << unresolved << " invalid " << invalid << '\n'
    << "lp_solves " << lp_solves << '\n';
  for (const auto& r : maps) o << record_text(r);
  return o.str();
}

RunManifest parse_manifest(std::string_view text) {
  RunManifest m;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || trim(line) != "starbound-manifest 1")
    throw std::invalid_argument("manifest: bad header");
  while (std::getline(in, line)) {
    auto w = split_ws(line);
    if (w.empty()) continue;
    if (w[0] == "map") {
      m.maps = parse_records(in, line);
      break;
    }
    if (w.size() < 2) throw std::invalid_argument("manifest: bad line '" + line + "'");
    if (w[0] == "config_hash") m.config_hash = w[1];
    else if (w[0] == "catalogue_version") m.catalogue_version = w[1];
    else if (w[0] == "archive") m.archive_path = w[1];
    else if (w[0] == "archive_sha") m.archive_sha = w[1];
    else if (w[0] == "lp_solves") m.lp_solves = std::stol(w[1]);
    else if (w[0] == "counters") {
      if (w.size() != 15) throw std::invalid_argument("manifest: bad counters line");
      std::map<std::string, int> c;
      for (size_t i = 1; i + 1 < w.size(); i += 2) c[w[i]] = std::stoi(w[i + 1]);
      m.enumerated = c.at("enumerated");
      m.eliminated_base = c.at("eliminated-base");
      m.eliminated_branch = c.at("eliminated-branch");
      m.survivors = c.at("survivors");
      m.references = c.at("reference-maps");
      m.unresolved = c.at("unresolved");
      m.invalid = c.at("invalid");
    } else {
      throw std::invalid_argument("manifest: unknown key '" + w[0] + "'");
    }
  }
  return m;
}

// ---- reports ----

std::string report_text(const RunManifest& m) {
  std::ostringstream o;
  o << "summary enumerated " << m.enumerated << " eliminated-base " << m.eliminated_base << " eliminated-branch "
    << m.eliminated_branch << " survivors " << m.survivors << " reference-maps " << m.references << " unresolved "
    << m.unresolved << " invalid " << m.invalid << '\n';
  int candidates = m.enumerated - m.references - m.invalid;
  double rate = candidates > 0 ? 100.0 * (m.eliminated_base + m.eliminated_branch) / candidates : 0;
  o << "elimination_percent " << fixed(rate, 2) << '\n';
  for (const auto& r : m.maps) {
    o << "map " << r.map_id << " status " << map_status_name(r.status) << " vertices " << r.vertices
      << " triangles " << r.triangles << " quads " << r.quads << " base_pt " << fixed(r.base_value_pt, 6)
      << " leaves " << r.leaves.size() << " supports " << r.supports.size() << " lp_solves " << r.lp_solves;
    if (!r.reference.empty()) o << " reference " << r.reference;
    o << '\n';
  }
  for (const auto& r : m.maps)
    if (r.status == MapStatus::Survivor || r.status == MapStatus::Unresolved)
      o << "open " << r.map_id << ' ' << map_status_name(r.status) << ' '
        << (r.leaves.empty() ? r.base.case_id : r.leaves.back().case_id) << (r.note.empty() ? "" : " " + r.note)
        << '\n';
  return o.str();
}

std::string report_table(const RunManifest& m) {
  std::ostringstream o;
  o << std::left << std::setw(8) << "map" << std::setw(5) << "N" << std::setw(5) << "tri" << std::setw(6) << "quad"
    << std::setw(19) << "status" << std::setw(12) << "base pt" << std::setw(8) << "leaves" << std::setw(7) << "LPs"
    << "note\n";
  for (const auto& r : m.maps) {
    o << std::setw(8) << r.map_id << std::setw(5) << r.vertices << std::setw(5) << r.triangles << std::setw(6)
      << r.quads << std::setw(19) << map_status_name(r.status) << std::setw(12)
      << (r.status == MapStatus::Invalid ? "-" : fixed(r.base_value_pt, 4)) << std::setw(8) << r.leaves.size()
      << std::setw(7) << r.lp_solves << (r.reference.empty() ? r.note : r.reference) << '\n';
  }
  o << '\n'
    << "enumerated " << m.enumerated << ", eliminated at base " << m.eliminated_base << ", by branching "
    << m.eliminated_branch << ", survivors " << m.survivors << ", reference maps " << m.references
    << ", unresolved " << m.unresolved << ", invalid " << m.invalid << '\n';
  return o.str();
}

// ---- pipeline ----

RunManifest run_pipeline(const PipelineConfig& cfg_in, std::ostream* log) {
  PipelineConfig cfg = cfg_in;
  if (auto w = worker_override()) cfg.workers = *w;
  const fs::path out(cfg.out_dir);
  fs::create_directories(out);
  const SquanderWeights w = compute_tau_table().weights();
  const std::string catalogue = load_catalog().version();

  std::vector<PlanarMap> maps;
  if (cfg.archive.empty()) {
    EnumConfig ec;
    ec.max_vertices = cfg.vertex_cap;
    ec.weights = w;
    ec.workers = cfg.workers;
    if (log) *log << "enumerating up to " << cfg.vertex_cap << " vertices\n";
    maps = enumerate(ec).maps;
  } else {
    maps = parse_archive(read_file(cfg.archive));
  }
  const std::string archive = serialize_archive(maps);
  write_file(out / "archive.txt", archive);
  write_file(out / "weights.txt", weights_text(w));
  fs::remove_all(out / "certs");

  RunManifest man;
  man.config_hash = cfg.hash();
  man.catalogue_version = catalogue;
  man.archive_sha = sha256_hex(archive);
  man.enumerated = static_cast<int>(maps.size());
  man.maps.resize(maps.size());

  const fs::path cache_dir = cfg.cache_dir.empty() ? out / "cache" : fs::path(cfg.cache_dir);
  std::atomic<size_t> next{0};
  std::mutex mu;
  int done = 0;
  auto work = [&]() {
    for (size_t i; (i = next++) < maps.size();) {
      const PlanarMap& m = maps[i];
      fs::path entry = cache_dir / cache_key(m, cfg, catalogue);
      std::optional<MapOutcome> o;
      bool hit = false;
      if (cfg.cache && (o = cache_load(entry))) hit = true;
      if (!o) o = bound_one(m, w, cfg);
      put_files(out, o->files);
      if (cfg.cache && !hit) cache_store(entry, *o);
      std::lock_guard<std::mutex> lock(mu);
      ++done;
      if (log)
        *log << '[' << done << '/' << maps.size() << "] " << m.id << ' ' << map_status_name(o->record.status)
             << " base " << fixed(o->record.base_value_pt, 4) << " pt, " << o->record.lp_solves << " LPs"
             << (hit ? " (cached)" : "") << '\n';
      man.maps[i] = std::move(o->record);
    }
  };
  std::vector<std::thread> pool;
  for (int k = 1; k < cfg.workers; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::ostringstream timing;
  for (const auto& r : man.maps) {
    switch (r.status) {
      case MapStatus::EliminatedBase: ++man.eliminated_base; break;
      case MapStatus::EliminatedBranch: ++man.eliminated_branch; break;
      case MapStatus::Survivor: ++man.survivors; break;
      case MapStatus::Reference: ++man.references; break;
      case MapStatus::Unresolved: ++man.unresolved; break;
      case MapStatus::Invalid: ++man.invalid; break;
    }
    man.lp_solves += r.lp_solves;
    timing << r.map_id << ' ' << fixed(r.seconds, 3) << '\n';
  }
  write_file(out / "manifest.txt", man.text());
  write_file(out / "report.txt", report_text(man));
  write_file(out / "report_table.txt", report_table(man));
  write_file(out / "timing.txt", timing.str());
  return man;
}

// ---- recheck ----

bool covers_case_tree(const std::vector<std::string>& leaf_ids, int quads) {
  struct Node {
    std::vector<QuadType> q;
    std::vector<std::pair<int, bool>> t;
  };
  std::vector<Node> leaves;
  for (const auto& id : leaf_ids) {
    std::string s = without_probe(id);
    // injected rows narrow nothing; drop them before parsing
    std::string kept;
    size_t pos = 0;
    while (pos <= s.size()) {
      size_t bar = s.find('|', pos);
      std::string part = s.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
      if (part.rfind("i:", 0) != 0) kept += (kept.empty() ? "" : "|") + part;
      if (bar == std::string::npos) break;
      pos = bar + 1;
    }
    BranchCase c = parse_case_id(kept.empty() ? "base" : kept, quads);
    Node n{c.quads, {}};
    for (const auto& sp : c.tet_splits) n.t.emplace_back(sp.face, sp.short_perimeter);
    leaves.push_back(std::move(n));
  }
  auto contains = [](const Node& outer, const Node& inner) {
    for (size_t i = 0; i < outer.q.size(); ++i)
      if (outer.q[i] != QuadType::Any && outer.q[i] != inner.q[i]) return false;
    if (outer.t.size() > inner.t.size()) return false;
    return std::equal(outer.t.begin(), outer.t.end(), inner.t.begin());
  };
  std::function<bool(const Node&, int)> cover = [&](const Node& n, int depth) -> bool {
    if (depth > 64) return false;
    std::vector<const Node*> below;
    for (const auto& l : leaves) {
      if (contains(l, n)) return true;
      if (contains(n, l)) below.push_back(&l);
    }
    if (below.empty()) return false;
    for (size_t i = 0; i < n.q.size(); ++i) {
      if (n.q[i] != QuadType::Any) continue;
      bool refined = std::any_of(below.begin(), below.end(), [&](const Node* l) { return l->q[i] != QuadType::Any; });
      if (!refined) continue;
      for (QuadType t : quad_leaves()) {
        Node c = n;
        c.q[i] = t;
        if (!cover(c, depth + 1)) return false;
      }
      return true;
    }
    for (const Node* l : below) {
      if (l->t.size() <= n.t.size()) continue;
      int face = l->t[n.t.size()].first;
      for (bool s : {true, false}) {
        Node c = n;
        c.t.emplace_back(face, s);
        if (!cover(c, depth + 1)) return false;
      }
      return true;
    }
    return false;
  };
  Node root{std::vector<QuadType>(quads, QuadType::Any), {}};
  return cover(root, 0);
}

RecheckResult recheck(const std::string& out_dir) {
  RecheckResult res;
  const fs::path out(out_dir);
  RunManifest man;
  std::map<std::string, PlanarMap> archive;
  try {
    man = parse_manifest(read_file(out / "manifest.txt"));
    std::string text = read_file(out / man.archive_path);
    if (sha256_hex(text) != man.archive_sha) res.failures.push_back(man.archive_path + ": checksum mismatch");
    for (auto& m : parse_archive(text)) archive[m.id] = std::move(m);
  } catch (const std::exception& e) {
    res.failures.push_back(out_dir + ": " + e.what());
    return res;
  }
  if (!man.counters_consistent()) res.failures.push_back("manifest.txt: counters do not sum to the archive size");
  const std::string catalogue = load_catalog().version();
  if (man.catalogue_version != catalogue)
    res.failures.push_back("manifest.txt: catalogue version " + man.catalogue_version + " differs from " + catalogue);
  SquanderWeights w;
  try {
    w = parse_weights(read_file(out / "weights.txt"));
  } catch (const std::exception& e) {
    res.failures.push_back("weights.txt: " + std::string(e.what()));
    return res;
  }
  const Rational target = score_target();

  for (const auto& rec : man.maps) {
    auto fail = [&](const std::string& where, const std::string& why) { res.failures.push_back(where + ": " + why); };
    if (rec.status == MapStatus::Invalid || rec.status == MapStatus::Unresolved) continue;
    auto it = archive.find(rec.map_id);
    if (it == archive.end()) {
      fail(rec.map_id, "not in the archive");
      continue;
    }
    const PlanarMap& m = it->second;
    const bool eliminated = rec.status == MapStatus::EliminatedBase || rec.status == MapStatus::EliminatedBranch;

    // Rebuilds the claimed LP, compares it with the dump and checks the certificate.
    // Returns the verified report, or nothing after recording a failure.
    auto verify = [&](const LeafRecord& l, const LPProblem& lp, bool with_target) -> std::optional<CertReport> {
      ++res.certificates;
      std::string where = l.cert_path.empty() ? rec.map_id + " " + l.case_id : l.cert_path;
      if (l.cert_path.empty() || l.lp_path.empty()) {
        fail(where, "missing certificate or LP dump");
        return std::nullopt;
      }
      DualCertificate cert;
      std::string dump;
      try {
        dump = read_gz((out / l.lp_path).string());
        cert = parse_certificate(read_file(out / l.cert_path));
      } catch (const std::exception& e) {
        fail(where, std::string("unreadable: ") + e.what());
        return std::nullopt;
      }
      if (dump != dump_lp(lp)) {
        fail(l.lp_path, "LP dump differs from the relaxation rebuilt from the archive");
        return std::nullopt;
      }
      if (cert.map_id != rec.map_id || cert.case_id != l.case_id) {
        fail(where, "certificate names " + cert.map_id + " " + cert.case_id);
        return std::nullopt;
      }
      CertReport r;
      try {
        r = check_certificate(parse_lp(dump), cert, with_target ? std::optional(target) : std::nullopt);
      } catch (const std::exception& e) {
        fail(where, e.what());
        return std::nullopt;
      }
      if (!r.accepted) {
        fail(where, r.failure);
        return std::nullopt;
      }
      if ((cert.kind == CertKind::Infeasible) != (l.kind == "infeasible" || l.kind == "probe")) {
        fail(where, "certificate kind does not match the manifest");
        return std::nullopt;
      }
      ++res.passed;
      return r;
    };
    auto parse = [&](const std::string& id) -> std::optional<BranchCase> {
      try {
        return parse_case_id(id, rec.quads);
      } catch (const std::exception& e) {
        fail(rec.map_id, e.what());
        return std::nullopt;
      }
    };

    // caps proved by probes, keyed by the quad part of the case they were run on
    std::map<std::string, Tightening> caps;
    for (const auto& s : rec.supports) {
      std::string base_id = without_probe(s.case_id);
      std::string var = s.case_id.substr(std::min(s.case_id.size(), base_id.size() + 11));
      auto c = parse(base_id);
      if (!c) continue;
      if (s.case_id.compare(base_id.size(), 11, "|probe:max:") != 0) {
        fail(rec.map_id, "support " + s.case_id + " is not a max probe");
        continue;
      }
      try {
        StarLP sl = build_case_lp(m, w, *c);
        int col = sl.lp.find_var(var);
        if (col < 0) throw std::invalid_argument("no column " + var);
        auto r = verify(s, make_probe_lp(sl, col, true), false);
        if (!r || s.kind != "bound") continue;
        auto& t = caps[base_id];
        auto f = t.find(var);
        if (f == t.end()) t[var] = {Rational(-1000000), r->bound};
        else f->second.second = min_q(f->second.second, r->bound);
      } catch (const std::exception& e) {
        fail(rec.map_id, "support " + s.case_id + ": " + e.what());
      }
    }

    auto check_leaf = [&](const LeafRecord& l, bool with_target) {
      if (l.kind == "none") {
        if (with_target) fail(rec.map_id + " " + l.case_id, "no accepted certificate");
        return;
      }
      try {
        if (l.kind == "probe") {
          std::string base_id = without_probe(l.case_id);
          auto c = parse(base_id);
          if (!c) return;
          std::string var = l.case_id.substr(base_id.size() + 11);
          StarLP sl = build_case_lp(m, w, *c);
          int col = sl.lp.find_var(var);
          if (col < 0) throw std::invalid_argument("no column " + var);
          verify(l, make_probe_lp(sl, col, true), with_target);
          return;
        }
        auto c = parse(l.case_id);
        if (!c) return;
        BranchCase plain = *c;
        plain.tet_splits.clear();
        plain.injected.clear();
        auto t = caps.find(plain.id());
        StarLP sl = build_case_lp(m, w, *c, t == caps.end() ? Tightening{} : t->second);
        verify(l, sl.lp, with_target);
      } catch (const std::exception& e) {
        fail(rec.map_id + " " + l.case_id, e.what());
      }
    };

    if (rec.base.case_id != "base") {
      fail(rec.map_id, "base case missing");
      continue;
    }
    check_leaf(rec.base, rec.status == MapStatus::EliminatedBase);
    for (const auto& l : rec.leaves)
      if (l.cert_path != rec.base.cert_path) check_leaf(l, eliminated);
    if (rec.status == MapStatus::EliminatedBranch) {
      std::vector<std::string> ids;
      for (const auto& l : rec.leaves) ids.push_back(l.case_id);
      bool ok = false;
      try {
        ok = covers_case_tree(ids, rec.quads);
      } catch (const std::exception& e) {
        fail(rec.map_id, e.what());
      }
      if (!ok) fail(rec.map_id, "leaves do not cover the case tree");
    }
    if (rec.status == MapStatus::EliminatedBase && (rec.leaves.size() != 1 || rec.leaves[0].case_id != "base"))
      fail(rec.map_id, "eliminated at base but the leaf list is not the base case");
  }
  return res;
}

// ---- gzip ----

void write_gz(const std::string& path, std::string_view data) {
  gzFile f = gzopen(path.c_str(), "wb6");
  if (!f) throw std::runtime_error("cannot write " + path);
  size_t off = 0;
  while (off < data.size()) {
    unsigned n = static_cast<unsigned>(std::min<size_t>(data.size() - off, 1u << 20));
    if (gzwrite(f, data.data() + off, n) != static_cast<int>(n)) {
      gzclose(f);
      throw std::runtime_error("gzip write failed for " + path);
    }
    off += n;
  }
  if (gzclose(f) != Z_OK) throw std::runtime_error("gzip close failed for " + path);
}

std::string read_gz(const std::string& path) {
  gzFile f = gzopen(path.c_str(), "rb");
  if (!f) throw std::runtime_error("cannot read " + path);
  std::string out;
  char buf[1 << 16];
  int n;
  while ((n = gzread(f, buf, sizeof buf)) > 0) out.append(buf, static_cast<size_t>(n));
  int err = 0;
  const char* msg = gzerror(f, &err);
  std::string why = err < 0 && msg ? msg : "";
  gzclose(f);
  if (n < 0 || err < 0) throw std::runtime_error("corrupt gzip " + path + (why.empty() ? "" : ": " + why));
  return out;
}

}  // namespace starbound
