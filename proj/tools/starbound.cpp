#include "starbound/certificate.hpp"
#include "starbound/constants.hpp"
#include "starbound/enumerator.hpp"
#include "starbound/lp.hpp"
#include "starbound/pipeline.hpp"
#include "starbound/planar_map.hpp"
#include "starbound/star.hpp"
#include "starbound/vertex_lp.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace starbound;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spill(const fs::path& path, const std::string& data) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << data;
}

int workers_or(int n) { return worker_override().value_or(n); }

int cmd_constants() {
  std::cout << std::left << std::setw(14) << "name" << std::setw(22) << "value" << std::setw(10) << "source"
            << "enclosure width\n";
  for (const auto& e : constants().entries) {
    std::ostringstream v;
    v << std::setprecision(15) << e.value;
    std::cout << std::setw(14) << e.name << std::setw(22) << v.str() << std::setw(10)
              << (e.provenance == Provenance::Literal ? "literal" : "derived") << std::setprecision(3)
              << to_double(e.enclosure.hi - e.enclosure.lo) << (e.note.empty() ? "" : "  " + e.note) << '\n';
  }
  return 0;
}

int cmd_tau_table() {
  TauTable t = compute_tau_table();
  std::cout << t.text() << '\n';
  Lemma53Check l = verify_lemma53_k1();
  std::cout << std::fixed << std::setprecision(5) << "(5,0) short top edges: tau "
            << to_double(l.tau_short_edges) / constants().pt << " pt, sigma "
            << to_double(l.sigma_short_edges) / constants().pt << " pt\n\n";
  bool ok = l.tau_ok && l.sigma_ok;
  for (const auto& e : excluded_types(t)) {
    std::cout << "excluded (" << e.p << ',' << e.q << ") " << (e.holds ? "holds" : "FAILS") << ": " << e.reason
              << '\n';
    ok = ok && e.holds;
  }
  return ok ? 0 : 1;
}

struct EnumArgs {
  int max_vertices = 60;
  bool no_budget = false;
  bool no_admissible = false;
  int workers = 1;
  std::string out;
};

int cmd_enumerate(const EnumArgs& a) {
  EnumConfig cfg;
  cfg.max_vertices = a.max_vertices;
  cfg.budget_prune = !a.no_budget;
  cfg.admissible_prune = !a.no_admissible;
  cfg.validate_output = !a.no_admissible;
  cfg.weights = compute_tau_table().weights();
  cfg.workers = workers_or(a.workers);
  EnumResult r = enumerate(cfg);
  std::string text = serialize_archive(r.maps);
  if (a.out.empty()) std::cout << text;
  else spill(a.out, text);
  std::cerr << stats_text(r.stats);
  return 0;
}

int cmd_validate(const std::string& archive) {
  SquanderWeights w = compute_tau_table().weights();
  int bad = 0;
  auto maps = parse_archive(slurp(archive));
  for (const auto& m : maps) {
    std::string verdict = "ok";
    try {
      check_structure(m);
      ValidationReport v = validate(m, &w);
      if (!v.ok()) {
        verdict.clear();
        for (const auto& x : v.violations)
          verdict += (verdict.empty() ? "" : "; ") + ("property " + std::to_string(x.property) + ": " + x.message);
      }
    } catch (const MapError& e) {
      verdict = std::string("structure: ") + e.what();
    }
    if (verdict != "ok") ++bad;
    std::cout << m.id << ' ' << verdict << '\n';
  }
  std::cout << maps.size() - bad << '/' << maps.size() << " valid\n";
  return bad ? 1 : 0;
}

struct BoundArgs {
  std::string archive;
  std::string map;
  bool branch = false;
  int max_splits = 0;
  int max_lps = 3000;
  std::string certs;
};

int cmd_bound(const BoundArgs& a) {
  SquanderWeights w = compute_tau_table().weights();
  BranchOptions opt;
  opt.quads = a.branch;
  opt.probe_heights = a.branch;
  opt.max_tet_splits = a.branch ? a.max_splits : 0;
  opt.max_lps = a.max_lps;
  opt.keep_dumps = !a.certs.empty();
  int shown = 0;
  for (const auto& m : parse_archive(slurp(a.archive))) {
    if (!a.map.empty() && m.id != a.map) continue;
    ++shown;
    BoundReport r = bound_map(m, w, opt);
    std::cout << m.id << ' ' << verdict_name(r.verdict) << " base " << std::fixed << std::setprecision(6)
              << r.base_value_pt << " pt";
    if (r.base_bound) std::cout << " certified " << to_double(*r.base_bound) / constants().pt << " pt";
    std::cout << " leaves " << r.cases.size() - 1 << " lps " << r.lp_solves << std::setprecision(2) << " " << r.seconds
              << "s";
    if (!r.note.empty()) std::cout << " (" << r.note << ")";
    std::cout << '\n';
    if (!a.certs.empty()) {
      fs::path dir = fs::path(a.certs) / m.id;
      for (size_t i = 0; i < r.cases.size(); ++i) {
        const CaseResult& c = r.cases[i];
        std::string stem = i == 0 ? "base" : "leaf-" + std::to_string(i);
        if (c.solved && c.failure.empty()) spill(dir / (stem + ".cert"), write_certificate(c.cert));
        if (!c.lp_dump.empty()) {
          fs::create_directories(dir);
          write_gz((dir / (stem + ".lp.gz")).string(), c.lp_dump);
        }
      }
    }
  }
  if (!a.map.empty() && shown == 0) {
    std::cerr << "no map " << a.map << " in " << a.archive << '\n';
    return 2;
  }
  return 0;
}

int cmd_certify(const std::string& config, const std::string& out_dir, bool quiet) {
  PipelineConfig cfg = load_config(config);
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  RunManifest m = run_pipeline(cfg, quiet ? nullptr : &std::cerr);
  std::cout << report_table(m);
  return m.unresolved > 0 || !m.counters_consistent() ? 1 : 0;
}

int cmd_recheck(const std::string& dir) {
  RecheckResult r = recheck(dir);
  for (const auto& f : r.failures) std::cout << "FAIL " << f << '\n';
  std::cout << r.passed << '/' << r.certificates << " certificates passed, " << r.failures.size() << " failures\n";
  return r.ok() ? 0 : 1;
}

int cmd_report(const std::string& dir, bool table) {
  RunManifest m = parse_manifest(slurp((fs::path(dir) / "manifest.txt").string()));
  std::cout << (table ? report_table(m) : report_text(m));
  return m.counters_consistent() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"starbound: planar map enumeration and certified LP bounds"};
  app.require_subcommand(1);

  auto* constants_cmd = app.add_subcommand("constants", "Print the constants with their enclosures");
  auto* tau_cmd = app.add_subcommand("tau-table", "Compute the vertex squander table and type exclusions");

  EnumArgs ea;
  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate planar maps into an archive");
  enum_cmd->add_option("--max-vertices", ea.max_vertices, "Vertex cap")->check(CLI::Range(4, 200));
  enum_cmd->add_flag("--no-budget-prune", ea.no_budget, "Disable the squander budget prune");
  enum_cmd->add_flag("--no-admissible-prune", ea.no_admissible, "Disable type pruning and output validation");
  enum_cmd->add_option("--workers", ea.workers, "Worker threads")->check(CLI::PositiveNumber);
  enum_cmd->add_option("-o,--out", ea.out, "Archive file (default: stdout)");

  std::string validate_archive;
  auto* validate_cmd = app.add_subcommand("validate", "Check every map of an archive");
  validate_cmd->add_option("archive", validate_archive)->required()->check(CLI::ExistingFile);

  BoundArgs ba;
  auto* bound_cmd = app.add_subcommand("bound", "Bound maps by the star relaxation");
  bound_cmd->add_option("archive", ba.archive)->required()->check(CLI::ExistingFile);
  bound_cmd->add_option("--map", ba.map, "Only this map id");
  bound_cmd->add_flag("--branch", ba.branch, "Branch on quad types and probe caps");
  bound_cmd->add_option("--max-splits", ba.max_splits, "Perimeter splits at failing leaves")->check(CLI::NonNegativeNumber);
  bound_cmd->add_option("--max-lps", ba.max_lps, "LP budget per map")->check(CLI::PositiveNumber);
  bound_cmd->add_option("--certs", ba.certs, "Write certificates and LP dumps here");

  std::string config, out_dir;
  bool quiet = false;
  auto* certify_cmd = app.add_subcommand("certify", "Run the full pipeline from a config file");
  certify_cmd->add_option("--config", config, "key = value config file")->required()->check(CLI::ExistingFile);
  certify_cmd->add_option("--out-dir", out_dir, "Override the output directory");
  certify_cmd->add_flag("-q,--quiet", quiet, "No progress lines");

  std::string recheck_dir;
  auto* recheck_cmd = app.add_subcommand("recheck", "Re-verify a pipeline output directory without solving");
  recheck_cmd->add_option("dir", recheck_dir)->required()->check(CLI::ExistingDirectory);

  std::string report_dir;
  bool table = false;
  auto* report_cmd = app.add_subcommand("report", "Print the report of a pipeline output directory");
  report_cmd->add_option("dir", report_dir)->required()->check(CLI::ExistingDirectory);
  report_cmd->add_flag("--table", table, "Aligned table instead of structured records");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*constants_cmd) return cmd_constants();
    if (*tau_cmd) return cmd_tau_table();
    if (*enum_cmd) return cmd_enumerate(ea);
    if (*validate_cmd) return cmd_validate(validate_archive);
    if (*bound_cmd) return cmd_bound(ba);
    if (*certify_cmd) return cmd_certify(config, out_dir, quiet);
    if (*recheck_cmd) return cmd_recheck(recheck_dir);
    if (*report_cmd) return cmd_report(report_dir, table);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
