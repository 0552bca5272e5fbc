#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starbound/certificate.hpp"
#include "starbound/lp.hpp"
#include "starbound/pipeline.hpp"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace starbound;
namespace fs = std::filesystem;

namespace {

const std::string kArchive = std::string(STARBOUND_TEST_DIR) + "/data/small_archive.txt";

fs::path scratch_root() { return fs::temp_directory_path() / ("starbound-test-" + std::to_string(getpid())); }

struct Cleanup {
  ~Cleanup() {
    std::error_code ec;
    fs::remove_all(scratch_root(), ec);
  }
} cleanup;

fs::path scratch(const std::string& name) {
  fs::path p = scratch_root() / name;
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

PipelineConfig small_config(const fs::path& out, bool cache = false) {
  PipelineConfig c;
  c.archive = kArchive;
  c.out_dir = out.string();
  c.cache = cache;
  return c;
}

// One run shared by the read-only checks.
const fs::path& shared_run() {
  static const fs::path dir = [] {
    fs::path d = scratch("shared");
    run_pipeline(small_config(d));
    return d;
  }();
  return dir;
}

const MapRecord& record(const RunManifest& m, const std::string& id) {
  for (const auto& r : m.maps)
    if (r.map_id == id) return r;
  throw std::out_of_range(id);
}

}  // namespace

TEST_CASE("config parsing") {
  PipelineConfig d = parse_config("");
  CHECK(d.vertex_cap == 60);
  CHECK(d.branch);
  CHECK(d.workers == 1);

  PipelineConfig c = parse_config(
      "# comment\n"
      "vertex_cap = 14   # trailing\n"
      "branch = false\n"
      "max_tet_splits = 4\n"
      "out_dir = /tmp/x\n"
      "workers = 3\n");
  CHECK(c.vertex_cap == 14);
  CHECK_FALSE(c.branch);
  CHECK(c.max_tet_splits == 4);
  CHECK(c.out_dir == "/tmp/x");
  CHECK(c.workers == 3);

  CHECK_THROWS_AS(parse_config("colour = red\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("vertex_cap = twelve\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("vertex_cap = 12x\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("workers = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("branch = maybe\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("branch = true\nbranch = false\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("just words\n"), ConfigError);
}

TEST_CASE("config hash covers results, not locations") {
  PipelineConfig a, b;
  b.out_dir = "elsewhere";
  b.workers = 8;
  b.cache = false;
  CHECK(a.hash() == b.hash());
  b.branch = false;
  CHECK(a.hash() != b.hash());
  PipelineConfig c;
  c.max_tet_splits = 3;
  CHECK(a.hash() != c.hash());
  CHECK(a.hash().size() == 64);
}

TEST_CASE("worker override from the environment") {
  setenv("STARBOUND_WORKERS", "5", 1);
  CHECK(worker_override() == 5);
  setenv("STARBOUND_WORKERS", "none", 1);
  CHECK_FALSE(worker_override());
  setenv("STARBOUND_WORKERS", "-2", 1);
  CHECK_FALSE(worker_override());
  unsetenv("STARBOUND_WORKERS");
  CHECK_FALSE(worker_override());
}

TEST_CASE("gzip round trip") {
  fs::path d = scratch("gz");
  fs::create_directories(d);
  std::string data(300000, 'a');
  for (size_t i = 0; i < data.size(); i += 7) data[i] = static_cast<char>('0' + i % 10);
  write_gz((d / "x.gz").string(), data);
  CHECK(read_gz((d / "x.gz").string()) == data);
  CHECK(fs::file_size(d / "x.gz") < data.size() / 4);
  std::string raw = slurp(d / "x.gz");
  raw[raw.size() / 2] ^= 0x55;
  std::ofstream(d / "bad.gz", std::ios::binary) << raw;
  CHECK_THROWS(read_gz((d / "bad.gz").string()));
  CHECK_THROWS(read_gz((d / "missing.gz").string()));
}

TEST_CASE("small archive end to end") {
  const fs::path& d = shared_run();
  for (const char* f : {"archive.txt", "weights.txt", "manifest.txt", "report.txt", "report_table.txt", "timing.txt"})
    CHECK(fs::exists(d / f));
  RunManifest m = parse_manifest(slurp(d / "manifest.txt"));
  CHECK(m.counters_consistent());
  CHECK(m.enumerated == 4);
  CHECK(m.eliminated_base == 2);
  CHECK(m.eliminated_branch == 1);
  CHECK(m.references == 1);
  CHECK(m.survivors == 0);
  CHECK(m.unresolved == 0);
  CHECK(record(m, "m0443").reference == "hcp");
  CHECK(record(m, "m0443").base_value_pt >= 8.0 - 1e-9);
  const MapRecord& b = record(m, "m0781");
  CHECK(b.status == MapStatus::EliminatedBranch);
  CHECK(b.leaves.size() == 5);
  CHECK(b.base.kind == "bound");
  CHECK(record(m, "m0001").leaves.size() == 1);

  // manifest text is a fixed point of parse + print
  CHECK(m.text() == slurp(d / "manifest.txt"));
  CHECK(report_text(m) == slurp(d / "report.txt"));
  CHECK(report_table(m).find("eliminated-branch") != std::string::npos);
}

TEST_CASE("untouched output rechecks clean") {
  RecheckResult r = recheck(shared_run().string());
  for (const auto& f : r.failures) MESSAGE(f);
  CHECK(r.ok());
  CHECK(r.certificates == 9);
  CHECK(r.passed == 9);
}

TEST_CASE("one flipped certificate byte fails exactly that case") {
  fs::path d = scratch("tamper");
  fs::copy(shared_run(), d, fs::copy_options::recursive);
  fs::path cert = d / "certs/m0781/leaf-3.cert";
  std::string text = slurp(cert);
  size_t z = text.find("\nz ");
  REQUIRE(z != std::string::npos);
  size_t digit = text.find_first_of("123456789", text.find(' ', z + 3) + 1);
  text[digit] = text[digit] == '9' ? '1' : static_cast<char>(text[digit] + 1);
  std::ofstream(cert, std::ios::binary) << text;
  RecheckResult r = recheck(d.string());
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].find("certs/m0781/leaf-3.cert") == 0);
  CHECK(r.passed == r.certificates - 1);
}

TEST_CASE("edited LP dump is caught by the rebuild") {
  fs::path d = scratch("lpedit");
  fs::copy(shared_run(), d, fs::copy_options::recursive);
  fs::path lp = d / "certs/m0001/base.lp.gz";
  std::string text = read_gz(lp.string());
  size_t row = text.find("\nrow ");
  REQUIRE(row != std::string::npos);
  text.erase(row, text.find('\n', row + 1) - row);
  write_gz(lp.string(), text);
  RecheckResult r = recheck(d.string());
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].find("differs from the relaxation") != std::string::npos);
}

TEST_CASE("missing files and dropped leaves are reported") {
  fs::path d = scratch("missing");
  fs::copy(shared_run(), d, fs::copy_options::recursive);
  fs::remove(d / "certs/m0002/base.cert");
  std::string man = slurp(d / "manifest.txt");
  size_t leaf = man.find("  leaf bound q:t24");
  REQUIRE(leaf != std::string::npos);
  man.erase(leaf, man.find('\n', leaf) + 1 - leaf);
  std::ofstream(d / "manifest.txt", std::ios::binary) << man;
  RecheckResult r = recheck(d.string());
  bool unreadable = false, uncovered = false;
  for (const auto& f : r.failures) {
    unreadable |= f.find("certs/m0002/base.cert") == 0;
    uncovered |= f.find("m0781: leaves do not cover") == 0;
  }
  CHECK(unreadable);
  CHECK(uncovered);
}

TEST_CASE("weights above the published table are refused") {
  fs::path d = scratch("weights");
  fs::copy(shared_run(), d, fs::copy_options::recursive);
  std::ofstream(d / "weights.txt", std::ios::app) << "tau 4 0 100\n";
  CHECK_FALSE(recheck(d.string()).ok());
}

TEST_CASE("certificate applied to another map's LP is rejected") {
  const fs::path& d = shared_run();
  LPProblem other = parse_lp(read_gz((d / "certs/m0002/base.lp.gz").string()));
  DualCertificate cert = parse_certificate(slurp(d / "certs/m0001/base.cert"));
  CertReport r = check_certificate(other, cert, score_target());
  CHECK_FALSE(r.accepted);
  CHECK_FALSE(r.failure.empty());

  DualCertificate own = parse_certificate(slurp(d / "certs/m0002/base.cert"));
  CHECK(check_certificate(other, own, score_target()).accepted);
}

TEST_CASE("reruns are byte-identical and the cache agrees") {
  fs::path a = scratch("run-a"), b = scratch("run-b");
  RunManifest ma = run_pipeline(small_config(a, true));
  RunManifest mb = run_pipeline(small_config(b));
  CHECK(slurp(a / "manifest.txt") == slurp(b / "manifest.txt"));
  for (const auto& e : fs::recursive_directory_iterator(a / "certs")) {
    if (!e.is_regular_file()) continue;
    fs::path rel = fs::relative(e.path(), a);
    CHECK(slurp(e.path()) == slurp(b / rel));
  }
  // second run in the same place is served from the cache
  std::string first = slurp(a / "manifest.txt");
  RunManifest again = run_pipeline(small_config(a, true));
  CHECK(slurp(a / "manifest.txt") == first);
  CHECK(recheck(a.string()).ok());
}

TEST_CASE("branching never loses eliminations") {
  fs::path d = scratch("nobranch");
  PipelineConfig c = small_config(d);
  c.branch = false;
  RunManifest off = run_pipeline(c);
  RunManifest on = parse_manifest(slurp(shared_run() / "manifest.txt"));
  for (const auto& r : on.maps)
    if (r.status == MapStatus::Survivor) CHECK(record(off, r.map_id).status == MapStatus::Survivor);
  CHECK(record(off, "m0781").status == MapStatus::Survivor);
  CHECK(off.counters_consistent());
  CHECK(off.config_hash != on.config_hash);
  CHECK(recheck(d.string()).ok());
}

TEST_CASE("case tree coverage") {
  CHECK(covers_case_tree({"base"}, 0));
  CHECK(covers_case_tree({"base"}, 2));
  CHECK_FALSE(covers_case_tree({}, 1));
  CHECK(covers_case_tree({"q:f13", "q:f24", "q:up", "q:t13", "q:t24"}, 1));
  CHECK_FALSE(covers_case_tree({"q:f13", "q:f24", "q:up", "q:t13"}, 1));
  // partial assignments prune their subtrees
  CHECK(covers_case_tree({"q:f13.any", "q:f24.any", "q:t13.any", "q:t24.any", "q:up.f13", "q:up.f24", "q:up.up",
                          "q:up.t13", "q:up.t24"},
                         2));
  CHECK_FALSE(covers_case_tree({"q:f13.any", "q:f24.any", "q:t13.any", "q:t24.any", "q:up.f13"}, 2));
  // perimeter splits, injected rows and probe leaves
  CHECK(covers_case_tree({"t:3s", "t:3l,5s", "t:3l,5l|i:A.8.2"}, 0));
  CHECK_FALSE(covers_case_tree({"t:3s", "t:3l,5s"}, 0));
  CHECK(covers_case_tree({"base|probe:max:h[2]"}, 0));
  CHECK(covers_case_tree({"q:f13", "q:f24", "q:up|probe:max:h[0]", "q:t13|t:1s", "q:t13|t:1l", "q:t24"}, 1));
  CHECK_THROWS(covers_case_tree({"q:zz"}, 1));
}
