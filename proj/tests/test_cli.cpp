#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "schema_check.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

#ifndef NORMGRAPH_CLI
#error "NORMGRAPH_CLI must point at the normgraph executable"
#endif

namespace {

struct ScratchDir {
  fs::path path = fs::temp_directory_path() / ("normgraph-cli-" + std::to_string(::getpid()));
  ScratchDir() { fs::create_directories(path); }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

const fs::path& scratch() {
  static const ScratchDir dir;
  return dir.path;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_spec(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / (name + ".spec");
  std::ofstream(p) << text;
  return p;
}

struct Run {
  int exit_code = -1;
  std::string stdout_text, stderr_text;
  json report;  // from --output, when written
};

Run run(const std::string& args, bool with_output = true) {
  static int counter = 0;
  const std::string tag = std::to_string(++counter);
  const fs::path out = scratch() / ("out" + tag), err = scratch() / ("err" + tag), rep = scratch() / ("rep" + tag + ".json");
  std::string cmd = std::string(NORMGRAPH_CLI) + " " + args;
  if (with_output) cmd += " --output " + rep.string();
  cmd += " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  Run r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.stdout_text = read_file(out);
  r.stderr_text = read_file(err);
  if (fs::exists(rep)) r.report = json::parse(read_file(rep));
  return r;
}

json schema(const std::string& name) {
  return json::parse(read_file(fs::path(NORMGRAPH_SOURCE_DIR) / "schemas" / (name + ".schema.json")));
}

void check_schema(const json& doc, const std::string& name) {
  const auto errors = schema_check::validate(doc, schema(name));
  for (const auto& e : errors) FAIL_CHECK(e);
}

const char* kS3 = R"({"kind": "symmetric", "n": 3})";
const char* kA4 = R"({"kind": "permutation", "degree": 4, "generators": [[[1,2,3]], [[1,2],[3,4]]]})";

}  // namespace

TEST_CASE("schema validator rejects bad documents") {
  const json s = schema("graph");
  CHECK_FALSE(schema_check::validate(json{{"command", "graph"}}, s).empty());
  CHECK_FALSE(schema_check::validate(json{{"command", "graph"}, {"spec", "x"}, {"kind", "planar"}, {"order", 6},
                                          {"vertices", 4}, {"partial", false}},
                                     s)
                  .empty());
  CHECK(schema_check::validate(json{{"command", "graph"}, {"spec", "x"}, {"kind", "engel"}, {"order", 6},
                                    {"vertices", 4}, {"partial", false}},
                               s)
            .empty());
}

TEST_CASE("build-info") {
  Run r = run("build-info " + write_spec("s3", kS3).string());
  CHECK(r.exit_code == 0);
  check_schema(r.report, "build-info");
  CHECK(r.report["order"] == 6);
  CHECK(r.report["soluble"] == true);
  CHECK(r.report["frobenius"]["frobenius"] == true);
  CHECK(r.report["frobenius"]["kernel_order"] == 3);
  CHECK(r.stdout_text.find("order 6") != std::string::npos);

  r = run("build-info " + write_spec("c12", R"({"kind": "cyclic", "n": 12})").string());
  CHECK(r.exit_code == 0);
  check_schema(r.report, "build-info");
  CHECK(r.report["nilpotent"] == true);
  CHECK(r.report["fitting_order"] == 12);

  r = run("build-info " + write_spec("trivial", R"({"kind": "cyclic", "n": 1})").string());
  CHECK(r.exit_code == 0);
  check_schema(r.report, "build-info");

  r = run("build-info " + write_spec("broken", "{\"kind\": \"cyclic\",\n \"n\": }").string());
  CHECK(r.exit_code == 2);
  CHECK(r.stderr_text.find("line 2") != std::string::npos);
  CHECK(run("build-info /nonexistent.spec").exit_code == 2);
}

TEST_CASE("graph") {
  const std::string s3 = write_spec("s3", kS3).string(), a4 = write_spec("a4", kA4).string();
  Run r = run("graph " + s3 + " --kind normalising --diameter");
  CHECK(r.exit_code == 0);
  check_schema(r.report, "graph");
  CHECK(r.report["diameter"] == 2);

  r = run("graph " + a4 + " --kind normalising --components --diameter");
  CHECK(r.exit_code == 0);
  check_schema(r.report, "graph");
  CHECK(r.report["components"] == 5);
  CHECK(r.report["connected"] == false);
  CHECK(r.report["diameter"].is_null());

  r = run("graph " + a4 + " --kind permuting --components");
  CHECK(r.report["components"] == 5);

  const fs::path edges = scratch() / "s3.edges";
  r = run("graph " + s3 + " --kind permuting --export " + edges.string());
  CHECK(r.exit_code == 0);
  check_schema(r.report, "graph");
  CHECK(read_file(edges).rfind("permuting 4 3\n", 0) == 0);

  r = run("graph " + a4 + " --kind soluble --max-entries 4");
  CHECK(r.exit_code == 3);
  check_schema(r.report, "graph");
  CHECK(r.report["partial"] == true);

  CHECK(run("graph " + s3 + " --kind planar").exit_code == 2);
  CHECK(run("graph " + s3).exit_code == 2);
  CHECK(run("graph " + s3 + " --kind engel --threads 0").exit_code == 2);
}

TEST_CASE("verify") {
  Run r = run("verify --suite theorem1 --group A4");
  CHECK(r.exit_code == 0);
  check_schema(r.report, "verify");
  REQUIRE(r.report["reports"].size() == 1);
  bool disconnected_branch = false;
  for (const auto& c : r.report["reports"][0]["claims"])
    disconnected_branch |= c["id"] == "disconnected-is-frobenius" && c["status"] == "pass";
  CHECK(disconnected_branch);

  CHECK(run("verify --suite \"\"").exit_code == 2);
  CHECK(run("verify --suite nonsense").exit_code == 2);
  CHECK(run("verify --corpus /nonexistent.json").exit_code == 2);

  // a wrong expectation fails with exit 1
  const fs::path corpus = scratch() / "corpus.json";
  std::ofstream(corpus) << R"({"groups": [{"id": "S4", "tags": ["frobenius-expected"], "spec": {"kind": "symmetric", "n": 4}}]})";
  r = run("verify --suite theorem1 --corpus " + corpus.string());
  CHECK(r.exit_code == 1);
  check_schema(r.report, "verify");
  CHECK(r.report["passed"] == false);

  // a group that fails to build is reported, not fatal
  std::ofstream(corpus) << R"({"groups": [{"id": "bad", "spec": {"kind": "cyclic", "n": 0}},
                                         {"id": "C5", "spec": {"kind": "cyclic", "n": 5}}]})";
  r = run("verify --suite hierarchy --corpus " + corpus.string());
  CHECK(r.exit_code == 1);
  check_schema(r.report, "verify");
  CHECK(r.report["reports"].size() == 2);
}

TEST_CASE("verify is deterministic across thread counts") {
  Run one = run("verify --suite all --group S3,A4,D8,C7:C3,S3xC3 --threads 1");
  Run two = run("verify --suite all --group S3,A4,D8,C7:C3,S3xC3 --threads 3");
  CHECK(one.exit_code == 0);
  CHECK(one.report["reports"].size() == 5 * 7);
  one.report.erase("timestamp");
  two.report.erase("timestamp");
  CHECK(one.report == two.report);
}

TEST_CASE("default corpus, every suite") {
  Run r = run("verify");
  CHECK(r.exit_code == 0);
  check_schema(r.report, "verify");
  CHECK(r.report["passed"] == true);
}

TEST_CASE("diameter-six example, local phase") {
  Run r = run("paper-example --phase local");
  CHECK(r.exit_code == 0);
  check_schema(r.report, "paper-example");
  CHECK(r.report["local"]["order_x"] == 9);
  CHECK(r.report["local"]["h_to_hw_permuting_edges"] == 0);
  CHECK(r.report["local"]["x_to_n_permuting_edges"] == 0);
  CHECK(run("paper-example --phase sideways").exit_code == 2);
}

TEST_CASE("diameter-six example, full run") {
  const std::string ckpt = (scratch() / "d6").string();
  Run one = run("paper-example --phase all --threads 1");
  CHECK(one.exit_code == 0);
  check_schema(one.report, "paper-example");
  CHECK(one.report["diameters"]["graphs"]["normalising"]["diameter"] == 6);
  CHECK(one.report["diameters"]["graphs"]["permuting"]["diameter"] == 6);

  Run two = run("paper-example --phase all --threads 2 --checkpoint " + ckpt);
  CHECK(two.exit_code == 0);
  CHECK(fs::exists(ckpt + ".normalising"));
  // resumed entirely from the checkpoint files
  Run resumed = run("paper-example --phase all --threads 2 --checkpoint " + ckpt);
  CHECK(resumed.exit_code == 0);
  for (Run* r : {&one, &two, &resumed}) r->report.erase("seconds");
  CHECK(one.report == two.report);
  CHECK(one.report == resumed.report);

  std::ofstream(ckpt + ".normalising", std::ios::trunc) << "garbage, not a checkpoint";
  Run corrupt = run("paper-example --phase diameters --checkpoint " + ckpt);
  CHECK(corrupt.exit_code == 2);
  CHECK(corrupt.stderr_text.find("magic") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run("", false).exit_code == 2);
  CHECK(run("frobnicate", false).exit_code == 2);
  CHECK(run("verify --no-such-flag", false).exit_code == 2);
  Run help = run("--help", false);
  CHECK(help.exit_code == 0);
  CHECK(help.stdout_text.find("paper-example") != std::string::npos);
}
