#include "doctest.h"
#include "normgraph/verifier.hpp"
#include "test_util.hpp"

using namespace normgraph;
using nlohmann::json;

namespace {

bool all_passed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return true;
}

std::vector<Suite> every_suite() { return {std::begin(kAllSuites), std::end(kAllSuites)}; }

const char* kSmallCorpus = R"({"groups": [
  {"id": "S3", "tags": ["soluble", "frobenius-expected"], "spec": {"kind": "symmetric", "n": 3}},
  // comments are accepted
  {"id": "A4", "tags": ["soluble", "frobenius-expected", "disconnected-expected"],
   "spec": {"kind": "permutation", "degree": 4, "generators": [[[1,2,3]], [[1,2],[3,4]]]}},
  {"id": "D8", "tags": ["soluble"], "spec": {"kind": "dihedral", "n": 4}}
]})";

}  // namespace

TEST_CASE("suite names round-trip") {
  for (Suite s : kAllSuites) CHECK(parse_suite(to_string(s)) == s);
  CHECK_THROWS_AS(parse_suite("theorem9"), std::invalid_argument);
}

TEST_CASE("report bookkeeping") {
  VerificationReport r{"hierarchy", "G", {}};
  CHECK(r.passed());
  r.add("a", "x", true, json{{"ignored", 1}}, json{{"v", 2}});
  CHECK(r.claims.back().witness.is_null());
  r.skip("b", "y", "too large");
  CHECK(r.passed());
  r.add("c", "z", false, nullptr, json{{"v", 3}});
  CHECK_FALSE(r.passed());
  CHECK(r.claims.back().witness == json{{"v", 3}});
  r.add("d", "w", false);
  CHECK_FALSE(r.claims.back().witness.is_null());
  const json j = r.to_json();
  CHECK(j["suite"] == "hierarchy");
  CHECK(j["claims"].size() == 4);
  CHECK(j["claims"][1]["status"] == "skipped");
}

TEST_CASE("empty corpus passes vacuously") {
  const Corpus c = parse_corpus(R"({"groups": []})");
  CHECK(c.entries.empty());
  CHECK(run_corpus(c, every_suite()).empty());
}

TEST_CASE("small corpus verifies under every suite") {
  const Corpus c = parse_corpus(kSmallCorpus);
  REQUIRE(c.entries.size() == 3);
  const auto reports = run_corpus(c, every_suite());
  CHECK(reports.size() == 3 * std::size(kAllSuites));
  for (const auto& r : reports) {
    CAPTURE(r.group);
    CAPTURE(r.suite);
    CHECK(r.passed());
  }
  // report order: corpus entry, then suite
  CHECK(reports.front().group == "S3");
  CHECK(reports.front().suite == to_string(kAllSuites[0]));
  CHECK(reports.back().group == "D8");
}

TEST_CASE("wrong expectations are reported with a witness") {
  const Corpus c = parse_corpus(R"({"groups": [
    {"id": "S4", "tags": ["frobenius-expected"], "spec": {"kind": "symmetric", "n": 4}},
    {"id": "S3", "tags": ["disconnected-expected"], "spec": {"kind": "symmetric", "n": 3}}]})");
  const auto reports = run_corpus(c, {Suite::theorem1});
  REQUIRE(reports.size() == 2);
  for (const auto& r : reports) {
    CHECK_FALSE(r.passed());
    for (const auto& claim : r.claims)
      if (claim.status == ClaimStatus::fail) CHECK_FALSE(claim.witness.is_null());
  }
}

TEST_CASE("a group that fails to build does not stop the run") {
  const Corpus c = parse_corpus(R"({"groups": [
    {"id": "bad-table", "spec": {"kind": "table", "order": 2, "table": [[0, 1], [0, 1]]}},
    {"id": "bad-kind", "spec": {"kind": "sporadic"}},
    {"id": "trivial", "spec": {"kind": "cyclic", "n": 1}},
    {"id": "C4", "spec": {"kind": "cyclic", "n": 4}}]})");
  REQUIRE(c.entries.size() == 4);
  const auto reports = run_corpus(c, {Suite::hierarchy});
  REQUIRE(reports.size() == 4);
  for (int i = 0; i < 3; ++i) {
    CHECK(reports[i].suite == "build");
    CHECK_FALSE(reports[i].passed());
    CHECK(reports[i].claims.front().witness.contains("error"));
  }
  CHECK(reports[3].group == "C4");
  CHECK(reports[3].passed());

  VerifyOptions tight;
  tight.corpus_bound = 3;
  const auto bounded = run_corpus(c, {Suite::hierarchy}, tight);
  CHECK(bounded.back().suite == "build");
}

TEST_CASE("corpus parse errors") {
  CHECK_THROWS_AS(parse_corpus("{"), SpecError);
  CHECK_THROWS_AS(parse_corpus(R"({"grups": []})"), SpecError);
  try {
    parse_corpus(R"({"groups": [{"id": "x", "spec": {}}, {"spec": {}}]})");
    FAIL("expected SpecError");
  } catch (const SpecError& e) {
    CHECK(e.field() == "groups[1].id");
  }
  CHECK_THROWS_AS(load_corpus("/nonexistent/corpus.json"), SpecError);
}

TEST_CASE("corpus serialisation round-trips") {
  const Corpus c = default_corpus();
  const Corpus back = parse_corpus(corpus_to_json(c).dump());
  REQUIRE(back.entries.size() == c.entries.size());
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    CHECK(back.entries[i].id == c.entries[i].id);
    CHECK(back.entries[i].tags == c.entries[i].tags);
    CHECK(back.entries[i].spec_json == c.entries[i].spec_json);
  }
}

TEST_CASE("default corpus contents") {
  const Corpus c = default_corpus();
  bool has_disconnected = false, has_frobenius = false;
  for (const auto& e : c.entries) {
    CHECK(std::find(e.tags.begin(), e.tags.end(), "soluble") != e.tags.end());
    has_disconnected |= std::find(e.tags.begin(), e.tags.end(), "disconnected-expected") != e.tags.end();
    has_frobenius |= std::find(e.tags.begin(), e.tags.end(), "frobenius-expected") != e.tags.end();
  }
  CHECK(has_disconnected);
  CHECK(has_frobenius);
  CHECK(c.entries.size() > 90);
}

TEST_CASE("output is deterministic across runs and thread counts") {
  const Corpus c = parse_corpus(kSmallCorpus);
  VerifyOptions one, two;
  two.threads = 2;
  auto dump = [](const std::vector<VerificationReport>& rs) {
    json j = json::array();
    for (const auto& r : rs) j.push_back(r.to_json());
    return j.dump();
  };
  const std::string a = dump(run_corpus(c, every_suite(), one));
  CHECK(a == dump(run_corpus(c, every_suite(), one)));
  CHECK(a == dump(run_corpus(c, every_suite(), two)));
}

TEST_CASE("collapse equivalence respects the element oracle bound") {
  GroupAnalysis a("S4", testutil::s4());
  VerifyOptions opts;
  opts.element_oracle_bound = 10;
  const VerificationReport r = verify_collapse_equivalence(a, opts);
  CHECK(r.passed());
  bool skipped = false;
  for (const auto& claim : r.claims) skipped |= claim.status == ClaimStatus::skipped;
  CHECK(skipped);
  CHECK(all_passed({verify_collapse_equivalence(a)}));
}
