#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "normgraph/cyclic_collapse.hpp"
#include "normgraph/frobenius.hpp"
#include "normgraph/graph.hpp"
#include "normgraph/group_spec.hpp"

namespace normgraph {

enum class ClaimStatus { pass, fail, skipped };
std::string to_string(ClaimStatus s);

struct Claim {
  std::string id;
  std::string anchor;  // which statement is being checked
  ClaimStatus status = ClaimStatus::pass;
  nlohmann::json witness;  // null unless there is something to show
  nlohmann::json values;
};

struct VerificationReport {
  std::string suite;
  std::string group;
  std::vector<Claim> claims;

  bool passed() const;
  /// A failing claim always gets a witness; `witness` is ignored on success.
  void add(std::string id, std::string anchor, bool ok, nlohmann::json witness = nullptr,
           nlohmann::json values = nullptr);
  void skip(std::string id, std::string anchor, const std::string& reason);
  nlohmann::json to_json() const;
};

enum class Suite {
  hierarchy,
  theorem1,
  frobenius_bound,
  norm_distance,
  corollary,
  frobenius_lemmas,
  collapse_equivalence,
};

inline constexpr Suite kAllSuites[] = {Suite::hierarchy,        Suite::theorem1,  Suite::frobenius_bound,
                                       Suite::norm_distance,    Suite::corollary, Suite::frobenius_lemmas,
                                       Suite::collapse_equivalence};

std::string to_string(Suite s);
/// Throws std::invalid_argument for unknown names.
Suite parse_suite(const std::string& name);

struct VerifyOptions {
  /// Element-level oracles (collapse equivalence) run up to this order.
  std::uint32_t element_oracle_bound = 100;
  /// Exhaustive complement search runs up to this order.
  std::uint32_t frobenius_oracle_bound = 500;
  /// Groups above this order are not verified here.
  std::uint32_t corpus_bound = 20000;
  unsigned threads = 1;
};

/// Lazily computed data shared by the suites for one group. Not thread-safe;
/// each worker owns its own analysis.
class GroupAnalysis {
 public:
  GroupAnalysis(std::string id, FiniteGroup group, std::vector<std::string> tags = {});

  const std::string& id() const { return id_; }
  const FiniteGroup& group() const { return group_; }
  bool has_tag(const std::string& tag) const;

  bool soluble();
  const CyclicSubgroupTable& table();
  const SymmetryData& symmetry();
  const CollapsedGraph& graph(GraphKind kind);
  const DiameterResult& diameter(GraphKind kind);
  const FrobeniusStructure& frobenius();

 private:
  std::string id_;
  FiniteGroup group_;
  std::vector<std::string> tags_;
  std::optional<bool> soluble_;
  std::unique_ptr<CyclicSubgroupTable> table_;
  std::unique_ptr<SymmetryData> symmetry_;
  std::map<GraphKind, CollapsedGraph> graphs_;
  std::map<GraphKind, DiameterResult> diameters_;
  std::optional<FrobeniusStructure> frobenius_;
};

VerificationReport verify_hierarchy(GroupAnalysis& a);
VerificationReport verify_theorem1(GroupAnalysis& a);
VerificationReport verify_frobenius_bound(GroupAnalysis& a);
VerificationReport verify_norm_distance(GroupAnalysis& a);
VerificationReport verify_corollary(GroupAnalysis& a);
VerificationReport verify_frobenius_lemmas(GroupAnalysis& a, const VerifyOptions& options = {});
VerificationReport verify_collapse_equivalence(GroupAnalysis& a, const VerifyOptions& options = {});

VerificationReport run_suite(Suite suite, GroupAnalysis& a, const VerifyOptions& options = {});

struct CorpusEntry {
  std::string id;
  std::vector<std::string> tags;  // soluble, frobenius-expected, disconnected-expected
  GroupSpec spec;
  nlohmann::json spec_json;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
};

/// {"groups": [{"id", "tags", "spec"}]}; throws SpecError with the entry's
/// position in the field name.
Corpus parse_corpus(const std::string& text);
Corpus load_corpus(const std::string& path);
Corpus default_corpus();
nlohmann::json corpus_to_json(const Corpus& corpus);

/// Reports ordered by corpus entry, then by suite in kAllSuites order. A group
/// that fails to build yields one failing "build" report; the rest still run.
std::vector<VerificationReport> run_corpus(const Corpus& corpus, const std::vector<Suite>& suites,
                                           const VerifyOptions& options = {});

}  // namespace normgraph
