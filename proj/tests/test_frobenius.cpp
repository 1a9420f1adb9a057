#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "normgraph/frobenius.hpp"
#include "normgraph/graph.hpp"
#include "normgraph/group_core.hpp"
#include "test_util.hpp"

using namespace normgraph;
using testutil::perm;

namespace {

using Primes = std::vector<std::uint32_t>;

FiniteGroup c2_3_c7() {
  return semidirect_product(2, 3, {Matrix::from_rows(2, {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}})});
}

}  // namespace

TEST_CASE("Frobenius structure of small groups") {
  struct Case {
    const char* name;
    FiniteGroup group;
    std::uint32_t kernel_order;
    Primes kernel_primes, complement_primes;
    bool criterion;
  };
  const std::vector<Case> cases = {
      {"S3", testutil::s3(), 3, {3}, {2}, false},
      {"A4", testutil::a4(), 4, {2}, {3}, true},
      {"C7:C3", testutil::c7_c3(), 7, {7}, {3}, false},
      {"C5:C4", testutil::c5_c4(), 5, {5}, {2}, false},
      {"D10", make_dihedral(5), 5, {5}, {2}, false},
      {"C2^3:C7", c2_3_c7(), 8, {2}, {7}, true},
  };
  for (const Case& c : cases) {
    CAPTURE(c.name);
    const FrobeniusStructure fs = detect_frobenius(c.group);
    REQUIRE(fs.is_frobenius);
    CHECK(fs.kernel.order() == c.kernel_order);
    CHECK(fs.kernel_primes == c.kernel_primes);
    CHECK(fs.complement_primes == c.complement_primes);
    CHECK(disconnection_criterion(fs) == c.criterion);
    REQUIRE(fs.complement.has_value());
    CHECK(fs.complement->order() * c.kernel_order == c.group.order());
    CHECK(is_frobenius_complement(c.group, *fs.complement));
  }
}

TEST_CASE("groups that are not Frobenius") {
  const FiniteGroup s5 = make_symmetric(5);
  for (const FiniteGroup& g : {testutil::s4(), make_dihedral(4), make_cyclic(12), testutil::q8(), make_cyclic(6), s5}) {
    const FrobeniusStructure fs = detect_frobenius(g);
    CHECK_FALSE(fs.is_frobenius);
    CHECK_THROWS_AS(disconnection_criterion(fs), FrobeniusError);
    CHECK_THROWS_AS(predicted_components(g, fs), FrobeniusError);
  }
  CHECK_THROWS(detect_frobenius(make_cyclic(1)));
}

TEST_CASE("predicted components need the criterion and a complement") {
  const FiniteGroup s3 = testutil::s3();
  CHECK_THROWS_AS(predicted_components(s3, detect_frobenius(s3)), FrobeniusError);
  const FiniteGroup a4 = testutil::a4();
  FrobeniusStructure fs = detect_frobenius(a4, 0);  // no complement search
  CHECK_FALSE(fs.complement.has_value());
  CHECK_THROWS_AS(predicted_components(a4, fs), FrobeniusError);
}

TEST_CASE("predicted components match the normalising graph") {
  for (const FiniteGroup& g : {testutil::a4(), c2_3_c7()}) {
    const FrobeniusStructure fs = detect_frobenius(g);
    const auto predicted = predicted_components(g, fs);
    CHECK(predicted.size() == 1 + fs.kernel.order());

    const CyclicSubgroupTable t(g);
    const SymmetryData sym(t);
    const CollapsedGraph graph = build_collapsed_graph(GraphKind::normalising, sym);
    std::vector<std::vector<ElementId>> actual;
    for (const auto& comp : connected_components(graph)) {
      std::vector<ElementId> elems;
      for (CyclicId c : comp)
        for (ElementId x : t.generators(c)) elems.push_back(x);
      std::sort(elems.begin(), elems.end());
      actual.push_back(elems);
    }
    std::sort(actual.begin(), actual.end());
    CHECK(actual == predicted);
  }
}

TEST_CASE("kernel-first detection agrees with complement search") {
  for (const auto& [id, g] : testutil::corpus_groups(500)) {
    if (g.order() == 1) continue;
    CAPTURE(id);
    const FrobeniusStructure fs = detect_frobenius(g);
    const ComplementSearchResult cs = frobenius_by_complement_search(g);
    REQUIRE(fs.is_frobenius == cs.is_frobenius);
    if (!fs.is_frobenius) continue;
    REQUIRE(cs.kernel.has_value());
    CHECK(*cs.kernel == fs.kernel);
    CHECK(is_normal(g, fs.kernel));
    CHECK(is_nilpotent(g, fs.kernel));
    const std::uint32_t index = g.order() / fs.kernel.order();
    CHECK(std::gcd(index, fs.kernel.order()) == 1);
    REQUIRE(fs.complement.has_value());
    CHECK(fs.complement->order() == index);
    CHECK(is_frobenius_complement(g, *fs.complement));
    for (ElementId k : fs.kernel.elements())
      if (k != kIdentity) CHECK(centralizer(g, k).is_subset_of(fs.kernel));
  }
}
