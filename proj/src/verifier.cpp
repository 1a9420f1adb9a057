#include "normgraph/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "normgraph/element_oracle.hpp"
#include "normgraph/group_core.hpp"

namespace normgraph {

using nlohmann::json;

namespace {

// What each suite checks, in words.
constexpr const char* kContainment = "graph containments K <= Gamma <= Psi <= Sigma, Gamma <= E";
constexpr const char* kIto = "permuting cyclic subgroups generate a soluble (metacyclic) subgroup";
constexpr const char* kDisconnection =
    "soluble G: Gamma disconnected iff Frobenius with p not dividing r-1 for p in pi(C), r in pi(K)";
constexpr const char* kComponentDiameter = "components of a disconnected Gamma have diameter at most 2";
constexpr const char* kComponents = "components of a disconnected Gamma are Gamma(K) and Gamma(C^k), k in K";
constexpr const char* kDiameterSix = "soluble G with connected Gamma: diam(Gamma) <= 6";
constexpr const char* kFrobeniusFour = "Frobenius G with connected Gamma: diam(Gamma) <= 4";
constexpr const char* kNormDistance = "soluble non-Frobenius G, minimal normal N: d(x,N) <= 3";
constexpr const char* kPermuting = "soluble G: Psi connected iff Gamma connected, and then diam(Psi) <= 6";
constexpr const char* kFrobeniusLemma = "Frobenius kernel/complement properties";
constexpr const char* kOddComplement = "odd-order soluble Frobenius complement: prime-order subgroups are normal";
constexpr const char* kCollapse = "element graphs collapse exactly onto cyclic subgroups";
constexpr const char* kCorpus = "corpus tags";

json element_json(const FiniteGroup& g, ElementId x) { return json{{"id", x}, {"element", g.describe(x)}}; }

json vertex_json(const CyclicSubgroupTable& t, CyclicId v) {
  return json{{"vertex", v}, {"generator", t.group().describe(t.canonical_generator(v))}, {"order", t.order(v)}};
}

json diameter_json(const DiameterResult& d) {
  return json{{"connected", d.connected},
              {"components", d.component_count},
              {"diameter", d.connected ? json(d.diameter) : json(nullptr)},
              {"component_diameters", d.component_diameters}};
}

std::vector<ElementId> component_elements(const CyclicSubgroupTable& t, const std::vector<std::uint32_t>& comp) {
  std::vector<ElementId> out;
  for (std::uint32_t v : comp)
    for (ElementId g : t.generators(v)) out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_cyclic(const FiniteGroup& g, const SubgroupSet& s) {
  return std::any_of(s.elements().begin(), s.elements().end(),
                     [&](ElementId x) { return element_order(g, x) == s.order(); });
}

bool normalises(const FiniteGroup& g, ElementId a, const SubgroupSet& s) {
  return std::all_of(s.elements().begin(), s.elements().end(),
                     [&](ElementId x) { return s.contains(g.conjugate(x, a)); });
}

bool normal_in(const FiniteGroup& g, const SubgroupSet& s, const SubgroupSet& ambient) {
  return std::all_of(ambient.elements().begin(), ambient.elements().end(),
                     [&](ElementId a) { return normalises(g, a, s); });
}

// Grow a p-subgroup of C one normalising p-element at a time; a p-subgroup
// that is not Sylow always has such an element in its normaliser.
std::optional<SubgroupSet> sylow_subgroup(const FiniteGroup& g, const SubgroupSet& c, std::uint32_t p) {
  std::uint32_t target = 1, rest = c.order();
  while (rest % p == 0) {
    rest /= p;
    target *= p;
  }
  SubgroupSet s;
  while (s.order() < target) {
    bool grown = false;
    for (ElementId x : c.elements()) {
      if (s.contains(x) || !is_prime_power(element_order(g, x), p) || !normalises(g, x, s)) continue;
      const ElementId extra[] = {x};
      s = join(g, s, extra);
      grown = true;
      break;
    }
    if (!grown) return std::nullopt;
  }
  return s;
}

std::uint32_t involution_count(const FiniteGroup& g, const SubgroupSet& s) {
  return static_cast<std::uint32_t>(
      std::count_if(s.elements().begin(), s.elements().end(), [&](ElementId x) { return element_order(g, x) == 2; }));
}

}  // namespace

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::skipped: return "skipped";
  }
  return "unknown";
}

bool VerificationReport::passed() const {
  return std::none_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status == ClaimStatus::fail; });
}

void VerificationReport::add(std::string id, std::string anchor, bool ok, json witness, json values) {
  Claim c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.status = ok ? ClaimStatus::pass : ClaimStatus::fail;
  if (!ok) c.witness = !witness.is_null() ? std::move(witness) : !values.is_null() ? values : json{{"claim", c.id}};
  c.values = std::move(values);
  claims.push_back(std::move(c));
}

void VerificationReport::skip(std::string id, std::string anchor, const std::string& reason) {
  Claim c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.status = ClaimStatus::skipped;
  c.values = json{{"reason", reason}};
  claims.push_back(std::move(c));
}

json VerificationReport::to_json() const {
  json cl = json::array();
  for (const auto& c : claims) {
    json j{{"id", c.id}, {"anchor", c.anchor}, {"status", to_string(c.status)}};
    if (!c.witness.is_null()) j["witness"] = c.witness;
    if (!c.values.is_null()) j["values"] = c.values;
    cl.push_back(std::move(j));
  }
  return json{{"suite", suite}, {"group", group}, {"claims", std::move(cl)}};
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::hierarchy: return "hierarchy";
    case Suite::theorem1: return "theorem1";
    case Suite::frobenius_bound: return "frobenius-bound";
    case Suite::norm_distance: return "norm-distance";
    case Suite::corollary: return "corollary";
    case Suite::frobenius_lemmas: return "frobenius-lemmas";
    case Suite::collapse_equivalence: return "collapse-equivalence";
  }
  return "unknown";
}

Suite parse_suite(const std::string& name) {
  for (Suite s : kAllSuites)
    if (to_string(s) == name) return s;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

// ---------------------------------------------------------------------------

GroupAnalysis::GroupAnalysis(std::string id, FiniteGroup group, std::vector<std::string> tags)
    : id_(std::move(id)), group_(std::move(group)), tags_(std::move(tags)) {}

bool GroupAnalysis::has_tag(const std::string& tag) const {
  return std::find(tags_.begin(), tags_.end(), tag) != tags_.end();
}

bool GroupAnalysis::soluble() {
  if (!soluble_) soluble_ = is_soluble(group_);
  return *soluble_;
}

const CyclicSubgroupTable& GroupAnalysis::table() {
  if (!table_) table_ = std::make_unique<CyclicSubgroupTable>(group_);
  return *table_;
}

const SymmetryData& GroupAnalysis::symmetry() {
  if (!symmetry_) symmetry_ = std::make_unique<SymmetryData>(table());
  return *symmetry_;
}

const CollapsedGraph& GroupAnalysis::graph(GraphKind kind) {
  auto it = graphs_.find(kind);
  if (it == graphs_.end()) it = graphs_.emplace(kind, build_collapsed_graph(kind, symmetry())).first;
  return it->second;
}

const DiameterResult& GroupAnalysis::diameter(GraphKind kind) {
  auto it = diameters_.find(kind);
  if (it == diameters_.end())
    it = diameters_.emplace(kind, normgraph::diameter(graph(kind), table(), symmetry().orbits())).first;
  return it->second;
}

const FrobeniusStructure& GroupAnalysis::frobenius() {
  if (!frobenius_) frobenius_ = detect_frobenius(group_);
  return *frobenius_;
}

// ---------------------------------------------------------------------------

VerificationReport verify_hierarchy(GroupAnalysis& a) {
  VerificationReport r{"hierarchy", a.id(), {}};
  const auto& t = a.table();
  const std::pair<GraphKind, GraphKind> chains[] = {{GraphKind::commuting, GraphKind::normalising},
                                                    {GraphKind::normalising, GraphKind::permuting},
                                                    {GraphKind::permuting, GraphKind::soluble},
                                                    {GraphKind::normalising, GraphKind::engel}};
  for (const auto& [small, large] : chains) {
    const CollapsedGraph& gs = a.graph(small);
    const CollapsedGraph& gl = a.graph(large);
    json witness;
    for (std::uint32_t u = 0; u < gs.vertex_count && witness.is_null(); ++u)
      for (std::uint32_t v : gs.neighbours(u))
        if (!gl.has_edge(u, v)) {
          witness = json{{"pair", {vertex_json(t, u), vertex_json(t, v)}},
                         {"adjacent_" + to_string(small), adjacent(small, t, u, v)},
                         {"adjacent_" + to_string(large), adjacent(large, t, u, v)}};
          break;
        }
    r.add(to_string(small) + "-in-" + to_string(large), kContainment, witness.is_null(), witness,
          json{{to_string(small) + "_edges", gs.edge_count()}, {to_string(large) + "_edges", gl.edge_count()}});
  }

  // Conjugation permutes edges, so the rows of the orbit representatives
  // cover every edge up to automorphism.
  const CollapsedGraph& psi = a.graph(GraphKind::permuting);
  const auto& reps = a.symmetry().orbits().representatives;
  json witness;
  std::uint64_t checked = 0;
  for (CyclicId u : reps) {
    for (CyclicId v : psi.neighbours(u)) {
      const ElementId gens[] = {t.canonical_generator(u), t.canonical_generator(v)};
      ++checked;
      if (!is_soluble(a.group(), closure(a.group(), gens))) {
        witness = json{{"pair", {vertex_json(t, u), vertex_json(t, v)}}};
        break;
      }
    }
    if (!witness.is_null()) break;
  }
  r.add("permuting-pairs-soluble", kIto, witness.is_null(), witness, json{{"pairs_checked", checked}});
  return r;
}

VerificationReport verify_theorem1(GroupAnalysis& a) {
  VerificationReport r{"theorem1", a.id(), {}};
  const bool soluble = a.soluble();
  if (a.has_tag("soluble")) r.add("tag-soluble", kCorpus, soluble, json{{"soluble", soluble}});
  if (!soluble) {
    r.skip("diameter-or-frobenius", kDisconnection, "group is not soluble");
    return r;
  }
  const auto& t = a.table();
  const DiameterResult& d = a.diameter(GraphKind::normalising);
  const FrobeniusStructure& fs = a.frobenius();
  const bool criterion = fs.is_frobenius && disconnection_criterion(fs);
  const json frob{{"frobenius", fs.is_frobenius},
                  {"kernel_order", fs.is_frobenius ? json(fs.kernel.order()) : json(nullptr)},
                  {"kernel_primes", fs.kernel_primes},
                  {"complement_primes", fs.complement_primes},
                  {"criterion", criterion}};

  if (a.has_tag("frobenius-expected")) r.add("tag-frobenius", kCorpus, fs.is_frobenius, frob, frob);
  if (a.has_tag("disconnected-expected"))
    r.add("tag-disconnected", kCorpus, !d.connected, diameter_json(d), diameter_json(d));

  if (d.connected) {
    json witness{{"source", vertex_json(t, d.witness_source)}, {"target", vertex_json(t, d.witness_target)}};
    r.add("connected-diameter-at-most-6", kDiameterSix, d.diameter <= 6, witness, diameter_json(d));
  } else {
    r.add("disconnected-is-frobenius", kDisconnection, fs.is_frobenius, diameter_json(d), frob);
    r.add("disconnected-satisfies-criterion", kDisconnection, criterion, frob, frob);
    const auto worst = std::max_element(d.component_diameters.begin(), d.component_diameters.end());
    r.add("component-diameters-at-most-2", kComponentDiameter, *worst <= 2,
          json{{"component", worst - d.component_diameters.begin()}, {"diameter", *worst}}, diameter_json(d));
    if (criterion) {
      if (!fs.complement) {
        r.add("components-match-kernel-and-complements", kComponents, false, json{{"reason", "no complement found"}});
      } else {
        auto predicted = predicted_components(a.group(), fs);
        std::vector<std::vector<ElementId>> actual;
        for (const auto& comp : connected_components(a.graph(GraphKind::normalising)))
          actual.push_back(component_elements(t, comp));
        std::sort(actual.begin(), actual.end());
        json witness;
        if (actual != predicted) {
          auto it = std::mismatch(actual.begin(), actual.end(), predicted.begin(), predicted.end());
          witness = json{{"actual_components", actual.size()}, {"predicted_components", predicted.size()}};
          if (it.first != actual.end()) witness["first_actual_mismatch"] = *it.first;
          if (it.second != predicted.end()) witness["first_predicted_mismatch"] = *it.second;
        }
        r.add("components-match-kernel-and-complements", kComponents, actual == predicted, witness,
              json{{"components", actual.size()}, {"expected", 1 + fs.kernel.order()}});
      }
    }
  }
  r.add("criterion-implies-disconnected", kDisconnection, !criterion || !d.connected, diameter_json(d), frob);
  return r;
}

VerificationReport verify_frobenius_bound(GroupAnalysis& a) {
  VerificationReport r{"frobenius-bound", a.id(), {}};
  const FrobeniusStructure& fs = a.frobenius();
  if (!fs.is_frobenius) {
    r.skip("connected-frobenius-diameter-at-most-4", kFrobeniusFour, "not a Frobenius group");
    return r;
  }
  const DiameterResult& d = a.diameter(GraphKind::normalising);
  if (!d.connected) {
    r.skip("connected-frobenius-diameter-at-most-4", kFrobeniusFour, "normalising graph is disconnected");
    return r;
  }
  const auto& t = a.table();
  r.add("connected-frobenius-diameter-at-most-4", kFrobeniusFour, d.diameter <= 4,
        json{{"source", vertex_json(t, d.witness_source)}, {"target", vertex_json(t, d.witness_target)}},
        diameter_json(d));
  return r;
}

VerificationReport verify_norm_distance(GroupAnalysis& a) {
  VerificationReport r{"norm-distance", a.id(), {}};
  if (!a.soluble()) {
    r.skip("distance-to-minimal-normal", kNormDistance, "group is not soluble");
    return r;
  }
  if (a.frobenius().is_frobenius) {
    r.skip("distance-to-minimal-normal", kNormDistance, "Frobenius group");
    return r;
  }
  const auto& t = a.table();
  const CollapsedGraph& gamma = a.graph(GraphKind::normalising);
  const auto minimal = minimal_normal_subgroups(a.group());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    const auto dist = distances_to_subset(gamma, t, minimal[i]);
    std::int32_t worst = 0;
    std::uint32_t worst_vertex = 0;
    for (std::uint32_t v = 0; v < dist.size(); ++v) {
      const std::int32_t d = dist[v] == kUnreachable ? std::numeric_limits<std::int32_t>::max() : dist[v];
      if (d > worst) {
        worst = d;
        worst_vertex = v;
      }
    }
    const bool ok = worst <= 3;
    json values{{"normal_subgroup_order", minimal[i].order()},
                {"max_distance", worst == std::numeric_limits<std::int32_t>::max() ? json("unreachable") : json(worst)}};
    r.add("distance-to-minimal-normal-" + std::to_string(i), kNormDistance, ok,
          json{{"x", element_json(a.group(), t.canonical_generator(worst_vertex))}, {"distance", values["max_distance"]}},
          values);
  }
  return r;
}

VerificationReport verify_corollary(GroupAnalysis& a) {
  VerificationReport r{"corollary", a.id(), {}};
  if (!a.soluble()) {
    r.skip("permuting-connectivity", kPermuting, "group is not soluble");
    return r;
  }
  const DiameterResult& dg = a.diameter(GraphKind::normalising);
  const DiameterResult& dp = a.diameter(GraphKind::permuting);
  const json values{{"normalising", diameter_json(dg)}, {"permuting", diameter_json(dp)}};
  r.add("connectivity-agrees", kPermuting, dg.connected == dp.connected, values, values);
  if (dp.connected) {
    const auto& t = a.table();
    r.add("permuting-diameter-at-most-6", kPermuting, dp.diameter <= 6,
          json{{"source", vertex_json(t, dp.witness_source)}, {"target", vertex_json(t, dp.witness_target)}}, values);
    if (dg.connected) r.add("permuting-diameter-at-most-normalising", kPermuting, dp.diameter <= dg.diameter, values, values);
  }
  return r;
}

VerificationReport verify_frobenius_lemmas(GroupAnalysis& a, const VerifyOptions& options) {
  VerificationReport r{"frobenius-lemmas", a.id(), {}};
  const FiniteGroup& g = a.group();
  const FrobeniusStructure& fs = a.frobenius();

  if (g.order() <= options.frobenius_oracle_bound) {
    const ComplementSearchResult o = frobenius_by_complement_search(g);
    const bool same = o.is_frobenius == fs.is_frobenius && (!o.is_frobenius || *o.kernel == fs.kernel);
    json values{{"detected", fs.is_frobenius},
                {"search", o.is_frobenius},
                {"candidates_examined", o.candidates_examined}};
    if (o.kernel) values["search_kernel_order"] = o.kernel->order();
    if (fs.is_frobenius) values["detected_kernel_order"] = fs.kernel.order();
    r.add("detection-matches-complement-search", "Frobenius kernel equals the Fitting subgroup", same, values, values);
  } else {
    r.skip("detection-matches-complement-search", "Frobenius kernel equals the Fitting subgroup",
           "order above the exhaustive search bound");
  }

  if (!fs.is_frobenius) {
    r.skip("kernel-complement-properties", kFrobeniusLemma, "not a Frobenius group");
    return r;
  }
  const SubgroupSet& k = fs.kernel;
  const std::uint32_t index = g.order() / k.order();
  r.add("kernel-invariants", kFrobeniusLemma,
        !k.is_trivial() && k.order() < g.order() && is_normal(g, k) && std::gcd(k.order(), index) == 1,
        json{{"kernel_order", k.order()}, {"index", index}, {"normal", is_normal(g, k)}});
  if (!fs.complement) {
    r.add("complement-found", kFrobeniusLemma, false, json{{"reason", "bounded complement search failed"}});
    return r;
  }
  const SubgroupSet& c = *fs.complement;
  r.add("complement-is-frobenius-complement", kFrobeniusLemma, is_frobenius_complement(g, c),
        json{{"complement_order", c.order()}});

  // (i) C acts regularly on K#: no nontrivial element of C fixes a nontrivial element of K.
  json fixed;
  for (ElementId x : c.elements()) {
    if (x == kIdentity) continue;
    for (ElementId y : k.elements())
      if (y != kIdentity && g.conjugate(y, x) == y) {
        fixed = json{{"complement_element", element_json(g, x)}, {"kernel_element", element_json(g, y)}};
        break;
      }
    if (!fixed.is_null()) break;
  }
  r.add("complement-acts-fixed-point-freely", kFrobeniusLemma, fixed.is_null(), fixed);

  // (ii)
  r.add("complement-order-divides-kernel-order-minus-1", kFrobeniusLemma, (k.order() - 1) % c.order() == 0,
        json{{"kernel_order", k.order()}, {"complement_order", c.order()}});

  // (iii)
  const bool nilpotent = is_nilpotent(g, k);
  const bool abelian = is_abelian(g, k);
  r.add("kernel-nilpotent", kFrobeniusLemma, nilpotent, json{{"kernel_order", k.order()}});
  if (c.order() % 2 == 0)
    r.add("kernel-abelian-when-complement-even", kFrobeniusLemma, abelian, json{{"kernel_order", k.order()}});

  // (iv)
  for (std::uint32_t p : prime_divisors(c.order())) {
    const auto sylow = sylow_subgroup(g, c, p);
    if (!sylow) {
      r.add("sylow-" + std::to_string(p) + "-cyclic-or-quaternion", kFrobeniusLemma, false,
            json{{"reason", "no Sylow subgroup found"}});
      continue;
    }
    const bool cyclic = is_cyclic(g, *sylow);
    const bool quaternion = p == 2 && !cyclic && sylow->order() >= 8 && involution_count(g, *sylow) == 1;
    r.add("sylow-" + std::to_string(p) + "-cyclic-or-quaternion", kFrobeniusLemma, cyclic || quaternion,
          json{{"sylow_order", sylow->order()}, {"involutions", involution_count(g, *sylow)}},
          json{{"sylow_order", sylow->order()}, {"cyclic", cyclic}, {"generalised_quaternion", quaternion}});
  }

  // (v) A non-cyclic group of order pq is generated by two elements of prime order.
  std::vector<ElementId> prime_order;
  for (ElementId x : c.elements())
    if (x != kIdentity && is_prime(element_order(g, x)))
      prime_order.push_back(x);
  json bad_pq;
  std::uint32_t pq_subgroups = 0;
  for (std::size_t i = 0; i < prime_order.size() && bad_pq.is_null(); ++i)
    for (std::size_t j = i + 1; j < prime_order.size(); ++j) {
      const ElementId gens[] = {prime_order[i], prime_order[j]};
      const auto s = bounded_closure(g, gens, c.order());
      if (!s) continue;
      const auto f = factorise(s->order());
      const bool two_primes = (f.size() == 2) || (f.size() == 1 && f[0].second == 2);
      if (!two_primes) continue;
      ++pq_subgroups;
      if (!is_cyclic(g, *s)) {
        bad_pq = json{{"generators", {element_json(g, gens[0]), element_json(g, gens[1])}}, {"order", s->order()}};
        break;
      }
    }
  r.add("order-pq-subgroups-cyclic", kFrobeniusLemma, bad_pq.is_null(), bad_pq,
        json{{"noncyclic_candidates_checked", pq_subgroups}});

  // (vi)
  if (c.order() % 2 == 1) {
    bool metacyclic = false;
    for (ElementId n : c.elements()) {
      const SubgroupSet ns = cyclic_subgroup(g, n);
      if (!normal_in(g, ns, c)) continue;
      for (ElementId h : c.elements()) {
        const ElementId extra[] = {h};
        if (join(g, ns, extra).order() == c.order()) {
          metacyclic = true;
          break;
        }
      }
      if (metacyclic) break;
    }
    r.add("odd-complement-metacyclic", kFrobeniusLemma, metacyclic, json{{"complement_order", c.order()}});

    json not_normal;
    for (ElementId s : prime_order)
      if (!normal_in(g, cyclic_subgroup(g, s), c)) {
        not_normal = element_json(g, s);
        break;
      }
    r.add("odd-complement-prime-order-subgroups-normal", kOddComplement, not_normal.is_null(),
          json{{"element", not_normal}});
  } else {
    const std::uint32_t inv = involution_count(g, c);
    bool central = false;
    for (ElementId x : c.elements())
      if (element_order(g, x) == 2)
        central = std::all_of(c.elements().begin(), c.elements().end(),
                              [&](ElementId y) { return g.multiply(x, y) == g.multiply(y, x); });
    r.add("even-complement-unique-central-involution", kFrobeniusLemma, inv == 1 && central,
          json{{"involutions", inv}, {"central", central}});
  }
  return r;
}

VerificationReport verify_collapse_equivalence(GroupAnalysis& a, const VerifyOptions& options) {
  VerificationReport r{"collapse-equivalence", a.id(), {}};
  const FiniteGroup& g = a.group();
  if (g.order() > options.element_oracle_bound) {
    r.skip("collapsed-distances-match-element-graph", kCollapse, "order above the element-oracle bound");
    return r;
  }
  const auto& t = a.table();
  const auto& orb = a.symmetry().orbits();
  for (GraphKind kind : kAllGraphKinds) {
    const std::string name = to_string(kind);
    const CollapsedGraph& cg = a.graph(kind);
    const oracle::ElementGraph eg = oracle::build_element_graph(kind, g);

    std::vector<DistanceResult> cd;
    for (std::uint32_t v = 0; v < cg.vertex_count; ++v) cd.push_back(bfs(cg, v));

    json adj_witness, dist_witness;
    for (ElementId x = 1; x < g.order() && dist_witness.is_null(); ++x) {
      const auto ed = oracle::element_distances(eg, x);
      for (ElementId y = 1; y < g.order(); ++y) {
        if (y == x) continue;
        const CyclicId ix = t.id_of(x), iy = t.id_of(y);
        const bool element_adj = std::binary_search(eg.adjacency[x].begin(), eg.adjacency[x].end(), y);
        const bool collapsed_adj = ix == iy || cg.has_edge(ix, iy);
        if (element_adj != collapsed_adj && adj_witness.is_null())
          adj_witness = json{{"x", element_json(g, x)}, {"y", element_json(g, y)},
                             {"element_graph", element_adj}, {"collapsed", collapsed_adj}};
        const std::int32_t expected = ix == iy ? 1 : cd[ix].distance[iy];
        if (ed[y] != expected) {
          dist_witness = json{{"x", element_json(g, x)}, {"y", element_json(g, y)},
                              {"element_distance", ed[y]}, {"collapsed_distance", expected}};
          break;
        }
      }
    }
    r.add(name + "-adjacency-depends-on-cyclic-subgroups", kCollapse, adj_witness.is_null(), adj_witness);
    r.add(name + "-distances-match", kCollapse, dist_witness.is_null(), dist_witness);

    json orbit_witness;
    for (std::uint32_t v = 0; v < cg.vertex_count && orbit_witness.is_null(); ++v) {
      const std::uint32_t rep = orb.representatives[orb.orbit_of[v]];
      if (eccentricity(cg, v).value != eccentricity(cg, rep).value ||
          eccentricity(cg, v).all_reachable != eccentricity(cg, rep).all_reachable)
        orbit_witness = json{{"vertex", vertex_json(t, v)}, {"representative", vertex_json(t, rep)}};
    }
    r.add(name + "-eccentricity-constant-on-orbits", kCollapse, orbit_witness.is_null(), orbit_witness);

    // Element-level components and their diameters against diameter().
    std::vector<std::int32_t> comp(g.order(), -1);
    std::vector<std::uint32_t> element_diams;
    for (ElementId x = 1; x < g.order(); ++x) {
      if (comp[x] != -1) continue;
      const std::int32_t label = static_cast<std::int32_t>(element_diams.size());
      std::uint32_t dmax = 0;
      const auto ed = oracle::element_distances(eg, x);
      std::vector<ElementId> members;
      for (ElementId y = 1; y < g.order(); ++y)
        if (ed[y] != kUnreachable) {
          comp[y] = label;
          members.push_back(y);
        }
      for (ElementId y : members) {
        const auto dy = oracle::element_distances(eg, y);
        for (ElementId z : members) dmax = std::max<std::uint32_t>(dmax, dy[z]);
      }
      element_diams.push_back(dmax);
    }
    const DiameterResult& dr = a.diameter(kind);
    std::vector<std::uint32_t> a1 = element_diams, a2 = dr.component_diameters;
    std::sort(a1.begin(), a1.end());
    std::sort(a2.begin(), a2.end());
    const bool ok = a1 == a2 && (dr.connected == (element_diams.size() == 1)) &&
                    (!dr.connected || dr.diameter == element_diams.front());
    r.add(name + "-diameter-matches", kCollapse, ok,
          json{{"element_component_diameters", a1}, {"collapsed_component_diameters", a2}},
          diameter_json(dr));
  }
  return r;
}

VerificationReport run_suite(Suite suite, GroupAnalysis& a, const VerifyOptions& options) {
  switch (suite) {
    case Suite::hierarchy: return verify_hierarchy(a);
    case Suite::theorem1: return verify_theorem1(a);
    case Suite::frobenius_bound: return verify_frobenius_bound(a);
    case Suite::norm_distance: return verify_norm_distance(a);
    case Suite::corollary: return verify_corollary(a);
    case Suite::frobenius_lemmas: return verify_frobenius_lemmas(a, options);
    case Suite::collapse_equivalence: return verify_collapse_equivalence(a, options);
  }
  throw std::logic_error("unhandled suite");
}

// ---------------------------------------------------------------------------

Corpus parse_corpus(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw SpecError("", 0, std::string("corpus syntax error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("groups") || !doc["groups"].is_array())
    throw SpecError("groups", 0, "expected a list of groups");
  Corpus corpus;
  for (std::size_t i = 0; i < doc["groups"].size(); ++i) {
    const json& e = doc["groups"][i];
    const std::string path = "groups[" + std::to_string(i) + "]";
    if (!e.is_object() || !e.contains("id") || !e["id"].is_string())
      throw SpecError(path + ".id", 0, "missing group id");
    if (!e.contains("spec")) throw SpecError(path + ".spec", 0, "missing field");
    CorpusEntry entry;
    entry.id = e["id"].get<std::string>();
    if (e.contains("tags")) {
      if (!e["tags"].is_array()) throw SpecError(path + ".tags", 0, "expected a list");
      for (const auto& tag : e["tags"]) entry.tags.push_back(tag.get<std::string>());
    }
    entry.spec_json = e["spec"];
    // A spec that does not parse is kept; run_corpus reports it per group.
    try {
      entry.spec = spec_from_json(e["spec"], path + ".spec");
    } catch (const SpecError&) {
    }
    corpus.entries.push_back(std::move(entry));
  }
  return corpus;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("", 0, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str());
}

namespace {

json semidirect_spec(std::uint32_t p, const std::vector<json>& matrices) {
  return json{{"kind", "matrix-semidirect"},
              {"p", p},
              {"dim", matrices.front().size()},
              {"matrices", matrices}};
}

}  // namespace

Corpus default_corpus() {
  json groups = json::array();
  auto add = [&](std::string id, json spec, std::vector<std::string> tags) {
    tags.insert(tags.begin(), "soluble");
    groups.push_back(json{{"id", std::move(id)}, {"tags", tags}, {"spec", std::move(spec)}});
  };
  for (int n = 2; n <= 50; ++n) add("C" + std::to_string(n), json{{"kind", "cyclic"}, {"n", n}}, {});
  for (int n = 2; n <= 25; ++n) {
    std::vector<std::string> tags;
    if (n % 2 == 1) tags.push_back("frobenius-expected");  // C_n inverted by a reflection
    add("D" + std::to_string(2 * n), json{{"kind", "dihedral"}, {"n", n}}, tags);
  }
  const json a4{{"kind", "permutation"}, {"degree", 4}, {"generators", {{{1, 2, 3}}, {{1, 2}, {3, 4}}}}};
  const json c2{{"kind", "cyclic"}, {"n", 2}};
  const json c3{{"kind", "cyclic"}, {"n", 3}};
  const json s3{{"kind", "symmetric"}, {"n", 3}};
  add("A4", a4, {"frobenius-expected", "disconnected-expected"});
  add("S3", s3, {"frobenius-expected"});
  add("S4", json{{"kind", "symmetric"}, {"n", 4}}, {});
  add("S3xC2", json{{"kind", "direct-product"}, {"factors", {s3, c2}}}, {});
  add("S3xC3", json{{"kind", "direct-product"}, {"factors", {s3, c3}}}, {});
  add("S3xS3", json{{"kind", "direct-product"}, {"factors", {s3, s3}}}, {});
  add("A4xC2", json{{"kind", "direct-product"}, {"factors", {a4, c2}}}, {});
  add("C2xC6", json{{"kind", "direct-product"}, {"factors", {c2, json{{"kind", "cyclic"}, {"n", 6}}}}}, {});
  add("Q8", json{{"kind", "permutation"}, {"degree", 8},
                 {"generators", {{{1, 2, 3, 4}, {5, 6, 7, 8}}, {{1, 5, 3, 7}, {2, 8, 4, 6}}}}}, {});
  add("C7:C3", semidirect_spec(7, {json{{2}}}), {"frobenius-expected"});
  add("C5:C4", semidirect_spec(5, {json{{2}}}), {"frobenius-expected"});
  add("C11:C5", semidirect_spec(11, {json{{3}}}), {"frobenius-expected"});
  add("C2^2:C3", semidirect_spec(2, {json{{0, 1}, {1, 1}}}), {"frobenius-expected", "disconnected-expected"});
  add("C5^2:C3", semidirect_spec(5, {json{{0, 1}, {4, 4}}}), {"frobenius-expected", "disconnected-expected"});
  add("C3^2:Q8", semidirect_spec(3, {json{{0, 2}, {1, 0}}, json{{1, 1}, {1, 2}}}), {"frobenius-expected"});
  add("C3^2:C2", semidirect_spec(3, {json{{1, 0}, {0, 2}}}), {});
  add("C2^3:C7", semidirect_spec(2, {json{{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}}),
      {"frobenius-expected", "disconnected-expected"});
  add("C2^4:C5", semidirect_spec(2, {json{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}}}),
      {"frobenius-expected", "disconnected-expected"});
  add("C2^4:C15", semidirect_spec(2, {json{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0}}}),
      {"frobenius-expected", "disconnected-expected"});
  add("C7^4:C5", semidirect_spec(7, {json{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {6, 6, 6, 6}}}),
      {"frobenius-expected", "disconnected-expected"});
  return parse_corpus(json{{"groups", groups}}.dump());
}

json corpus_to_json(const Corpus& corpus) {
  json groups = json::array();
  for (const auto& e : corpus.entries) groups.push_back(json{{"id", e.id}, {"tags", e.tags}, {"spec", e.spec_json}});
  return json{{"groups", groups}};
}

std::vector<VerificationReport> run_corpus(const Corpus& corpus, const std::vector<Suite>& suites,
                                           const VerifyOptions& options) {
  std::vector<Suite> ordered;
  for (Suite s : kAllSuites)
    if (std::find(suites.begin(), suites.end(), s) != suites.end()) ordered.push_back(s);

  std::vector<std::vector<VerificationReport>> per_group(corpus.entries.size());
  auto work = [&](std::size_t i) {
    const CorpusEntry& e = corpus.entries[i];
    auto fail = [&](const std::string& msg) {
      VerificationReport r{"build", e.id, {}};
      r.add("group-builds", "group construction", false, json{{"error", msg}});
      per_group[i].push_back(std::move(r));
    };
    try {
      const GroupSpec spec = spec_from_json(e.spec_json, "groups[" + std::to_string(i) + "].spec");
      FiniteGroup g = build(spec);
      if (g.order() < 2) {
        fail("trivial group has no graph");
        return;
      }
      if (g.order() > options.corpus_bound) {
        fail("order " + std::to_string(g.order()) + " exceeds the corpus bound");
        return;
      }
      GroupAnalysis a(e.id, std::move(g), e.tags);
      for (Suite s : ordered) per_group[i].push_back(run_suite(s, a, options));
    } catch (const std::exception& ex) {
      per_group[i].clear();
      fail(ex.what());
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, corpus.entries.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.entries.size(); i = next++) work(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<VerificationReport> out;
  for (auto& v : per_group)
    for (auto& r : v) out.push_back(std::move(r));
  return out;
}

}  // namespace normgraph
