// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Budgets are wall-clock on this machine; correctness checks are exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "normgraph/diameter_six.hpp"
#include "normgraph/frobenius.hpp"
#include "normgraph/graph.hpp"
#include "normgraph/representations.hpp"
#include "normgraph/verifier.hpp"

using namespace normgraph;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void report(int number, const std::string& title, const Outcome& o, double seconds) {
  if (!o.ok) ++failures;
  std::printf("%s  AC%d  %-52s %7.1fs  %s\n", o.ok ? "PASS" : "FAIL", number, title.c_str(), seconds, o.detail.c_str());
  std::fflush(stdout);
}

unsigned thread_count() { return std::max(1u, std::thread::hardware_concurrency()); }

// Claims whose id starts with one of `prefixes`, across the given reports.
struct Tally {
  std::size_t passed = 0, failed = 0, skipped = 0;
  std::set<std::string> groups;
  std::string first_failure;
};

Tally tally(const std::vector<VerificationReport>& reports, const std::vector<std::string>& prefixes) {
  Tally t;
  for (const auto& r : reports)
    for (const auto& c : r.claims) {
      const bool wanted = r.suite == "build" || std::any_of(prefixes.begin(), prefixes.end(), [&](const std::string& p) {
                            return c.id.rfind(p, 0) == 0;
                          });
      if (!wanted) continue;
      if (c.status == ClaimStatus::skipped) {
        ++t.skipped;
        continue;
      }
      t.groups.insert(r.group);
      if (c.status == ClaimStatus::pass) {
        ++t.passed;
      } else {
        ++t.failed;
        if (t.first_failure.empty()) t.first_failure = r.group + ": " + c.id + " " + c.witness.dump();
      }
    }
  return t;
}

Outcome from_tally(const Tally& t, const std::string& what) {
  Outcome o;
  o.ok = t.failed == 0 && t.passed > 0;
  o.detail = std::to_string(t.passed) + " " + what + " claims on " + std::to_string(t.groups.size()) + " groups";
  if (t.failed) o.detail += ", " + std::to_string(t.failed) + " failed (" + t.first_failure + ")";
  return o;
}

std::vector<VerificationReport> run(Suite s, const VerifyOptions& opts) {
  return run_corpus(default_corpus(), {s}, opts);
}

const DiameterResult* find_diameter(GroupAnalysis& a, GraphKind k) { return &a.diameter(k); }

}  // namespace

int main() {
  VerifyOptions opts;
  opts.threads = thread_count();
  std::printf("acceptance run, %u thread(s)\n", opts.threads);

  // 1. The 562,500-element group with diameters exactly 6.
  {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      const FiniteGroup g = build_diameter_six_group();
      DiameterSixResult r;
      run_local_phase(g, r);
      const double local = since(t0);
      DiameterSixOptions dopts;
      dopts.threads = opts.threads;
      run_diameter_phase(g, r, dopts);
      const auto& gamma = r.graphs.at(GraphKind::normalising);
      const auto& psi = r.graphs.at(GraphKind::permuting);
      o.ok = r.passed() && local <= 10.0 && gamma.connected && psi.connected && gamma.diameter == 6 &&
             psi.diameter == 6;
      char buf[256];
      std::snprintf(buf, sizeof buf,
                    "o(t1)=%u o(t2)=%u o(x)=%u |H|=%u, H-H^w edges %llu, <x>-N edges %llu, local %.2fs, "
                    "diam(Gamma)=%u diam(Psi)=%u",
                    r.order_t1, r.order_t2, r.order_x, r.h_order, static_cast<unsigned long long>(r.h_to_hw_edges),
                    static_cast<unsigned long long>(r.x_to_n_edges), local, gamma.diameter, psi.diameter);
      o.detail = buf;
      if (local > 10.0) o.detail += " [local phase over 10 s]";
      for (const auto& f : r.failures) o.detail += " [" + f + "]";
    } catch (const std::exception& e) {
      o = {false, e.what()};
    }
    report(1, "diameter-six group: local claims, diam 6 and 6", o, since(t0));
  }

  // 2. Disconnected normalising graph <=> Frobenius with the prime criterion.
  {
    const auto t0 = Clock::now();
    const auto reports = run(Suite::theorem1, opts);
    Outcome o = from_tally(tally(reports, {"disconnected-", "component-", "components-", "criterion-", "tag-"}),
                           "disconnection");
    GroupAnalysis a4("A4", make_permutation_group(4, {from_cycles(4, {{1, 2, 3}}), from_cycles(4, {{1, 2}, {3, 4}})}));
    const DiameterResult& d = *find_diameter(a4, GraphKind::normalising);
    const std::uint32_t worst = *std::max_element(d.component_diameters.begin(), d.component_diameters.end());
    o.detail += "; A4: " + std::to_string(d.component_count) + " components, max diameter " + std::to_string(worst);
    o.ok = o.ok && !d.connected && d.component_count == 5 && worst == 1;
    const double s = since(t0);
    if (s > 60) {
      o.ok = false;
      o.detail += " [over 1 min]";
    }
    report(2, "disconnected <=> Frobenius with p not dividing r-1", o, s);
  }

  // 3. diam <= 6 for both graphs, and connectivity agreement.
  {
    const auto t0 = Clock::now();
    auto reports = run(Suite::theorem1, opts);
    auto more = run(Suite::corollary, opts);
    reports.insert(reports.end(), more.begin(), more.end());
    Outcome o = from_tally(tally(reports, {"connected-diameter-at-most-6", "connectivity-agrees",
                                           "permuting-diameter-at-most-6"}),
                           "diameter/connectivity");
    const double s = since(t0);
    if (s > 300) {
      o.ok = false;
      o.detail += " [over 5 min]";
    }
    report(3, "connected: diam(Gamma), diam(Psi) <= 6; same connectivity", o, s);
  }

  // 4. Connected Frobenius groups have diameter at most 4.
  {
    const auto t0 = Clock::now();
    Outcome o = from_tally(tally(run(Suite::frobenius_bound, opts), {"connected-frobenius-"}), "Frobenius bound");
    // brute-force reference values for three small Frobenius groups
    struct Ref {
      const char* name;
      FiniteGroup g;
      std::uint32_t diameter;
    };
    const Ref refs[] = {{"S3", make_symmetric(3), 2},
                        {"C7:C3", semidirect_product(7, 1, {Matrix::from_rows(7, {{2}})}), 2},
                        {"C5:C4", semidirect_product(5, 1, {Matrix::from_rows(5, {{2}})}), 2}};
    for (const Ref& ref : refs) {
      GroupAnalysis a(ref.name, ref.g);
      const DiameterResult& d = a.diameter(GraphKind::normalising);
      o.detail += std::string("; ") + ref.name + " " + std::to_string(d.diameter);
      o.ok = o.ok && d.connected && d.diameter == ref.diameter;
    }
    report(4, "connected Frobenius: diam(Gamma) <= 4", o, since(t0));
  }

  // 5. Distance to minimal normal subgroups.
  {
    const auto t0 = Clock::now();
    report(5, "non-Frobenius soluble: d(x, N) <= 3",
           from_tally(tally(run(Suite::norm_distance, opts), {"distance-to-minimal-normal"}), "distance"), since(t0));
  }

  // 6. Edge containments and solubility of permuting pairs.
  {
    const auto t0 = Clock::now();
    report(6, "K <= Gamma <= Psi <= Sigma, Gamma <= E; Psi pairs soluble",
           from_tally(tally(run(Suite::hierarchy, opts), {""}), "hierarchy"), since(t0));
  }

  // 7. Collapse and orbit soundness up to order 100.
  {
    const auto t0 = Clock::now();
    VerifyOptions o7 = opts;
    o7.element_oracle_bound = 100;
    const auto reports = run(Suite::collapse_equivalence, o7);
    Outcome o = from_tally(tally(reports, {""}), "collapse");
    // every group of order <= 100 must actually have been checked
    std::size_t small = 0, checked = 0;
    for (const auto& e : default_corpus().entries) small += build(e.spec).order() <= 100;
    for (const auto& r : reports) {
      bool any_pass = false;
      for (const auto& c : r.claims) any_pass |= c.status == ClaimStatus::pass;
      checked += any_pass;
    }
    o.ok = o.ok && checked >= small;
    o.detail += ", " + std::to_string(small) + " groups of order <= 100 covered";
    report(7, "collapsed distances = element distances (|G| <= 100)", o, since(t0));
  }

  // 8. Kernel-first detection vs complement search, and the lemma suite.
  {
    const auto t0 = Clock::now();
    VerifyOptions o8 = opts;
    o8.frobenius_oracle_bound = 500;
    report(8, "Frobenius detection oracle equivalence + lemmas",
           from_tally(tally(run(Suite::frobenius_lemmas, o8), {""}), "Frobenius"), since(t0));
  }

  // 9. C7^4 : C5.
  {
    const auto t0 = Clock::now();
    Outcome o;
    const FiniteGroup g = semidirect_product(
        7, 4, {Matrix::from_rows(7, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}})});
    const FrobeniusStructure fs = detect_frobenius(g);
    const bool criterion = fs.is_frobenius && disconnection_criterion(fs);
    const CyclicSubgroupTable table(g);
    const SymmetryData sym(table);
    BuildOptions bo;
    bo.threads = opts.threads;
    const CollapsedGraph graph = build_collapsed_graph(GraphKind::normalising, sym, bo);
    const DiameterResult d = diameter(graph, table, sym.orbits());
    const std::uint32_t worst = d.component_diameters.empty()
                                    ? 0
                                    : *std::max_element(d.component_diameters.begin(), d.component_diameters.end());
    const double s = since(t0);
    o.ok = g.order() == 12005 && fs.is_frobenius && criterion && !d.connected &&
           d.component_count == 1 + fs.kernel.order() && worst <= 2 && s <= 120;
    o.detail = "order " + std::to_string(g.order()) + ", Frobenius " + (fs.is_frobenius ? "yes" : "no") +
               ", |K|=" + std::to_string(fs.kernel.order()) + ", criterion " + (criterion ? "yes" : "no") + ", " +
               std::to_string(d.component_count) + " components, max diameter " + std::to_string(worst);
    if (s > 120) o.detail += " [over 2 min]";
    report(9, "C7^4:C5 Frobenius, Gamma disconnected", o, s);
  }

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
