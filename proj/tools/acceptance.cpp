#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include "ivd/engine.hpp"
#include "ivd/errors.hpp"
#include "ivd/io.hpp"
#include "ivd/oracle.hpp"
#include "ivd/verify.hpp"

using namespace ivd;

namespace {

enum class Verdict { kPass, kFail, kWarn };

struct Outcome {
  Verdict verdict;
  std::string detail;
};

std::vector<Site> uniform(std::uint64_t seed, int n) {
  return generate_sites(GenSpec{"uniform-square", n, seed}, kCoordBound);
}

std::string fmt(double x, int digits = 3) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

Outcome oracle_equivalence(int seeds, int n) {
  std::int64_t compared = 0;
  for (int seed = 1; seed <= seeds; ++seed) {
    VoronoiEngine e;
    Triangulation t;
    auto sites = uniform(static_cast<std::uint64_t>(seed), n);
    for (std::size_t i = 0; i < sites.size(); ++i) {
      e.insert_site(sites[i]);
      t.insert(sites[i]);
      std::string why = check_against(e.diagram(), t);
      if (!why.empty()) {
        return {Verdict::kFail, "seed " + std::to_string(seed) + " insertion " + std::to_string(i) + ": " + why};
      }
      ++compared;
    }
  }
  return {Verdict::kPass, std::to_string(seeds) + " seeds x " + std::to_string(n) + ", " + std::to_string(compared) +
                              " graphs equal to the Delaunay dual"};
}

Outcome structural_counting(int seeds, int n) {
  std::int64_t checked = 0;
  for (int seed = 1; seed <= seeds; ++seed) {
    for (const char* dist : {"uniform-square", "clustered"}) {
      VoronoiEngine e;
      auto sites = generate_sites(GenSpec{dist, n, static_cast<std::uint64_t>(seed)}, kCoordBound);
      std::int64_t pv = e.diagram().finite_vertex_count(), pe = e.diagram().finite_edge_count();
      for (std::size_t i = 0; i < sites.size(); ++i) {
        e.insert_site(sites[i]);
        std::int64_t v = e.diagram().finite_vertex_count(), ed = e.diagram().finite_edge_count();
        std::string why = check_counts(e.diagram());
        if (why.empty() && (v - pv != 2 || ed - pe != 3)) {
          why = "insertion added " + std::to_string(v - pv) + " vertices and " + std::to_string(ed - pe) + " edges";
        }
        if (!why.empty()) {
          return {Verdict::kFail, std::string(dist) + " seed " + std::to_string(seed) + " insertion " +
                                      std::to_string(i) + ": " + why};
        }
        pv = v;
        pe = ed;
        ++checked;
      }
    }
  }
  return {Verdict::kPass, std::to_string(checked) + " insertions, V=2N-5 and E=3N-9 with +2/+3 per step"};
}

Outcome empty_circles(int seeds, int n) {
  std::int64_t checked = 0;
  for (int seed = 1; seed <= seeds; ++seed) {
    VoronoiEngine e(1 << 12);
    auto sites = generate_sites(GenSpec{"uniform-disc", n, static_cast<std::uint64_t>(seed)}, 1 << 12);
    for (std::size_t i = 0; i < sites.size(); ++i) {
      e.insert_site(sites[i]);
      std::string why = check_empty_circles(e.diagram());
      if (!why.empty()) {
        return {Verdict::kFail, "seed " + std::to_string(seed) + " insertion " + std::to_string(i) + ": " + why};
      }
      ++checked;
    }
  }
  return {Verdict::kPass, std::to_string(checked) + " diagrams with N<=" + std::to_string(n) +
                              ", every vertex circle empty"};
}

// Mean cumulative cells_changed must stay under C*sqrt(N) for every prefix.
constexpr double kCellsChangedC = 4.0;

Outcome change_accounting(int seeds, int n) {
  std::int64_t insertions = 0, below = 0, worst_gap = 0;
  std::string first_below;
  double worst_c = 0, ops_mean_uniform = 0;
  std::ostringstream families;
  for (const char* dist : {"uniform-square", "uniform-disc", "clustered"}) {
    double family_c = 0, end_c = 0;
    std::int64_t family_ops = 0, family_n = 0;
    for (int seed = 1; seed <= seeds; ++seed) {
      VoronoiEngine e;
      Triangulation t;
      CanonicalGraph prev = e.diagram().canonical();
      std::int64_t changed = 0;
      auto sites = generate_sites(GenSpec{dist, n, static_cast<std::uint64_t>(seed)}, kCoordBound);
      for (std::size_t i = 0; i < sites.size(); ++i) {
        InsertionStats st = e.insert_site(sites[i]);
        CanonicalGraph next = e.diagram().canonical();
        std::int64_t pairs = static_cast<std::int64_t>(graph_diff(prev, next).pair_changes());
        std::int64_t ops = st.links + st.cuts;
        if (ops < pairs) {
          ++below;
          worst_gap = std::max(worst_gap, pairs - ops);
          if (first_below.empty()) {
            first_below = std::string(dist) + " seed " + std::to_string(seed) + " insertion " + std::to_string(i) +
                          " (" + std::to_string(ops) + " ops, " + std::to_string(pairs) + " pair changes)";
          }
        }
        changed += st.cells_changed;
        family_ops += ops;
        ++family_n;
        double k = static_cast<double>(i + 1);
        double c_here = static_cast<double>(changed) / k / std::sqrt(k);
        family_c = std::max(family_c, c_here);
        if (i + 1 == sites.size()) end_c = std::max(end_c, c_here);
        prev = std::move(next);
        ++insertions;
      }
    }
    worst_c = std::max(worst_c, family_c);
    double mean_ops = static_cast<double>(family_ops) / static_cast<double>(family_n);
    if (std::string(dist) == "uniform-square") ops_mean_uniform = mean_ops;
    families << ' ' << dist << ":C=" << fmt(family_c) << ",C@" << n << "=" << fmt(end_c) << ",ops=" << fmt(mean_ops, 2);
  }
  bool sqrt_ok = worst_c <= kCellsChangedC;
  bool ops_ok = ops_mean_uniform <= 20.0;
  std::string detail = "links+cuts >= pair changes: " +
                       (below == 0 ? std::string("ok")
                                   : std::to_string(below) + "/" + std::to_string(insertions) +
                                         " insertions below (max gap " + std::to_string(worst_gap) + ", first " +
                                         first_below + ")") +
                       "; cells_changed mean <= " + fmt(kCellsChangedC, 1) + "*sqrt(N): " +
                       (sqrt_ok ? "ok" : "exceeded") + "; uniform ops/insertion <= 20: " +
                       (ops_ok ? "ok" : "exceeded") + ";" + families.str();
  return {below == 0 && sqrt_ok && ops_ok ? Verdict::kPass : Verdict::kFail, detail};
}

Outcome index_consistency(int seeds, int n) {
  std::int64_t checked = 0;
  for (int seed = 1; seed <= seeds; ++seed) {
    for (const char* dist : {"uniform-square", "clustered"}) {
      VoronoiEngine e;
      auto sites = generate_sites(GenSpec{dist, n, static_cast<std::uint64_t>(seed)}, kCoordBound);
      for (std::size_t i = 0; i < sites.size(); ++i) {
        e.insert_site(sites[i]);
        std::string why = e.check_invariants();
        if (!why.empty()) {
          return {Verdict::kFail, std::string(dist) + " seed " + std::to_string(seed) + " insertion " +
                                      std::to_string(i) + ": " + why.substr(0, why.find('\n'))};
        }
        ++checked;
      }
    }
  }
  return {Verdict::kPass, std::to_string(checked) + " insertions, big-cell graph, DCR blocks and flags match rescans"};
}

Outcome scaling_signal() {
  auto sites = uniform(1, 8000);
  std::ostringstream detail;
  double prev = 0;
  bool sublinear = true;
  for (int n = 1000; n <= 8000; n *= 2) {
    double best = 0;
    for (int rep = 0; rep < 3; ++rep) {
      VoronoiEngine e;
      auto t0 = std::chrono::steady_clock::now();
      for (int i = 0; i < n; ++i) e.insert_site(sites[static_cast<std::size_t>(i)]);
      double ns = std::chrono::duration<double, std::nano>(std::chrono::steady_clock::now() - t0).count() / n;
      best = rep == 0 ? ns : std::min(best, ns);
    }
    detail << (n == 1000 ? "" : ", ") << n << ": " << fmt(best / 1000.0, 1) << "us";
    if (prev > 0) {
      double r = best / prev;
      detail << " (x" << fmt(r, 2) << ")";
      if (r >= 2.0) sublinear = false;
    }
    prev = best;
  }
  return {sublinear ? Verdict::kPass : Verdict::kWarn, "time per insertion " + detail.str()};
}

std::string snapshot(const VoronoiEngine& e) {
  std::ostringstream s;
  export_text(e.diagram(), s, true);
  const auto& log = e.diagram().change_log();
  s << "log " << log.links << ' ' << log.cuts << " threshold " << e.index().threshold() << " nn " << e.nn().size()
    << " sites " << e.sites().size() << " big";
  for (CellId c : e.index().big_cells()) s << ' ' << c;
  s << "\nstructure " << e.check_invariants();
  return s.str();
}

Outcome degeneracy_handling() {
  struct Case {
    std::string name;
    std::vector<Site> setup;
    Site probe;
  };
  std::vector<Case> cases;
  cases.push_back({"rectangle", {{0, 0, 0}, {1, 6, 0}, {2, 0, 8}}, {3, 6, 8}});
  // three points of the radius-25 circle amid far-away random sites, then a fourth
  std::vector<Site> ring;
  auto noise = generate_sites(GenSpec{"uniform-square", 300, 4}, 5000);
  for (const Site& s : noise) {
    if (std::abs(s.x) > 200 || std::abs(s.y) > 200) ring.push_back(Site{static_cast<SiteId>(ring.size()), s.x, s.y});
  }
  for (auto [x, y] : {std::pair{7, 24}, {24, -7}, {-20, 15}}) {
    ring.push_back(Site{static_cast<SiteId>(ring.size()), x, y});
  }
  cases.push_back({"ring", ring, Site{static_cast<SiteId>(ring.size()), -15, -20}});

  std::ostringstream detail;
  for (const Case& c : cases) {
    VoronoiEngine e(5000);
    for (const Site& s : c.setup) e.insert_site(s);
    std::string before = snapshot(e);
    bool rejected = false;
    try {
      e.insert_site(c.probe);
    } catch (const DegeneracyError&) {
      rejected = true;
    }
    if (!rejected) return {Verdict::kFail, c.name + ": cocyclic site accepted"};
    if (snapshot(e) != before) return {Verdict::kFail, c.name + ": state changed by the rejected insertion"};
    // the engine must remain usable after the rollback
    Triangulation t;
    for (const Site& s : c.setup) t.insert(s);
    Site next{c.probe.id, c.probe.x + 1, c.probe.y - 2};
    e.insert_site(next);
    t.insert(next);
    std::string why = check_against(e.diagram(), t);
    if (!why.empty()) return {Verdict::kFail, c.name + ": after rejection " + why};
    detail << (detail.tellp() > 0 ? ", " : "") << c.name;
  }
  return {Verdict::kPass, "rejected with identical state: " + detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria for the incremental Voronoi engine"};
  int only = 0;
  int seeds = 100;
  app.add_option("--criterion", only, "run one criterion (1-7); 0 runs all")->check(CLI::Range(0, 7));
  app.add_option("--seeds", seeds, "seed count for the oracle equivalence run")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle equivalence", [&] { return oracle_equivalence(seeds, 512); }},
      {"structural counting", [] { return structural_counting(10, 512); }},
      {"empty circles", [] { return empty_circles(20, 128); }},
      {"change accounting", [] { return change_accounting(10, 512); }},
      {"index consistency", [] { return index_consistency(5, 512); }},
      {"scaling signal", [] { return scaling_signal(); }},
      {"degeneracy handling", [] { return degeneracy_handling(); }},
  };
  bool ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && only != static_cast<int>(i + 1)) continue;
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {Verdict::kFail, std::string("exception: ") + e.what()};
    }
    const char* tag = r.verdict == Verdict::kPass ? "PASS" : r.verdict == Verdict::kWarn ? "WARN" : "FAIL";
    std::cout << tag << ' ' << (i + 1) << ' ' << criteria[i].first << ": " << r.detail << std::endl;
    if (r.verdict == Verdict::kFail) ok = false;
  }
  return ok ? 0 : 1;
}
