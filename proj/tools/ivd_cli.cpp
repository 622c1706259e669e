#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "ivd/engine.hpp"
#include "ivd/errors.hpp"
#include "ivd/io.hpp"
#include "ivd/oracle.hpp"
#include "ivd/verify.hpp"

using namespace ivd;

namespace {

enum Exit : int { kOk = 0, kFail = 1, kParse = 2, kDegenerate = 3, kMismatch = 4, kUnwritable = 5 };

struct Failure {
  int code;
  std::string message;
};

struct Options {
  std::string input;
  std::string gen;
  Coord bound = kCoordBound;
  bool check_oracle = false;
  bool check_invariants = false;
  std::string stats;
  std::string export_path;
  std::string format = "text";
  bool include_sentinels = false;
  // bench
  int ladder_start = 1000;
  int reps = 1;
  std::string report;
  // selftest
  std::string diagram;
};

void check_bound(Coord bound) {
  if (bound < 1 || bound > kCoordBound) {
    throw Failure{kParse, "--coord-bound must lie in [1, " + std::to_string(kCoordBound) + "]"};
  }
}

std::vector<Site> load_sites(const Options& o) {
  check_bound(o.bound);
  if (o.input.empty() == o.gen.empty()) throw Failure{kParse, "give exactly one of --input or --gen"};
  try {
    if (!o.input.empty()) return read_points_file(o.input, o.bound);
    return generate_sites(parse_gen_spec(o.gen), o.bound);
  } catch (const InputError& e) {
    throw Failure{kParse, e.what()};
  }
}

std::unique_ptr<std::ofstream> open_output(const std::string& path) {
  auto f = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
  if (!*f) throw Failure{kUnwritable, "cannot write " + path};
  return f;
}

void write_export(const Diagram& d, std::ostream& out, const Options& o) {
  if (o.format == "svg") {
    export_svg(d, out, o.include_sentinels, o.bound);
  } else {
    export_text(d, out, o.include_sentinels);
  }
}

/// Inserts all sites with the requested checks; the stats stream gets one row
/// per insertion.
std::unique_ptr<VoronoiEngine> drive(const std::vector<Site>& sites, const Options& o, std::ostream* stats) {
  auto engine = std::make_unique<VoronoiEngine>(o.bound);
  std::optional<Triangulation> oracle;
  if (o.check_oracle) oracle.emplace();
  if (stats) *stats << kStatsHeader << '\n';
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const Site& s = sites[i];
    const std::string where =
        "insertion " + std::to_string(i) + " (" + std::to_string(s.x) + "," + std::to_string(s.y) + ")";
    InsertionStats st;
    try {
      st = engine->insert_site(s);
    } catch (const DuplicateSiteError& e) {
      throw Failure{kDegenerate, "duplicate point at " + where};
    } catch (const DegeneracyError& e) {
      throw Failure{kDegenerate, "degenerate input at " + where + ": " + e.what()};
    } catch (const InputError& e) {
      throw Failure{kParse, where + ": " + e.what()};
    } catch (const StructureError& e) {
      throw Failure{kMismatch, "verification failed at " + where + ": " + e.what()};
    }
    if (stats) write_stats_row(*stats, st);
    std::string why;
    if (oracle) {
      try {
        oracle->insert(s);
        why = check_against(engine->diagram(), *oracle);
      } catch (const std::exception& e) {
        why = std::string("oracle rejected the site: ") + e.what();
      }
    }
    if (why.empty() && o.check_invariants) {
      why = check_counts(engine->diagram());
      if (why.empty()) why = engine->check_invariants();
    }
    if (!why.empty()) throw Failure{kMismatch, "verification failed at " + where + ": " + why};
  }
  return engine;
}

int cmd_run(const Options& o, bool want_export) {
  if (want_export && o.export_path.empty()) throw Failure{kParse, "export needs --export <path>"};
  if (o.format != "text" && o.format != "svg") throw Failure{kParse, "--format must be text or svg"};
  auto sites = load_sites(o);
  std::unique_ptr<std::ofstream> stats, out;
  if (!o.stats.empty()) stats = open_output(o.stats);
  if (!o.export_path.empty()) out = open_output(o.export_path);
  auto engine = drive(sites, o, stats.get());
  if (out) write_export(engine->diagram(), *out, o);
  if ((stats && !stats->flush()) || (out && !out->flush())) throw Failure{kUnwritable, "write failed"};
  const ChangeLog& log = engine->diagram().change_log();
  std::cout << "inserted " << sites.size() << " sites, links " << log.links << ", cuts " << log.cuts << ", big cells "
            << engine->index().big_cells().size() << ", threshold " << engine->index().threshold() << '\n';
  return kOk;
}

int cmd_bench(const Options& o) {
  check_bound(o.bound);
  GenSpec spec;
  try {
    spec = parse_gen_spec(o.gen.empty() ? "uniform-disc:8000:1" : o.gen);
  } catch (const InputError& e) {
    throw Failure{kParse, e.what()};
  }
  if (o.ladder_start < 1 || o.ladder_start > spec.count || o.reps < 1) {
    throw Failure{kParse, "ladder start must lie in [1, count] and reps must be positive"};
  }
  std::vector<Site> all;
  try {
    all = generate_sites(spec, o.bound);
  } catch (const InputError& e) {
    throw Failure{kParse, e.what()};
  }
  nlohmann::ordered_json report;
  report["dist"] = spec.dist;
  report["seed"] = spec.seed;
  report["coord_bound"] = o.bound;
  report["ladder"] = nlohmann::json::array();
  double prev_ns = 0;
  for (int n = o.ladder_start; n <= spec.count; n *= 2) {
    std::vector<Site> prefix(all.begin(), all.begin() + n);
    double best = 0;
    std::int64_t ops = 0, changed = 0, rebuilds = 0;
    for (int r = 0; r < o.reps; ++r) {
      VoronoiEngine engine(o.bound);
      ops = changed = rebuilds = 0;
      auto t0 = std::chrono::steady_clock::now();
      for (const Site& s : prefix) {
        InsertionStats st;
        try {
          st = engine.insert_site(s);
        } catch (const DegeneracyError& e) {
          throw Failure{kDegenerate, std::string("degenerate input in bench: ") + e.what()};
        }
        ops += st.links + st.cuts;
        changed += st.cells_changed;
        rebuilds += st.dcr_rebuilds;
      }
      double ns = std::chrono::duration<double, std::nano>(std::chrono::steady_clock::now() - t0).count() / n;
      best = r == 0 ? ns : std::min(best, ns);
    }
    nlohmann::ordered_json row;
    row["n"] = n;
    row["ns_per_insertion"] = best;
    row["ops_per_insertion"] = static_cast<double>(ops) / n;
    row["cells_changed_per_insertion"] = static_cast<double>(changed) / n;
    row["dcr_rebuilds_per_insertion"] = static_cast<double>(rebuilds) / n;
    if (prev_ns > 0) {
      double ratio = best / prev_ns;
      row["time_ratio"] = ratio;
      if (ratio >= 2.0) std::cerr << "warning: time per insertion grew by " << ratio << " at n=" << n << '\n';
    }
    prev_ns = best;
    report["ladder"].push_back(row);
    if (n > spec.count / 2) break;
  }
  std::string text = report.dump(2) + "\n";
  if (!o.report.empty()) {
    auto out = open_output(o.report);
    *out << text;
    if (!out->flush()) throw Failure{kUnwritable, "write failed"};
  }
  std::cout << text;
  return kOk;
}

int check_diagram_file(const Options& o) {
  check_bound(o.bound);
  std::ifstream in(o.diagram);
  if (!in) throw Failure{kParse, "cannot read " + o.diagram};
  ImportedDiagram imp;
  VoronoiEngine engine(o.bound);
  try {
    imp = import_text(in);
    engine.restore(imp.sites, imp.cycles, imp.infinite);
  } catch (const InputError& e) {
    throw Failure{kParse, e.what()};
  } catch (const StructureError& e) {
    throw Failure{kMismatch, std::string("diagram rejected: ") + e.what()};
  }
  std::string why = engine.check_invariants();
  if (why.empty()) why = check_counts(engine.diagram());
  if (why.empty()) {
    Triangulation t;
    try {
      for (std::size_t i = 3; i < imp.sites.size(); ++i) t.insert(imp.sites[i]);
      why = check_against(engine.diagram(), t);
    } catch (const std::exception& e) {
      why = std::string("oracle rejected the sites: ") + e.what();
    }
  }
  if (!why.empty()) throw Failure{kMismatch, o.diagram + ": " + why};
  std::cout << o.diagram << ": " << engine.sites().size() << " sites, diagram ok\n";
  return kOk;
}

int cmd_selftest(const Options& o) {
  if (!o.diagram.empty()) return check_diagram_file(o);
  Options t = o;
  t.check_oracle = t.check_invariants = true;
  for (const char* g : {"uniform-disc:256:1", "uniform-square:256:2", "clustered:256:3"}) {
    auto sites = generate_sites(parse_gen_spec(g), 4096);
    t.bound = 4096;
    auto engine = drive(sites, t, nullptr);
    std::string why = check_empty_circles(engine->diagram());
    if (!why.empty()) throw Failure{kMismatch, std::string(g) + ": " + why};
  }
  VoronoiEngine e;
  for (const Site& s : {Site{0, 0, 0}, Site{1, 6, 0}, Site{2, 0, 8}}) e.insert_site(s);
  CanonicalGraph before = e.diagram().canonical();
  std::ostringstream dump_before;
  export_text(e.diagram(), dump_before, true);
  bool rejected = false;
  try {
    e.insert_site(Site{3, 6, 8});
  } catch (const DegeneracyError&) {
    rejected = true;
  }
  std::ostringstream dump_after;
  export_text(e.diagram(), dump_after, true);
  if (!rejected || e.diagram().canonical() != before || dump_before.str() != dump_after.str()) {
    throw Failure{kMismatch, "cocyclic insertion was not rejected cleanly"};
  }
  std::cout << "selftest ok\n";
  return kOk;
}

void add_input_flags(CLI::App* app, Options& o) {
  app->add_option("--input", o.input, "points file, one 'x y' per line");
  app->add_option("--gen", o.gen, "generator spec dist:count:seed (uniform-disc, uniform-square, clustered)");
  app->add_option("--coord-bound", o.bound, "largest absolute coordinate");
  app->add_flag("--check-oracle", o.check_oracle, "compare with the Delaunay oracle after every insertion");
  app->add_flag("--check-invariants", o.check_invariants, "run the structural checks after every insertion");
  app->add_option("--stats", o.stats, "per-insertion CSV output");
  app->add_option("--export", o.export_path, "diagram output path");
  app->add_option("--format", o.format, "export format: text or svg");
  app->add_flag("--include-sentinels", o.include_sentinels, "keep the three sentinel cells in exports");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incremental Voronoi diagram driver"};
  app.require_subcommand(1);
  Options o;
  auto* run = app.add_subcommand("run", "insert a point sequence");
  add_input_flags(run, o);
  auto* exp = app.add_subcommand("export", "insert a point sequence and write the diagram");
  add_input_flags(exp, o);
  auto* bench = app.add_subcommand("bench", "time a doubling ladder of generated instances");
  bench->add_option("--gen", o.gen, "generator spec; count is the top of the ladder");
  bench->add_option("--coord-bound", o.bound, "largest absolute coordinate");
  bench->add_option("--start", o.ladder_start, "smallest ladder size");
  bench->add_option("--reps", o.reps, "repetitions per size (fastest is kept)");
  bench->add_option("--report", o.report, "also write the JSON report here");
  auto* self = app.add_subcommand("selftest", "built-in consistency checks");
  self->add_option("--diagram", o.diagram, "check an exported text diagram instead");
  self->add_option("--coord-bound", o.bound, "largest absolute coordinate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }
  try {
    if (run->parsed()) return cmd_run(o, false);
    if (exp->parsed()) return cmd_run(o, true);
    if (bench->parsed()) return cmd_bench(o);
    return cmd_selftest(o);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}
