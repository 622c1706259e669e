#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ivd/diagram.hpp"
#include "ivd/engine.hpp"

namespace ivd {

/// Reads one point per line ("x y", '#' starts a comment). Ids follow input
/// order starting at 0. Throws InputError naming the line on malformed or
/// out-of-bound input, or when no point is present.
std::vector<Site> parse_points(std::istream& in, Coord bound);
std::vector<Site> read_points_file(const std::string& path, Coord bound);

struct GenSpec {
  std::string dist;  // uniform-disc | uniform-square | clustered
  int count = 0;
  std::uint64_t seed = 0;
};

/// Parses "dist:count:seed". Throws InputError.
GenSpec parse_gen_spec(const std::string& text);
/// Distinct integer sites within [-bound, bound]^2, fully determined by spec.
std::vector<Site> generate_sites(const GenSpec& spec, Coord bound);

inline constexpr const char* kStatsHeader = "n,links,cuts,cells_changed,dcr_rebuilds,time_ns";
void write_stats_row(std::ostream& out, const InsertionStats& s);

inline constexpr const char* kExportHeader = "ivd-diagram 1";
void export_text(const Diagram& d, std::ostream& out, bool include_sentinels);
void export_svg(const Diagram& d, std::ostream& out, bool include_sentinels, Coord bound);

/// Face cycles recovered from a text export; sites[0..2] are the sentinels.
struct ImportedDiagram {
  std::vector<Site> sites;
  std::vector<std::vector<VertexId>> cycles;
  VertexId infinite = kNoVertex;
};

/// Parses a text export. Throws InputError on malformed content.
ImportedDiagram import_text(std::istream& in);

}  // namespace ivd
