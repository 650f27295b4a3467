#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairvis/objective.hpp"
#include "pairvis/query.hpp"
#include "pairvis/solver.hpp"

namespace pairvis {

// Instance file contents as written, before any validation or reorientation.
struct InstanceFile {
  std::vector<Point> polygon;
  std::optional<Point> s, t;
  std::optional<Objective> objective;

  bool operator==(const InstanceFile&) const = default;
};

// Fixed 12 significant digit rendering used by every report.
std::string format_number(double x);

// Throws Error(InvalidInput) on malformed JSON or missing fields.
InstanceFile parse_instance(std::string_view json);
// Coordinates are written with 17 significant digits so parsing restores them bit for bit.
std::string serialize_instance(const InstanceFile& inst);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

// Throws Error(InvalidInput) for unknown names.
Objective::Kind objective_kind_from_string(std::string_view name);

// Single-line JSON reports.
std::string result_json(const SolveResult& r, const Objective& obj);
std::string answer_json(const QueryAnswer& a);
std::string event_json(const SweepEvent& e);

struct SvgOptions {
  bool trace = false;  // draw the chord of every event as well
  double width = 800.0;
};

std::string render_svg(const Triangulation& tri, Point s, Point t, const SolveTrace& trace,
                       const SvgOptions& opt = {});

inline constexpr int kQueryFormatVersion = 1;

std::string serialize_query_structure(const QueryStructure& q);
// Throws Error(VersionMismatch) for files written by another format version.
QueryStructure parse_query_structure(std::string_view text);

}  // namespace pairvis
