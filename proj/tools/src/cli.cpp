#include "pairvis/cli.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pairvis/errors.hpp"
#include "pairvis/io.hpp"
#include "pairvis/oracle.hpp"

namespace pairvis {

namespace {

struct Options {
  bool json = false;
  std::string in, out, idx, svg, objective, s_text, t_text;
  double lambda = 0.5, alpha = 0.0, beta = 0.0;
  bool trace = false;
  int samples = 100000;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutsidePolygon: return kExitInfeasiblePoint;
    case ErrorCode::InternalError:
    case ErrorCode::EmptyInterval: return kExitFailure;
    default: return kExitInvalidInput;
  }
}

void report_error(std::ostream& err, bool as_json, const std::string& code, const std::string& msg) {
  if (as_json)
    err << nlohmann::json{{"error", {{"code", code}, {"message", msg}}}}.dump() << "\n";
  else
    err << "error: " << msg << "\n";
}

Point parse_point_arg(const std::string& text, const char* what) {
  std::istringstream ss(text);
  Point p;
  char comma = 0;
  if (!(ss >> p.x >> comma >> p.y) || comma != ',' || !(ss >> std::ws).eof() || !std::isfinite(p.x) ||
      !std::isfinite(p.y))
    throw Error(ErrorCode::InvalidInput, std::string(what) + " must look like X,Y");
  return p;
}

struct Loaded {
  InstanceFile file;
  SimplePolygon polygon;
};

Loaded load_instance(const std::string& path) {
  InstanceFile f = parse_instance(read_text_file(path));
  SimplePolygon poly = SimplePolygon::validate_and_normalize(f.polygon);
  return {std::move(f), std::move(poly)};
}

std::pair<Point, Point> endpoints(const InstanceFile& f) {
  if (!f.s || !f.t) throw Error(ErrorCode::InvalidInput, "instance needs both \"s\" and \"t\"");
  return {*f.s, *f.t};
}

Objective choose_objective(const Options& o, const CLI::App& cmd, const InstanceFile& f) {
  const bool named = cmd.count("--objective") > 0;
  if (!named && f.objective) return *f.objective;
  Objective obj;
  obj.kind = objective_kind_from_string(named ? o.objective : "minmax");
  obj.lambda = o.lambda;
  obj.alpha = o.alpha;
  obj.beta = o.beta;
  // Offsets turn plain min-max into its offset variant.
  if (obj.kind == Objective::Kind::MinMax && (cmd.count("--alpha") || cmd.count("--beta")))
    obj.kind = Objective::Kind::OffsetMinMax;
  if (obj.kind == Objective::Kind::WeightedMinMax && !(obj.lambda > 0.0 && obj.lambda < 1.0))
    throw Error(ErrorCode::InvalidInput, "--lambda must lie strictly between 0 and 1");
  if (!std::isfinite(obj.alpha) || !std::isfinite(obj.beta))
    throw Error(ErrorCode::InvalidInput, "--alpha and --beta must be finite");
  return obj;
}

int cmd_solve(const Options& o, const CLI::App& cmd, std::ostream& out) {
  const Loaded in = load_instance(o.in);
  const auto [s, t] = endpoints(in.file);
  const Objective obj = choose_objective(o, cmd, in.file);
  const Triangulation tri(in.polygon);
  const SolveTrace trace = solve_with_trace(tri, s, t, obj);
  if (!o.json) out << "value " << format_number(trace.result.value) << "\n";
  out << result_json(trace.result, obj) << "\n";
  if (o.trace)
    for (const SweepEvent& e : trace.events.events) out << event_json(e) << "\n";
  if (!o.svg.empty()) {
    SvgOptions so;
    so.trace = o.trace;
    write_text_file(o.svg, render_svg(tri, s, t, trace, so));
  }
  return kExitOk;
}

int cmd_events(const Options& o, std::ostream& out) {
  const Loaded in = load_instance(o.in);
  const auto [s, t] = endpoints(in.file);
  const Triangulation tri(in.polygon);
  const SweepGeometry g(tri, s, t);
  if (g.visible()) return kExitOk;
  for (const SweepEvent& e : compute_events(g).events) out << event_json(e) << "\n";
  return kExitOk;
}

int cmd_query_build(const Options& o, std::ostream& out) {
  const Loaded in = load_instance(o.in);
  const QueryStructure q(in.polygon);
  write_text_file(o.out, serialize_query_structure(q));
  if (!o.json) out << "wrote " << o.out << " (" << q.polygon().size() << " vertices)\n";
  else out << "{\"vertices\":" << q.polygon().size() << ",\"triangles\":" << q.triangulation().size() << "}\n";
  return kExitOk;
}

int cmd_query_run(const Options& o, std::ostream& out) {
  const Point s = parse_point_arg(o.s_text, "--s"), t = parse_point_arg(o.t_text, "--t");
  const QueryStructure q = parse_query_structure(read_text_file(o.idx));
  const QueryAnswer a = q.query_minmax(s, t);
  if (!o.json) out << "value " << format_number(a.value) << "\n";
  out << answer_json(a) << "\n";
  return kExitOk;
}

int cmd_oracle(const Options& o, const CLI::App& cmd, std::ostream& out) {
  const Loaded in = load_instance(o.in);
  const auto [s, t] = endpoints(in.file);
  const Objective obj = choose_objective(o, cmd, in.file);
  if (o.samples < 1) throw Error(ErrorCode::InvalidInput, "--samples must be positive");
  OracleConfig cfg;
  cfg.angular_samples = o.samples;
  const OracleResult r = oracle_solve(in.polygon, s, t, obj, cfg);
  if (!o.json) out << "value " << format_number(r.value) << "\n";
  out << "{\"objective\":\"" << to_string(obj.kind) << "\",\"value\":" << format_number(r.value)
      << ",\"error_bound\":" << format_number(r.error_bound)
      << ",\"visible\":" << (r.visible ? "true" : "false") << ",\"ds\":" << format_number(r.ds)
      << ",\"dt\":" << format_number(r.dt) << ",\"s_star\":[" << format_number(r.s_star.x) << ","
      << format_number(r.s_star.y) << "],\"t_star\":[" << format_number(r.t_star.x) << ","
      << format_number(r.t_star.y) << "]}\n";
  return kExitOk;
}

void add_objective_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--objective", o.objective, "minmax, minsum, wminmax or offset")
      ->check(CLI::IsMember({"minmax", "minsum", "wminmax", "offset"}));
  cmd->add_option("--lambda", o.lambda, "weight of the s side for wminmax");
  cmd->add_option("--alpha", o.alpha, "head start of s for offset min-max");
  cmd->add_option("--beta", o.beta, "head start of t for offset min-max");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Quickest pair-visibility in simple polygons", "pairvis"};
  app.add_flag("--json", o.json, "machine-readable output and errors");
  app.require_subcommand(1);

  CLI::App* solve = app.add_subcommand("solve", "optimal witness pair for an instance");
  solve->fallthrough();
  solve->add_option("--in", o.in, "instance JSON")->required();
  add_objective_options(solve, o);
  solve->add_option("--svg", o.svg, "write an SVG diagram");
  solve->add_flag("--trace", o.trace, "also list events and draw their chords");

  CLI::App* events = app.add_subcommand("events", "sweep events as JSON lines");
  events->fallthrough();
  events->add_option("--in", o.in, "instance JSON")->required();

  CLI::App* query = app.add_subcommand("query", "preprocessed min-max queries");
  query->require_subcommand(1);
  CLI::App* build = query->add_subcommand("build", "triangulate and store a polygon");
  build->fallthrough();
  build->add_option("--in", o.in, "polygon JSON")->required();
  build->add_option("--out", o.out, "query structure file")->required();
  CLI::App* run = query->add_subcommand("run", "answer one query");
  run->fallthrough();
  run->add_option("--idx", o.idx, "query structure file")->required();
  run->add_option("--s", o.s_text, "X,Y")->required();
  run->add_option("--t", o.t_text, "X,Y")->required();
  query->fallthrough();

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference solution");
  oracle->fallthrough();
  oracle->add_option("--in", o.in, "instance JSON")->required();
  oracle->add_option("--samples", o.samples, "angular samples per pivot");
  add_objective_options(oracle, o);

  std::vector<const char*> argv{"pairvis"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, o.json, "invalid_input", e.what());
    return kExitInvalidInput;
  }

  try {
    if (solve->parsed()) return cmd_solve(o, *solve, out);
    if (events->parsed()) return cmd_events(o, out);
    if (build->parsed()) return cmd_query_build(o, out);
    if (run->parsed()) return cmd_query_run(o, out);
    if (oracle->parsed()) return cmd_oracle(o, *oracle, out);
  } catch (const Error& e) {
    report_error(err, o.json, to_string(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    report_error(err, o.json, "internal_error", e.what());
    return kExitFailure;
  }
  return kExitInvalidInput;
}

}  // namespace pairvis
