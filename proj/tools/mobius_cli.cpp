#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "mobius/constructions.hpp"
#include "mobius/cover_solvers.hpp"
#include "mobius/incidence_metric.hpp"
#include "mobius/mobius_plane.hpp"
#include "mobius/serialization.hpp"

using namespace mobius;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBounded = 2;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw std::runtime_error("cannot open output file " + out_path);
  os << text << '\n';
}

double default_budget_seconds(int q) {
  if (const char* env = std::getenv("MOBIUS_BUDGET_SECONDS")) {
    double v = std::atof(env);
    if (v > 0) return v;
  }
  return q <= 3 ? 60.0 : 3600.0;
}

MobiusPlane build_plane(int q, const std::string& model) {
  if (model == "miquelian") return MobiusPlane::miquelian(q);
  if (model == "order2-subsets") {
    if (q != 2) throw std::invalid_argument("order2-subsets model requires --q 2");
    return MobiusPlane::order2_subsets();
  }
  throw std::invalid_argument("unknown model " + model);
}

std::string read_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

struct SolveOptions {
  int q = 0;
  std::string model = "miquelian";
  double budget_seconds = 0;  // 0: per-order default
  std::uint64_t max_nodes = UINT64_MAX;
  std::string out_path;
};

SolveBudget make_budget(const SolveOptions& opt) {
  double seconds = opt.budget_seconds > 0 ? opt.budget_seconds
                                          : default_budget_seconds(opt.q);
  return SolveBudget{seconds, opt.max_nodes};
}

SideOutcome to_side(const CoverInstance& inst, const SolveOutcome& out) {
  SideOutcome side;
  side.tag = inst.tag;
  side.status = solve_status_name(out.status);
  side.upper = out.upper;
  side.lower = out.lower;
  for (int pos : out.witness) side.witness.push_back(inst.universe[pos]);
  side.nodes = out.nodes;
  side.elapsed_seconds = out.elapsed_seconds;
  return side;
}

int cmd_build(int q, const std::string& model, const std::string& out_path,
              const std::string& format) {
  MobiusPlane plane = build_plane(q, model);
  AxiomReport axioms = plane.verify_axioms();
  CountReport counts = plane.verify_counts();

  if (format == "human") {
    std::ostringstream os;
    os << "order " << plane.order() << " (" << plane.model() << "): "
       << plane.point_count() << " points, " << plane.circle_count()
       << " circles\n";
    for (std::size_t i = 0; i < axioms.axioms.size(); ++i)
      os << "axiom " << i + 1 << ": "
         << (axioms.axioms[i].pass ? "pass" : "FAIL ") << axioms.axioms[i].note
         << "\n";
    for (const auto& item : counts.items)
      os << item.name << ": " << (item.pass ? "pass" : "FAIL " + item.witness)
         << " (expected " << item.expected << ")\n";
    write_output(os.str(), out_path);
  } else {
    write_output(plane_to_json(plane), out_path);
  }

  if (!axioms.all_pass() || !counts.all_pass()) {
    std::cerr << "plane verification FAILED\n";
    return kExitError;
  }
  return kExitOk;
}

int cmd_solve(const std::string& problem, const SolveOptions& opt) {
  MobiusPlane plane = build_plane(opt.q, opt.model);
  SolveBudget budget = make_budget(opt);

  Certificate cert;
  cert.kind = "solve";
  cert.problem = problem;
  cert.q = plane.order();
  cert.model = plane.model();

  if (problem == "split") {
    auto [circles_side, points_side] = build_split_instances(plane);
    SolveOutcome oc = exact_min_hitting_set(circles_side, budget);
    SolveOutcome op = exact_min_hitting_set(points_side, budget);
    cert.sides = {to_side(circles_side, oc), to_side(points_side, op)};
    cert.upper = oc.upper + op.upper;
    cert.lower = oc.lower + op.lower;
    cert.nodes = oc.nodes + op.nodes;
    cert.elapsed_seconds = oc.elapsed_seconds + op.elapsed_seconds;
    bool optimal = oc.status == SolveStatus::Optimal && op.status == SolveStatus::Optimal;
    cert.status = optimal ? "optimal" : "bounded";
    for (const SideOutcome& s : cert.sides)
      cert.witness.insert(cert.witness.end(), s.witness.begin(), s.witness.end());
  } else {
    CoverInstance inst = problem == "resolve" ? build_resolve_all_instance(plane)
                                              : build_blocking_instance(plane);
    SolveOutcome out = exact_min_hitting_set(inst, budget);
    cert.status = solve_status_name(out.status);
    cert.upper = out.upper;
    cert.lower = out.lower;
    for (int pos : out.witness) cert.witness.push_back(inst.universe[pos]);
    cert.nodes = out.nodes;
    cert.elapsed_seconds = out.elapsed_seconds;
  }

  VerifyResult check = verify_certificate(plane, cert);
  if (!check.ok) {
    std::cerr << "solver witness failed independent verification: "
              << check.detail << "\n";
    return kExitError;
  }
  write_output(certificate_to_json(cert), opt.out_path);
  std::cerr << problem << " q=" << opt.q << ": " << cert.status << " ["
            << cert.lower << "," << cert.upper << "] nodes=" << cert.nodes
            << "\n";
  return cert.status == "optimal" ? kExitOk : kExitBounded;
}

int cmd_construct(const std::string& kind, const SolveOptions& opt) {
  MobiusPlane plane = build_plane(opt.q, opt.model);
  BoundTable bounds = evaluate_bounds(plane.order());

  Certificate cert;
  cert.kind = "construct";
  cert.problem = kind;
  cert.q = plane.order();
  cert.model = plane.model();
  cert.status = "constructed";
  cert.lower = 0;

  std::string bound_name;
  if (kind == "s1") {
    auto pencil = build_pencil_point_resolver(plane);
    for (int z : pencil.circles) cert.witness.push_back(circle_vertex(z));
    bound_name = "split_circles_upper";
  } else if (kind == "s1s2") {
    for (const Vertex& v : combined_resolving_set(plane)) cert.witness.push_back(v);
    bound_name = "metric_dim_upper_ln";
  } else if (kind == "blocking-greedy") {
    for (int p : greedy_blocking_set(plane)) cert.witness.push_back(point_vertex(p));
    bound_name = "blocking_upper_ln";
  } else {
    throw std::invalid_argument("unknown construction " + kind);
  }
  cert.upper = static_cast<int>(cert.witness.size());

  VerifyResult check = verify_certificate(plane, cert);
  if (!check.ok) {
    std::cerr << "construction failed verification: " << check.detail << "\n";
    return kExitError;
  }
  write_output(certificate_to_json(cert), opt.out_path);

  const BoundEntry* bound = bounds.find(bound_name);
  std::cerr << kind << " q=" << opt.q << ": size " << cert.upper;
  if (bound && bound->applicable) {
    // the pencil construction realizes its bound exactly; the greedy ones
    // must stay strictly below theirs
    bool within = kind == "s1" ? cert.upper <= bound->value
                               : cert.upper < bound->value;
    std::cerr << " (bound " << bound_name << " = " << bound->value << ": "
              << (within ? "within" : "NOT within") << ")";
  }
  std::cerr << "\n";
  return kExitOk;
}

struct ReportRow {
  int q = 0;
  int points = 0;
  int circles = 0;
  std::string resolve_status;
  int resolve_lower = 0, resolve_upper = 0;
  std::string split_status;
  int split_circles = 0, split_points = 0, split_total = 0;
  int blocking_greedy = 0;
  int pencil_size = 0;  // 0: not applicable
  double md_lower = 0, md_upper_ln = 0, blocking_upper_ln = 0;
};

int cmd_report(const std::string& range, const SolveOptions& opt,
               const std::string& format) {
  int lo = 0, hi = 0;
  if (auto pos = range.find(".."); pos != std::string::npos) {
    lo = std::stoi(range.substr(0, pos));
    hi = std::stoi(range.substr(pos + 2));
  } else {
    lo = hi = std::stoi(range);
  }

  std::vector<ReportRow> rows;
  for (int q = lo; q <= hi; ++q) {
    if (!GaloisField::prime_power(q) || q < 2) continue;
    MobiusPlane plane = MobiusPlane::miquelian(q);
    if (!plane.verify_axioms().all_pass() || !plane.verify_counts().all_pass())
      throw std::runtime_error("plane verification failed at order " +
                               std::to_string(q));
    SolveOptions local = opt;
    local.q = q;
    SolveBudget budget = make_budget(local);

    ReportRow row;
    row.q = q;
    row.points = plane.point_count();
    row.circles = plane.circle_count();

    SolveOutcome resolve =
        exact_min_hitting_set(build_resolve_all_instance(plane), budget);
    row.resolve_status = solve_status_name(resolve.status);
    row.resolve_lower = resolve.lower;
    row.resolve_upper = resolve.upper;

    auto [circles_side, points_side] = build_split_instances(plane);
    SolveOutcome oc = exact_min_hitting_set(circles_side, budget);
    SolveOutcome op = exact_min_hitting_set(points_side, budget);
    row.split_status =
        oc.status == SolveStatus::Optimal && op.status == SolveStatus::Optimal
            ? "optimal"
            : "bounded";
    row.split_circles = oc.upper;
    row.split_points = op.upper;
    row.split_total = oc.upper + op.upper;

    row.blocking_greedy = static_cast<int>(greedy_blocking_set(plane).size());
    if (q >= 3)
      row.pencil_size =
          static_cast<int>(build_pencil_point_resolver(plane).circles.size());

    BoundTable bounds = evaluate_bounds(q);
    row.md_lower = bounds.value("metric_dim_lower");
    row.md_upper_ln = q >= 4 ? bounds.value("metric_dim_upper_ln") : 0;
    row.blocking_upper_ln = bounds.value("blocking_upper_ln");
    rows.push_back(row);
    std::cerr << "order " << q << " done\n";
  }

  std::ostringstream os;
  if (format == "json") {
    os << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const ReportRow& r = rows[i];
      os << (i ? ",\n " : "\n ") << "{\"q\":" << r.q << ",\"points\":" << r.points
         << ",\"circles\":" << r.circles << ",\"resolve\":{\"status\":\""
         << r.resolve_status << "\",\"lower\":" << r.resolve_lower
         << ",\"upper\":" << r.resolve_upper << "},\"split\":{\"status\":\""
         << r.split_status << "\",\"circles\":" << r.split_circles
         << ",\"points\":" << r.split_points << ",\"total\":" << r.split_total
         << "},\"blocking_greedy\":" << r.blocking_greedy
         << ",\"pencil_size\":" << r.pencil_size << ",\"md_lower\":" << r.md_lower
         << ",\"md_upper_ln\":" << r.md_upper_ln
         << ",\"blocking_upper_ln\":" << r.blocking_upper_ln << "}";
    }
    os << (rows.empty() ? "]" : "\n]");
  } else if (format == "human") {
    os << "q | points circles | resolving | split (circ+pts) | greedy-block | pencil\n";
    for (const ReportRow& r : rows) {
      os << r.q << " | " << r.points << ' ' << r.circles << " | ";
      if (r.resolve_status == "optimal")
        os << r.resolve_upper;
      else
        os << '[' << r.resolve_lower << ',' << r.resolve_upper << ']';
      os << " | " << r.split_total << " (" << r.split_circles << '+'
         << r.split_points << ") | " << r.blocking_greedy << " | "
         << r.pencil_size << '\n';
    }
  } else {
    os << "q,points,circles,resolve_status,resolve_lower,resolve_upper,"
          "split_status,split_circles,split_points,split_total,"
          "blocking_greedy,pencil_size,md_lower,md_upper_ln,blocking_upper_ln\n";
    for (const ReportRow& r : rows)
      os << r.q << ',' << r.points << ',' << r.circles << ',' << r.resolve_status
         << ',' << r.resolve_lower << ',' << r.resolve_upper << ','
         << r.split_status << ',' << r.split_circles << ',' << r.split_points
         << ',' << r.split_total << ',' << r.blocking_greedy << ','
         << r.pencil_size << ',' << r.md_lower << ',' << r.md_upper_ln << ','
         << r.blocking_upper_ln << '\n';
  }
  write_output(os.str(), opt.out_path);
  return kExitOk;
}

int cmd_verify(const std::string& plane_path, const std::string& cert_path) {
  MobiusPlane plane = plane_from_json(read_file(plane_path));
  Certificate cert = certificate_from_json(read_file(cert_path));
  VerifyResult res = verify_certificate(plane, cert);
  if (res.ok) {
    std::cout << "certificate verifies: " << cert.problem << " q=" << cert.q
              << " [" << cert.lower << "," << cert.upper << "]\n";
    return kExitOk;
  }
  std::cerr << "certificate verification FAILED: " << res.detail << "\n";
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite inversive (Möbius) planes: construction, incidence "
               "metric, resolving/blocking set optimization"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand(
      "build", "construct a plane, verify axioms and census, emit JSON");
  int build_q = 0;
  std::string build_model = "miquelian";
  std::string build_out, build_format = "json";
  build->add_option("--q", build_q, "plane order (prime power)")->required();
  build->add_option("--model", build_model, "miquelian | order2-subsets");
  build->add_option("--out", build_out, "output path (default stdout)");
  build->add_option("--format", build_format, "json | human")
      ->check(CLI::IsMember({"json", "human"}));

  auto* solve = app.add_subcommand(
      "solve", "exact minimum set via branch-and-bound with greedy warm start");
  std::string solve_problem;
  SolveOptions solve_opt;
  solve->add_option("problem", solve_problem, "resolve | split | blocking")
      ->required()
      ->check(CLI::IsMember({"resolve", "split", "blocking"}));
  solve->add_option("--q", solve_opt.q, "plane order")->required();
  solve->add_option("--model", solve_opt.model, "miquelian | order2-subsets");
  solve->add_option("--budget", solve_opt.budget_seconds,
                    "wall budget in seconds (default: 60 for q<=3, 3600 above; "
                    "env MOBIUS_BUDGET_SECONDS)");
  solve->add_option("--max-nodes", solve_opt.max_nodes, "node budget");
  solve->add_option("--out", solve_opt.out_path, "certificate path (default stdout)");

  auto* construct = app.add_subcommand(
      "construct", "run a named construction and verify it independently");
  std::string construct_kind;
  SolveOptions construct_opt;
  construct->add_option("kind", construct_kind, "s1 | s1s2 | blocking-greedy")
      ->required()
      ->check(CLI::IsMember({"s1", "s1s2", "blocking-greedy"}));
  construct->add_option("--q", construct_opt.q, "plane order")->required();
  construct->add_option("--model", construct_opt.model, "plane model");
  construct->add_option("--out", construct_opt.out_path, "certificate path");

  auto* report = app.add_subcommand(
      "report", "reproduction table over a range of orders");
  std::string report_range, report_format = "csv";
  SolveOptions report_opt;
  report->add_option("--q", report_range, "order or range, e.g. 3 or 2..5")
      ->required();
  report->add_option("--budget", report_opt.budget_seconds, "per-solve budget");
  report->add_option("--max-nodes", report_opt.max_nodes, "node budget");
  report->add_option("--format", report_format, "csv | json | human")
      ->check(CLI::IsMember({"csv", "json", "human"}));
  report->add_option("--out", report_opt.out_path, "output path");

  auto* verify = app.add_subcommand(
      "verify", "re-check a certificate against an exported plane");
  std::string verify_plane, verify_cert;
  verify->add_option("--plane", verify_plane, "plane JSON path")->required();
  verify->add_option("--cert", verify_cert, "certificate JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    if (build->parsed()) return cmd_build(build_q, build_model, build_out, build_format);
    if (solve->parsed()) return cmd_solve(solve_problem, solve_opt);
    if (construct->parsed()) return cmd_construct(construct_kind, construct_opt);
    if (report->parsed()) return cmd_report(report_range, report_opt, report_format);
    if (verify->parsed()) return cmd_verify(verify_plane, verify_cert);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
