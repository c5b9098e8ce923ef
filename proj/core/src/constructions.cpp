#include "mobius/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mobius {

PencilPointResolver build_pencil_point_resolver(
    const MobiusPlane& plane, int base_point,
    std::optional<std::pair<int, int>> class_pair,
    std::optional<std::pair<int, int>> removed) {
  const int q = plane.order();
  if (q < 3)
    throw std::invalid_argument(
        "pencil point resolver needs order >= 3 (the set must keep more than "
        "two circles)");
  AffineResidue residue = plane.affine_residue(base_point);

  PencilPointResolver out;
  out.base_point = base_point;
  if (class_pair) {
    auto [c1, c2] = *class_pair;
    if (c1 == c2 || c1 < 0 || c2 < 0 ||
        c1 >= static_cast<int>(residue.parallel_classes.size()) ||
        c2 >= static_cast<int>(residue.parallel_classes.size()))
      throw std::invalid_argument("invalid parallel class indices");
    out.class_indices = {c1, c2};
  }

  std::array<std::vector<int>, 2> class_circles;  // circle ids per chosen class
  for (int side = 0; side < 2; ++side) {
    for (int li : residue.parallel_classes[out.class_indices[side]])
      class_circles[side].push_back(residue.lines[li].circle);
    std::sort(class_circles[side].begin(), class_circles[side].end());
  }

  if (removed) {
    out.removed_circles = {removed->first, removed->second};
  } else {
    out.removed_circles = {class_circles[0].front(), class_circles[1].front()};
  }
  for (int side = 0; side < 2; ++side) {
    auto& cc = class_circles[side];
    auto it = std::find(cc.begin(), cc.end(), out.removed_circles[side]);
    if (it == cc.end())
      throw std::invalid_argument("removed circle not in its parallel class");
    cc.erase(it);
    out.circles.insert(out.circles.end(), cc.begin(), cc.end());
  }
  std::sort(out.circles.begin(), out.circles.end());

  if (static_cast<int>(out.circles.size()) != 2 * q - 2)
    throw std::logic_error("pencil resolver: wrong size");
  for (int z : out.circles)
    if (!plane.on_circle(base_point, z))
      throw std::logic_error("pencil resolver: circle misses the base point");

  // mechanism: within each full class every residue point lies on exactly one
  // line, and two residue points always separate in one of the two classes
  std::vector<int> line_of[2];
  for (int side = 0; side < 2; ++side) {
    line_of[side].assign(plane.point_count(), -1);
    for (int li : residue.parallel_classes[out.class_indices[side]])
      for (int x : residue.lines[li].points) line_of[side][x] = li;
  }
  for (std::size_t i = 0; i < residue.residue_points.size(); ++i)
    for (std::size_t j = i + 1; j < residue.residue_points.size(); ++j) {
      int a = residue.residue_points[i], b = residue.residue_points[j];
      if (line_of[0][a] == line_of[0][b] && line_of[1][a] == line_of[1][b])
        throw std::logic_error("pencil resolver: two points in the same line of both classes");
    }

  std::vector<Vertex> as_vertices;
  for (int z : out.circles) as_vertices.push_back(circle_vertex(z));
  auto points = all_points(plane);
  Verdict verdict = is_resolving(plane, as_vertices, points);
  if (!verdict.ok)
    throw std::logic_error("pencil resolver: does not resolve the points");
  return out;
}

std::vector<Vertex> greedy_circle_resolver(const MobiusPlane& plane) {
  CoverInstance inst = build_circle_pair_instance(plane);
  GreedyTrace trace = greedy_cover(inst);
  std::vector<Vertex> out;
  out.reserve(trace.chosen.size());
  for (int pos : trace.chosen) out.push_back(inst.universe[pos]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> combined_resolving_set(const MobiusPlane& plane) {
  PencilPointResolver pencil = build_pencil_point_resolver(plane);
  std::vector<Vertex> s = greedy_circle_resolver(plane);
  for (int z : pencil.circles) s.push_back(circle_vertex(z));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  Verdict verdict = is_resolving(plane, s);
  if (!verdict.ok)
    throw std::logic_error("combined resolving set failed verification");
  return s;
}

std::vector<int> greedy_blocking_set(const MobiusPlane& plane) {
  CoverInstance inst = build_blocking_instance(plane);
  GreedyTrace trace = greedy_cover(inst);
  std::vector<int> points = trace.chosen;  // universe positions == point ids
  std::sort(points.begin(), points.end());
  Bitset chosen(plane.point_count());
  for (int p : points) chosen.set(p);
  for (int z = 0; z < plane.circle_count(); ++z)
    if (!plane.circle(z).mask.intersects(chosen))
      throw std::logic_error("greedy blocking set misses a circle");
  return points;
}

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

void add_plain(BoundTable& t, const std::string& name, double value, int min_q,
               int max_q = 0) {
  bool applicable = t.q >= min_q && (max_q == 0 || t.q <= max_q);
  t.entries.push_back({name, value, applicable, min_q, max_q});
}

// value(log) emitted as _ln and _log2 variants
template <class F>
void add_logged(BoundTable& t, const std::string& name, F&& f, int min_q,
                int max_q = 0) {
  add_plain(t, name + "_ln", f(static_cast<double (*)(double)>(std::log)), min_q, max_q);
  add_plain(t, name + "_log2", f(static_cast<double (*)(double)>(std::log2)), min_q, max_q);
}

}  // namespace

const BoundEntry* BoundTable::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

double BoundTable::value(const std::string& name) const {
  const BoundEntry* e = find(name);
  if (!e) throw std::invalid_argument("unknown bound: " + name);
  return e->value;
}

BoundTable evaluate_bounds(int q) {
  if (q < 2) throw std::invalid_argument("evaluate_bounds: q must be >= 2");
  BoundTable t;
  t.q = q;
  const double qd = q;

  // metric dimension
  add_plain(t, "metric_dim_lower", static_cast<double>(ceil_div(2LL * q * q, q + 2)), 2);
  add_plain(t, "metric_dim_lower_weak", 2.0 * qd - 3.0, 2);
  const double tau_circle_pairs =
      2.0 + (14.0 * q * q - 20.0 * q + 6.0) /
                (static_cast<double>(q) * q * q - 6.0 * q * q + 11.0 * q - 2.0);
  add_logged(
      t, "circle_resolver_upper",
      [&](double (*lg)(double)) {
        return tau_circle_pairs * (1.0 + lg(qd * qd * qd * qd * qd * qd / 4.0));
      },
      4);
  add_logged(
      t, "metric_dim_upper",
      [&](double (*lg)(double)) {
        return 2.0 * qd - 2.0 +
               tau_circle_pairs * (1.0 + lg(qd * qd * qd * qd * qd * qd / 4.0));
      },
      4);
  add_logged(
      t, "metric_dim_upper_large",
      [&](double (*lg)(double)) { return 2.0 * qd + 12.0 * lg(qd); }, 156);

  // split-resolving sides and total
  add_plain(t, "split_circles_lower", q <= 5 ? 2.0 * qd - 2.0 : 2.0 * qd - 3.0, 3);
  add_plain(t, "split_circles_upper", 2.0 * qd - 2.0, 3);
  add_plain(t, "split_points_lower", 3.0 * qd - 7.0, 3);
  add_logged(
      t, "split_points_upper",
      [&](double (*lg)(double)) {
        return (qd + 2.0) / 2.0 * (1.0 + lg(qd * qd * qd * qd * qd));
      },
      3);
  add_plain(t, "split_total_lower", 5.0 * qd - 10.0, 3);
  add_logged(
      t, "split_total_upper",
      [&](double (*lg)(double)) {
        return (qd + 2.0) / 2.0 * (1.0 + lg(qd * qd * qd * qd * qd)) + 2.0 * qd - 2.0;
      },
      3);

  // blocking sets
  add_logged(
      t, "blocking_upper",
      [&](double (*lg)(double)) {
        return (qd * qd + 1.0) / (qd + 1.0) * (1.0 + lg(qd * (qd + 1.0)));
      },
      2);
  add_plain(t, "blocking_lower", 2.0 * qd, 9);

  return t;
}

std::string bound_tables_csv(std::span<const BoundTable> tables) {
  std::ostringstream os;
  os << "q,bound,value,applicable,min_q,max_q\n";
  for (const auto& t : tables)
    for (const auto& e : t.entries)
      os << t.q << ',' << e.name << ',' << e.value << ','
         << (e.applicable ? "yes" : "no") << ',' << e.min_q << ','
         << (e.max_q == 0 ? std::string("-") : std::to_string(e.max_q)) << '\n';
  return os.str();
}

CoverageCounters coverage_counters(const MobiusPlane& plane,
                                   std::span<const Vertex> s, CounterCheck check) {
  Bitset s_points(plane.point_count());
  Bitset s_circles(plane.circle_count());
  for (const Vertex& v : s) {
    if (v.kind == VertexKind::Point)
      s_points.set(v.id);
    else
      s_circles.set(v.id);
  }

  CoverageCounters out;
  for (int p = 0; p < plane.point_count(); ++p) {
    if (s_points.test(p)) continue;
    if (plane.through_mask(p).intersect_count(s_circles) == 1)
      ++out.outer_points_covered_once;
  }
  for (int z = 0; z < plane.circle_count(); ++z) {
    int hits = plane.circle(z).mask.intersect_count(s_points);
    if (hits == 0)
      ++out.circles_unhit;
    else if (hits == 1)
      ++out.circles_hit_once;
    else if (hits == 2)
      ++out.circles_hit_twice;
  }

  if (check != CounterCheck::None) {
    Verdict v = check == CounterCheck::Resolving ? is_resolving(plane, s)
                                                 : is_split_resolving(plane, s);
    if (!v.ok)
      throw std::invalid_argument("coverage_counters: set lacks the requested property");
    const long long np = s_points.count();
    const long long nz = s_circles.count();
    // A point covered by exactly one chosen circle pins that circle: two such
    // points sharing it would be indistinguishable.
    bool ok = out.outer_points_covered_once <= nz;
    if (check == CounterCheck::SplitResolving) {
      // With points alone resolving the circles, unhit / once-hit /
      // twice-hit circles are pinned by nothing / their point / their pair.
      ok = ok && out.circles_unhit <= 1 && out.circles_hit_once <= np &&
           out.circles_hit_twice <= np * (np - 1) / 2;
    }
    if (!ok)
      throw std::logic_error("coverage_counters: counters contradict a verified set");
  }
  return out;
}

}  // namespace mobius
