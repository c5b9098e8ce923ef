#include "mobius/incidence_metric.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace mobius {

namespace {

void check_vertex(const MobiusPlane& plane, Vertex v) {
  int limit = v.kind == VertexKind::Point ? plane.point_count()
                                          : plane.circle_count();
  if (v.id < 0 || v.id >= limit)
    throw std::out_of_range("vertex " + vertex_to_string(v) +
                            " does not belong to the plane");
}

}  // namespace

std::string vertex_to_string(const Vertex& v) {
  return (v.kind == VertexKind::Point ? "P" : "z") + std::to_string(v.id);
}

int distance(const MobiusPlane& plane, Vertex u, Vertex v) {
  check_vertex(plane, u);
  check_vertex(plane, v);
  if (u.kind == v.kind) {
    if (u.id == v.id) return 0;
    if (u.kind == VertexKind::Point) return 2;
    return plane.intersection_size(u.id, v.id) > 0 ? 2 : 4;
  }
  const Vertex& pt = u.kind == VertexKind::Point ? u : v;
  const Vertex& cr = u.kind == VertexKind::Point ? v : u;
  return plane.on_circle(pt.id, cr.id) ? 1 : 3;
}

std::vector<int> bfs_distances_from(const MobiusPlane& plane, Vertex source) {
  check_vertex(plane, source);
  const int np = plane.point_count();
  const int total = vertex_universe_size(plane);
  std::vector<int> dist(total, -1);
  std::queue<int> frontier;
  int s = unified_index(plane, source);
  dist[s] = 0;
  frontier.push(s);
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop();
    auto visit = [&](int nxt) {
      if (dist[nxt] == -1) {
        dist[nxt] = dist[cur] + 1;
        frontier.push(nxt);
      }
    };
    if (cur < np) {
      for (int z : plane.circles_through(cur)) visit(np + z);
    } else {
      for (int p : plane.circle(cur - np).members) visit(p);
    }
  }
  return dist;
}

int bfs_distance(const MobiusPlane& plane, Vertex u, Vertex v) {
  check_vertex(plane, v);
  return bfs_distances_from(plane, u)[unified_index(plane, v)];
}

std::vector<Vertex> all_points(const MobiusPlane& plane) {
  std::vector<Vertex> out;
  out.reserve(plane.point_count());
  for (int i = 0; i < plane.point_count(); ++i) out.push_back(point_vertex(i));
  return out;
}

std::vector<Vertex> all_circles(const MobiusPlane& plane) {
  std::vector<Vertex> out;
  out.reserve(plane.circle_count());
  for (int i = 0; i < plane.circle_count(); ++i) out.push_back(circle_vertex(i));
  return out;
}

std::vector<Vertex> all_vertices(const MobiusPlane& plane) {
  auto out = all_points(plane);
  auto zs = all_circles(plane);
  out.insert(out.end(), zs.begin(), zs.end());
  return out;
}

namespace {

// Distance signatures restricted to S, grouped to find the lexicographically
// first unresolved same-class pair. Returns the pair, or nullopt.
std::optional<std::pair<Vertex, Vertex>> first_unresolved_points(
    const MobiusPlane& plane, const std::vector<int>& s_points,
    const std::vector<int>& s_circles, const std::vector<int>& w_points) {
  // A point in S is distinguished from every other point by itself; a pair of
  // points outside S is resolved iff some S-circle contains exactly one.
  std::map<std::vector<bool>, std::pair<int, int>> groups;  // sig -> two smallest
  for (int p : w_points) {
    if (std::binary_search(s_points.begin(), s_points.end(), p)) continue;
    std::vector<bool> sig;
    sig.reserve(s_circles.size());
    for (int z : s_circles) sig.push_back(plane.on_circle(p, z));
    auto [it, fresh] = groups.try_emplace(std::move(sig), std::make_pair(p, -1));
    if (!fresh && it->second.second == -1) it->second.second = p;
  }
  std::optional<std::pair<Vertex, Vertex>> best;
  for (const auto& [sig, pr] : groups)
    if (pr.second != -1)
      if (!best || pr.first < best->first.id)
        best = std::make_pair(point_vertex(pr.first), point_vertex(pr.second));
  return best;
}

std::optional<std::pair<Vertex, Vertex>> first_unresolved_circles(
    const MobiusPlane& plane, const std::vector<int>& s_points,
    const std::vector<int>& s_circles, const std::vector<int>& w_circles) {
  std::map<std::vector<int>, std::pair<int, int>> groups;
  for (int a : w_circles) {
    if (std::binary_search(s_circles.begin(), s_circles.end(), a)) continue;
    std::vector<int> sig;
    sig.reserve(s_points.size() + s_circles.size());
    for (int p : s_points) sig.push_back(plane.on_circle(p, a) ? 1 : 3);
    for (int z : s_circles)
      sig.push_back(z == a ? 0 : (plane.intersection_size(z, a) > 0 ? 2 : 4));
    auto [it, fresh] = groups.try_emplace(std::move(sig), std::make_pair(a, -1));
    if (!fresh && it->second.second == -1) it->second.second = a;
  }
  std::optional<std::pair<Vertex, Vertex>> best;
  for (const auto& [sig, pr] : groups)
    if (pr.second != -1)
      if (!best || pr.first < best->first.id)
        best = std::make_pair(circle_vertex(pr.first), circle_vertex(pr.second));
  return best;
}

struct SplitSets {
  std::vector<int> s_points, s_circles;
};

SplitSets split_by_kind(const MobiusPlane& plane, std::span<const Vertex> s) {
  SplitSets out;
  for (const Vertex& v : s) {
    check_vertex(plane, v);
    (v.kind == VertexKind::Point ? out.s_points : out.s_circles).push_back(v.id);
  }
  auto dedupe = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(out.s_points);
  dedupe(out.s_circles);
  return out;
}

}  // namespace

Verdict is_resolving(const MobiusPlane& plane, std::span<const Vertex> s,
                     std::span<const Vertex> w) {
  auto sk = split_by_kind(plane, s);
  auto wk = split_by_kind(plane, w);

  if (sk.s_points.empty() && sk.s_circles.empty()) {
    // nothing resolves anything; first two W vertices violate
    std::vector<Vertex> ws;
    for (int p : wk.s_points) ws.push_back(point_vertex(p));
    for (int z : wk.s_circles) ws.push_back(circle_vertex(z));
    if (ws.size() >= 2) return {false, std::make_pair(ws[0], ws[1])};
    return {true, std::nullopt};
  }

  if (auto bad = first_unresolved_points(plane, sk.s_points, sk.s_circles,
                                         wk.s_points))
    return {false, bad};
  if (auto bad = first_unresolved_circles(plane, sk.s_points, sk.s_circles,
                                          wk.s_circles))
    return {false, bad};
  return {true, std::nullopt};
}

Verdict is_resolving(const MobiusPlane& plane, std::span<const Vertex> s) {
  auto w = all_vertices(plane);
  return is_resolving(plane, s, w);
}

Verdict is_split_resolving(const MobiusPlane& plane, std::span<const Vertex> s) {
  auto sk = split_by_kind(plane, s);
  // Point pairs order before circle pairs, so test them first: the points
  // must be resolved by S∩circles, the circles by S∩points.
  if (auto bad = first_unresolved_points(plane, /*s_points=*/{}, sk.s_circles,
                                         [&] {
                                           std::vector<int> all(plane.point_count());
                                           for (int i = 0; i < plane.point_count(); ++i)
                                             all[i] = i;
                                           return all;
                                         }()))
    return {false, bad};
  std::vector<int> all_z(plane.circle_count());
  for (int i = 0; i < plane.circle_count(); ++i) all_z[i] = i;
  if (auto bad = first_unresolved_circles(plane, sk.s_points, /*s_circles=*/{},
                                          all_z))
    return {false, bad};
  return {true, std::nullopt};
}

int CoverInstance::max_degree() const {
  int best = 0;
  for (int d : vertex_degrees()) best = std::max(best, d);
  return best;
}

std::vector<int> CoverInstance::vertex_degrees() const {
  std::vector<int> deg(universe.size(), 0);
  for (const auto& e : edges)
    e.members.for_each([&](int pos) { ++deg[pos]; });
  return deg;
}

bool CoverInstance::hits_all(std::span<const int> universe_positions) const {
  Bitset chosen(universe_size());
  for (int pos : universe_positions) {
    if (pos < 0 || pos >= universe_size())
      throw std::out_of_range("universe position out of range");
    chosen.set(pos);
  }
  for (const auto& e : edges)
    if (!e.members.intersects(chosen)) return false;
  return true;
}

std::vector<int> CoverInstance::positions_of(std::span<const Vertex> vs) const {
  std::vector<int> out;
  out.reserve(vs.size());
  for (const Vertex& v : vs) {
    auto it = std::find(universe.begin(), universe.end(), v);
    if (it == universe.end())
      throw std::invalid_argument("vertex " + vertex_to_string(v) +
                                  " not in instance universe");
    out.push_back(static_cast<int>(it - universe.begin()));
  }
  return out;
}

namespace {

// bit a of meets[b] (and b of meets[a]): circles share at least one point
std::vector<Bitset> circle_meet_masks(const MobiusPlane& plane) {
  const int nz = plane.circle_count();
  std::vector<Bitset> meets(nz, Bitset(nz));
  for (int a = 0; a < nz; ++a)
    for (int b = a + 1; b < nz; ++b)
      if (plane.intersection_size(a, b) > 0) {
        meets[a].set(b);
        meets[b].set(a);
      }
  return meets;
}

void append_point_pair_edges(const MobiusPlane& plane, CoverInstance& inst,
                             bool include_point_members) {
  const int np = plane.point_count();
  const int nz = plane.circle_count();
  const int width = inst.universe_size();
  const int circle_offset = include_point_members ? np : 0;
  for (int p = 0; p < np - 1; ++p)
    for (int q = p + 1; q < np; ++q) {
      Hyperedge e;
      e.label_a = point_vertex(p);
      e.label_b = point_vertex(q);
      e.members = Bitset(width);
      for (int z = 0; z < nz; ++z)
        if (plane.through_mask(p).test(z) != plane.through_mask(q).test(z))
          e.members.set(circle_offset + z);
      if (include_point_members) {
        e.members.set(p);
        e.members.set(q);
      }
      e.size = e.members.count();
      inst.edges.push_back(std::move(e));
    }
}

void append_circle_pair_edges(const MobiusPlane& plane, CoverInstance& inst,
                              bool include_circle_members) {
  const int np = plane.point_count();
  const int nz = plane.circle_count();
  const int width = inst.universe_size();
  const int circle_offset = include_circle_members ? np : -1;
  auto meets = circle_meet_masks(plane);
  for (int a = 0; a < nz - 1; ++a)
    for (int b = a + 1; b < nz; ++b) {
      Hyperedge e;
      e.label_a = circle_vertex(a);
      e.label_b = circle_vertex(b);
      e.members = Bitset(width);
      // points on exactly one of the two circles
      for (int p : plane.circle(a).members)
        if (!plane.on_circle(p, b)) e.members.set(p);
      for (int p : plane.circle(b).members)
        if (!plane.on_circle(p, a)) e.members.set(p);
      if (include_circle_members) {
        // circles meeting exactly one of a, b; a and b themselves qualify
        // via the 0-vs-nonzero distance.
        for (int wi = 0; wi < meets[a].word_count(); ++wi) {
          std::uint64_t w = meets[a].words()[wi] ^ meets[b].words()[wi];
          while (w) {
            int c = (wi << 6) + std::countr_zero(w);
            w &= w - 1;
            if (c != a && c != b) e.members.set(circle_offset + c);
          }
        }
        e.members.set(circle_offset + a);
        e.members.set(circle_offset + b);
      }
      e.size = e.members.count();
      inst.edges.push_back(std::move(e));
    }
}

// Counting argument over the chosen circles' point incidences: at most one
// point can stay uncovered, points covered exactly once pin distinct circles,
// the rest absorb two incidences each. With n = q^2+1 points and q+1 points
// per circle this forces r*(q+2) >= 2*q^2 for any set resolving the points,
// and the same floor holds for full resolving sets.
int once_covered_counting_bound(int q) {
  long long num = 2LL * q * q;
  return static_cast<int>((num + q + 1) / (q + 2));
}

// Quadratic analogue on the point side: unblocked circles (at most one),
// once-blocked (pin a point) and twice-blocked (pin a point pair) circles
// bound the incidence count, giving
//   x^2 + x*(2q^2+2q+3) + 6*(1 - q^3 - q) >= 0
// for any point set x resolving the circles.
int twice_blocked_counting_bound(int q) {
  for (int x = 0;; ++x) {
    long long lhs = static_cast<long long>(x) * x +
                    static_cast<long long>(x) * (2LL * q * q + 2 * q + 3) +
                    6LL * (1 - static_cast<long long>(q) * q * q - q);
    if (lhs >= 0) return x;
  }
}

}  // namespace

CoverInstance build_resolve_all_instance(const MobiusPlane& plane) {
  CoverInstance inst;
  inst.tag = "resolve-all";
  inst.q = plane.order();
  inst.universe = all_vertices(plane);
  append_point_pair_edges(plane, inst, /*include_point_members=*/true);
  append_circle_pair_edges(plane, inst, /*include_circle_members=*/true);
  inst.derived_lower = once_covered_counting_bound(plane.order());
  return inst;
}

CoverInstance build_circle_pair_instance(const MobiusPlane& plane) {
  CoverInstance inst;
  inst.tag = "resolve-circles";
  inst.q = plane.order();
  inst.universe = all_vertices(plane);
  append_circle_pair_edges(plane, inst, /*include_circle_members=*/true);
  return inst;
}

std::pair<CoverInstance, CoverInstance> build_split_instances(
    const MobiusPlane& plane) {
  CoverInstance circles_resolve_points;
  circles_resolve_points.tag = "circles-resolve-points";
  circles_resolve_points.q = plane.order();
  circles_resolve_points.universe = all_circles(plane);
  append_point_pair_edges(plane, circles_resolve_points,
                          /*include_point_members=*/false);
  circles_resolve_points.derived_lower = once_covered_counting_bound(plane.order());

  CoverInstance points_resolve_circles;
  points_resolve_circles.tag = "points-resolve-circles";
  points_resolve_circles.q = plane.order();
  points_resolve_circles.universe = all_points(plane);
  append_circle_pair_edges(plane, points_resolve_circles,
                           /*include_circle_members=*/false);
  if (plane.order() >= 3)
    points_resolve_circles.derived_lower = twice_blocked_counting_bound(plane.order());

  return {std::move(circles_resolve_points), std::move(points_resolve_circles)};
}

CoverInstance build_blocking_instance(const MobiusPlane& plane) {
  CoverInstance inst;
  inst.tag = "blocking";
  inst.q = plane.order();
  inst.universe = all_points(plane);
  for (int z = 0; z < plane.circle_count(); ++z) {
    Hyperedge e;
    e.label_a = circle_vertex(z);
    e.label_b = circle_vertex(z);
    e.pair_label = false;
    e.members = plane.circle(z).mask;
    e.size = e.members.count();
    inst.edges.push_back(std::move(e));
  }
  return inst;
}

}  // namespace mobius
