#include "mobius/serialization.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace mobius {

using nlohmann::json;

namespace {

json vertex_to_jobj(const Vertex& v) {
  return json{{"kind", v.kind == VertexKind::Point ? "point" : "circle"},
              {"id", v.id}};
}

Vertex vertex_from_jobj(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind != "point" && kind != "circle")
    throw std::invalid_argument("bad vertex kind: " + kind);
  return {kind == "point" ? VertexKind::Point : VertexKind::Circle,
          j.at("id").get<int>()};
}

void check_schema(const json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw std::invalid_argument("unsupported schema_version");
}

}  // namespace

std::string plane_to_json(const MobiusPlane& plane) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["order"] = plane.order();
  j["model"] = plane.model();

  json polys = json::object();
  if (const GaloisField* f = plane.field()) {
    polys["point_field"] = {{"p", f->p()},
                            {"k", f->k()},
                            {"coefficients", f->reduction_polynomial()}};
  }
  j["reduction_polynomials"] = polys;

  json points = json::array();
  for (int p = 0; p < plane.point_count(); ++p)
    points.push_back({{"id", p}, {"label", plane.point_label(p)}});
  j["points"] = std::move(points);

  json circles = json::array();
  for (const Circle& z : plane.circles()) circles.push_back(z.members);
  j["circles"] = std::move(circles);
  return j.dump(2);
}

MobiusPlane plane_from_json(const std::string& text) {
  json j = json::parse(text);
  check_schema(j);
  int q = j.at("order").get<int>();
  std::string model = j.at("model").get<std::string>();
  int n_points = static_cast<int>(j.at("points").size());
  std::vector<std::vector<int>> circles;
  for (const auto& c : j.at("circles"))
    circles.push_back(c.get<std::vector<int>>());
  return MobiusPlane::from_circles(q, n_points, std::move(circles), model);
}

std::string instance_to_json(const CoverInstance& inst) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["tag"] = inst.tag;
  j["q"] = inst.q;
  json universe = json::array();
  for (const Vertex& v : inst.universe) universe.push_back(vertex_to_jobj(v));
  j["universe"] = std::move(universe);
  json edges = json::array();
  for (const Hyperedge& e : inst.edges) {
    json label = json::array();
    label.push_back(vertex_to_jobj(e.label_a));
    if (e.pair_label) label.push_back(vertex_to_jobj(e.label_b));
    edges.push_back({{"label", std::move(label)}, {"members", e.members.to_vector()}});
  }
  j["edges"] = std::move(edges);
  return j.dump();
}

namespace {

json side_to_jobj(const SideOutcome& s) {
  json w = json::array();
  for (const Vertex& v : s.witness) w.push_back(vertex_to_jobj(v));
  return json{{"tag", s.tag},       {"status", s.status},
              {"upper", s.upper},   {"lower", s.lower},
              {"witness", std::move(w)}, {"nodes", s.nodes},
              {"elapsed_seconds", s.elapsed_seconds}};
}

SideOutcome side_from_jobj(const json& j) {
  SideOutcome s;
  s.tag = j.at("tag").get<std::string>();
  s.status = j.at("status").get<std::string>();
  s.upper = j.at("upper").get<int>();
  s.lower = j.at("lower").get<int>();
  for (const auto& v : j.at("witness")) s.witness.push_back(vertex_from_jobj(v));
  s.nodes = j.at("nodes").get<std::uint64_t>();
  s.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  return s;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
  json j;
  j["schema_version"] = cert.schema_version;
  j["kind"] = cert.kind;
  j["problem"] = cert.problem;
  j["q"] = cert.q;
  j["model"] = cert.model;
  j["status"] = cert.status;
  j["upper"] = cert.upper;
  j["lower"] = cert.lower;
  json w = json::array();
  for (const Vertex& v : cert.witness) w.push_back(vertex_to_jobj(v));
  j["witness"] = std::move(w);
  json sides = json::array();
  for (const SideOutcome& s : cert.sides) sides.push_back(side_to_jobj(s));
  j["sides"] = std::move(sides);
  j["nodes"] = cert.nodes;
  j["elapsed_seconds"] = cert.elapsed_seconds;
  j["solver"] = cert.solver;
  return j.dump(2);
}

Certificate certificate_from_json(const std::string& text) {
  json j = json::parse(text);
  check_schema(j);
  Certificate c;
  c.kind = j.at("kind").get<std::string>();
  c.problem = j.at("problem").get<std::string>();
  c.q = j.at("q").get<int>();
  c.model = j.at("model").get<std::string>();
  c.status = j.at("status").get<std::string>();
  c.upper = j.at("upper").get<int>();
  c.lower = j.at("lower").get<int>();
  for (const auto& v : j.at("witness")) c.witness.push_back(vertex_from_jobj(v));
  for (const auto& s : j.at("sides")) c.sides.push_back(side_from_jobj(s));
  c.nodes = j.at("nodes").get<std::uint64_t>();
  c.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  c.solver = j.at("solver").get<std::string>();
  return c;
}

namespace {

VerifyResult fail(const std::string& detail) { return {false, detail}; }

bool witness_in_range(const MobiusPlane& plane, const std::vector<Vertex>& w,
                      std::string& err) {
  for (const Vertex& v : w) {
    int limit = v.kind == VertexKind::Point ? plane.point_count()
                                            : plane.circle_count();
    if (v.id < 0 || v.id >= limit) {
      err = "witness vertex " + vertex_to_string(v) + " out of range";
      return false;
    }
  }
  return true;
}

bool blocks_all_circles(const MobiusPlane& plane, const std::vector<Vertex>& w,
                        std::string& err) {
  Bitset pts(plane.point_count());
  for (const Vertex& v : w) {
    if (v.kind != VertexKind::Point) {
      err = "blocking witness contains a circle vertex";
      return false;
    }
    pts.set(v.id);
  }
  for (int z = 0; z < plane.circle_count(); ++z)
    if (!plane.circle(z).mask.intersects(pts)) {
      err = "circle " + std::to_string(z) + " not met by the witness";
      return false;
    }
  return true;
}

}  // namespace

VerifyResult verify_certificate(const MobiusPlane& plane, const Certificate& cert) {
  if (cert.q != plane.order()) return fail("certificate order does not match plane");
  std::string err;
  if (!witness_in_range(plane, cert.witness, err)) return fail(err);
  for (const SideOutcome& s : cert.sides)
    if (!witness_in_range(plane, s.witness, err)) return fail(err);
  if (cert.lower > cert.upper) return fail("lower bound exceeds upper bound");
  if (cert.status == "optimal" && cert.lower != cert.upper)
    return fail("optimal status with lower != upper");

  if (cert.kind == "solve" &&
      static_cast<int>(cert.witness.size()) != cert.upper)
    return fail("witness size does not match upper bound");

  if (cert.problem == "resolve" || cert.problem == "s1s2") {
    Verdict v = is_resolving(plane, cert.witness);
    if (!v.ok)
      return fail("witness does not resolve the vertex set (pair " +
                  vertex_to_string(v.violation->first) + "," +
                  vertex_to_string(v.violation->second) + ")");
    return {};
  }
  if (cert.problem == "split") {
    Verdict v = is_split_resolving(plane, cert.witness);
    if (!v.ok)
      return fail("witness is not split-resolving (pair " +
                  vertex_to_string(v.violation->first) + "," +
                  vertex_to_string(v.violation->second) + ")");
    int side_upper = 0;
    for (const SideOutcome& s : cert.sides) {
      side_upper += s.upper;
      if (s.tag == "circles-resolve-points") {
        auto pts = all_points(plane);
        Verdict sv = is_resolving(plane, s.witness, pts);
        if (!sv.ok) return fail("circle-side witness does not resolve the points");
      } else if (s.tag == "points-resolve-circles") {
        auto zs = all_circles(plane);
        Verdict sv = is_resolving(plane, s.witness, zs);
        if (!sv.ok) return fail("point-side witness does not resolve the circles");
      } else {
        return fail("unknown split side tag " + s.tag);
      }
    }
    if (!cert.sides.empty() && side_upper != cert.upper)
      return fail("side upper bounds do not sum to the total");
    return {};
  }
  if (cert.problem == "blocking" || cert.problem == "blocking-greedy") {
    if (!blocks_all_circles(plane, cert.witness, err)) return fail(err);
    return {};
  }
  if (cert.problem == "s1") {
    if (static_cast<int>(cert.witness.size()) != 2 * plane.order() - 2)
      return fail("pencil witness has wrong size");
    Bitset common;
    bool first = true;
    for (const Vertex& v : cert.witness) {
      if (v.kind != VertexKind::Circle) return fail("pencil witness contains a point");
      if (first) {
        common = plane.circle(v.id).mask;
        first = false;
      } else {
        common &= plane.circle(v.id).mask;
      }
    }
    if (first || common.none()) return fail("pencil circles share no common point");
    auto pts = all_points(plane);
    Verdict v = is_resolving(plane, cert.witness, pts);
    if (!v.ok) return fail("pencil witness does not resolve the points");
    return {};
  }
  return fail("unknown problem kind " + cert.problem);
}

}  // namespace mobius
