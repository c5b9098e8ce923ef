#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "mobius/serialization.hpp"

using namespace mobius;

TEST_CASE("plane JSON round trip preserves structure and canonical ids") {
  for (int q : {2, 3, 4}) {
    CAPTURE(q);
    auto plane = MobiusPlane::miquelian(q);
    std::string text = plane_to_json(plane);
    auto loaded = plane_from_json(text);
    CHECK(loaded.order() == plane.order());
    CHECK(loaded.model() == plane.model());
    CHECK(loaded.point_count() == plane.point_count());
    REQUIRE(loaded.circle_count() == plane.circle_count());
    for (int z = 0; z < plane.circle_count(); ++z)
      CHECK(loaded.circle(z).members == plane.circle(z).members);
    CHECK(loaded.verify_axioms().all_pass());
    CHECK(loaded.verify_counts().all_pass());
  }
}

TEST_CASE("plane JSON records the reduction polynomial") {
  auto plane = MobiusPlane::miquelian(3);
  std::string text = plane_to_json(plane);
  CHECK(text.find("reduction_polynomials") != std::string::npos);
  CHECK(text.find("point_field") != std::string::npos);
  // order2-subsets model carries no field
  auto sub = MobiusPlane::order2_subsets();
  CHECK(plane_to_json(sub).find("point_field") == std::string::npos);
}

TEST_CASE("instance JSON lists universe and labelled edges") {
  auto plane = MobiusPlane::order2_subsets();
  auto inst = build_blocking_instance(plane);
  std::string text = instance_to_json(inst);
  CHECK(text.find("\"tag\":\"blocking\"") != std::string::npos);
  CHECK(text.find("\"members\":[") != std::string::npos);
  CHECK(text.find("\"circle\"") != std::string::npos);
}

TEST_CASE("certificate JSON round trip") {
  Certificate cert;
  cert.kind = "solve";
  cert.problem = "blocking";
  cert.q = 2;
  cert.model = "order2-subsets";
  cert.status = "optimal";
  cert.upper = 3;
  cert.lower = 3;
  cert.witness = {point_vertex(0), point_vertex(1), point_vertex(2)};
  cert.nodes = 42;
  cert.elapsed_seconds = 0.5;

  auto parsed = certificate_from_json(certificate_to_json(cert));
  CHECK(parsed.kind == cert.kind);
  CHECK(parsed.problem == cert.problem);
  CHECK(parsed.q == cert.q);
  CHECK(parsed.status == cert.status);
  CHECK(parsed.upper == cert.upper);
  CHECK(parsed.witness == cert.witness);
  CHECK(parsed.nodes == cert.nodes);
  CHECK(parsed.solver == std::string(kSolverVersion));
}

TEST_CASE("certificates re-verify from the plane JSON alone") {
  auto plane = MobiusPlane::order2_subsets();
  auto reloaded = plane_from_json(plane_to_json(plane));

  SUBCASE("valid blocking certificate verifies") {
    Certificate cert;
    cert.kind = "solve";
    cert.problem = "blocking";
    cert.q = 2;
    cert.model = plane.model();
    cert.status = "optimal";
    cert.upper = cert.lower = 3;
    cert.witness = {point_vertex(0), point_vertex(1), point_vertex(2)};
    auto res = verify_certificate(reloaded, cert);
    CHECK(res.ok);
  }
  SUBCASE("a witness that misses a circle is rejected") {
    Certificate cert;
    cert.kind = "solve";
    cert.problem = "blocking";
    cert.q = 2;
    cert.model = plane.model();
    cert.status = "optimal";
    cert.upper = cert.lower = 2;
    cert.witness = {point_vertex(0), point_vertex(1)};
    auto res = verify_certificate(reloaded, cert);
    CHECK_FALSE(res.ok);
    CHECK(res.detail.find("not met") != std::string::npos);
  }
  SUBCASE("resolving witness") {
    Certificate cert;
    cert.kind = "solve";
    cert.problem = "resolve";
    cert.q = 2;
    cert.model = plane.model();
    cert.status = "optimal";
    cert.upper = cert.lower = 4;
    cert.witness = {point_vertex(0), point_vertex(1), point_vertex(2),
                    point_vertex(3)};
    CHECK(verify_certificate(reloaded, cert).ok);
    cert.witness.pop_back();
    cert.upper = cert.lower = 3;
    auto res = verify_certificate(reloaded, cert);
    CHECK_FALSE(res.ok);
  }
  SUBCASE("inconsistent bookkeeping is rejected") {
    Certificate cert;
    cert.kind = "solve";
    cert.problem = "blocking";
    cert.q = 2;
    cert.model = plane.model();
    cert.status = "optimal";
    cert.upper = 3;
    cert.lower = 2;  // optimal must have lower == upper
    cert.witness = {point_vertex(0), point_vertex(1), point_vertex(2)};
    CHECK_FALSE(verify_certificate(reloaded, cert).ok);
    cert.q = 5;
    CHECK_FALSE(verify_certificate(reloaded, cert).ok);
  }
}

TEST_CASE("split certificates check both sides") {
  auto plane = MobiusPlane::order2_subsets();
  auto circle_id = [&](std::vector<int> members) {
    for (int z = 0; z < plane.circle_count(); ++z)
      if (plane.circle(z).members == members) return z;
    return -1;
  };
  Certificate cert;
  cert.kind = "solve";
  cert.problem = "split";
  cert.q = 2;
  cert.model = plane.model();
  cert.status = "optimal";
  cert.upper = cert.lower = 7;

  SideOutcome points_side;
  points_side.tag = "points-resolve-circles";
  points_side.status = "optimal";
  points_side.upper = points_side.lower = 4;
  points_side.witness = {point_vertex(0), point_vertex(1), point_vertex(2),
                         point_vertex(3)};
  SideOutcome circles_side;
  circles_side.tag = "circles-resolve-points";
  circles_side.status = "optimal";
  circles_side.upper = circles_side.lower = 3;
  circles_side.witness = {circle_vertex(circle_id({0, 1, 2})),
                          circle_vertex(circle_id({0, 1, 3})),
                          circle_vertex(circle_id({0, 2, 3}))};
  cert.sides = {circles_side, points_side};
  cert.witness = points_side.witness;
  cert.witness.insert(cert.witness.end(), circles_side.witness.begin(),
                      circles_side.witness.end());

  CHECK(verify_certificate(plane, cert).ok);

  SUBCASE("a bad side witness fails") {
    cert.sides[0].witness.pop_back();
    cert.sides[0].upper = 2;
    cert.upper = cert.lower = 6;
    cert.witness.pop_back();
    CHECK_FALSE(verify_certificate(plane, cert).ok);
  }
}

TEST_CASE("pencil certificates require the common point and the resolving property") {
  auto plane = MobiusPlane::miquelian(4);
  auto pencil = build_pencil_point_resolver(plane);
  Certificate cert;
  cert.kind = "construct";
  cert.problem = "s1";
  cert.q = 4;
  cert.model = plane.model();
  cert.status = "constructed";
  cert.upper = static_cast<int>(pencil.circles.size());
  cert.lower = 0;
  for (int z : pencil.circles) cert.witness.push_back(circle_vertex(z));
  CHECK(verify_certificate(plane, cert).ok);

  // swap one circle for one missing the base point
  for (int z = 0; z < plane.circle_count(); ++z)
    if (!plane.on_circle(pencil.base_point, z)) {
      cert.witness.back() = circle_vertex(z);
      break;
    }
  CHECK_FALSE(verify_certificate(plane, cert).ok);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS(plane_from_json("{\"schema_version\": 99}"));
  CHECK_THROWS(plane_from_json("not json"));
  CHECK_THROWS(certificate_from_json("{}"));
}
