#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mobius/constructions.hpp"
#include "mobius/cover_solvers.hpp"
#include "mobius/incidence_metric.hpp"
#include "mobius/mobius_plane.hpp"

namespace mobius {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kSolverVersion = "mobius-core/0.1.0";

// Versioned plane document {order, model, reduction_polynomials, points,
// circles: [[point ids]]}; circles are canonical, so a re-verification can
// reuse the ids from any certificate produced against the same plane.
std::string plane_to_json(const MobiusPlane& plane);
MobiusPlane plane_from_json(const std::string& text);

// {universe, edges: [{label, members}]}; members are universe positions.
std::string instance_to_json(const CoverInstance& inst);

// One solved or constructed side of a problem.
struct SideOutcome {
  std::string tag;
  std::string status;  // optimal | bounded
  int upper = 0;
  int lower = 0;
  std::vector<Vertex> witness;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

// Serialized claim (resolving / split-resolving / blocking / optimum) plus
// the witness evidence needed to re-verify it against the plane document.
struct Certificate {
  int schema_version = kSchemaVersion;
  std::string kind;     // solve | construct
  std::string problem;  // resolve | split | blocking | s1 | s1s2 | blocking-greedy
  int q = 0;
  std::string model;
  std::string status;  // optimal | bounded | constructed
  int upper = 0;
  int lower = 0;
  std::vector<Vertex> witness;
  std::vector<SideOutcome> sides;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
  std::string solver = kSolverVersion;
};

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

struct VerifyResult {
  bool ok = true;
  std::string detail;
};

// Re-check a certificate's claim against a plane using only the independent
// verifiers (distance signatures / circle masks), never the solver.
VerifyResult verify_certificate(const MobiusPlane& plane, const Certificate& cert);

}  // namespace mobius
