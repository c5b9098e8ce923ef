#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mobius/bitset.hpp"
#include "mobius/galois_field.hpp"

namespace mobius {

// A circle of the plane: a sorted set of exactly q+1 point ids, stored both
// as a list and as a membership mask for O(1) intersection tests. Circle ids
// are assigned by lexicographic order of member lists.
struct Circle {
  std::vector<int> members;
  Bitset mask;
};

struct AxiomCheck {
  bool pass = true;
  std::vector<int> witness_points;
  std::vector<int> witness_circles;
  std::string note;
};

struct AxiomReport {
  std::array<AxiomCheck, 4> axioms;
  bool all_pass() const {
    for (const auto& a : axioms)
      if (!a.pass) return false;
    return true;
  }
};

struct CountCheck {
  std::string name;
  long long expected = 0;
  long long actual = 0;
  bool pass = true;
  std::string witness;
};

struct CountReport {
  std::vector<CountCheck> items;
  bool all_pass() const {
    for (const auto& c : items)
      if (!c.pass) return false;
    return true;
  }
};

struct ResidueLine {
  int circle = -1;               // source circle id
  std::vector<int> points;       // circle members minus the base point
};

// Affine plane obtained by deleting a point and keeping the circles through
// it: q^2 points, q(q+1) lines, q+1 parallel classes of q disjoint lines.
struct AffineResidue {
  int base_point = -1;
  std::vector<int> residue_points;
  std::vector<ResidueLine> lines;
  std::vector<std::vector<int>> parallel_classes;  // indices into lines
};

// Finite Möbius plane of order q: q^2+1 points, q(q^2+1) circles of q+1
// points each, with the incidence index [P] (circles through each point).
//
// Point ids for the Miquelian model: id 0 is the infinite point of the
// projective line over GF(q^2); id 1+e is the field element with encoding e.
// Immutable after construction.
class MobiusPlane {
 public:
  // Projective line over GF(q^2) with circles = images of the subline fixed
  // by y -> y^q (plus infinity) under invertible fractional-linear maps.
  static MobiusPlane miquelian(int q);

  // The 5-point plane whose circles are all ten 3-element subsets.
  static MobiusPlane order2_subsets();

  // Rebuild a plane from raw circle member lists (e.g. parsed from JSON).
  // Validates ranges, sortedness and canonical (lexicographic, duplicate-free)
  // circle order; does not require the circle census to be complete, so
  // deliberately corrupted planes can be constructed and then failed by
  // verify_axioms.
  static MobiusPlane from_circles(int q, int n_points,
                                  std::vector<std::vector<int>> circles,
                                  std::string model);

  int order() const { return q_; }
  const std::string& model() const { return model_; }
  int point_count() const { return n_points_; }
  int circle_count() const { return static_cast<int>(circles_.size()); }
  const std::vector<Circle>& circles() const { return circles_; }
  const Circle& circle(int id) const { return circles_[id]; }

  bool on_circle(int point, int circle) const {
    return circles_[circle].mask.test(point);
  }
  int intersection_size(int a, int b) const {
    return circles_[a].mask.intersect_count(circles_[b].mask);
  }

  // [P]: sorted ids of circles through a point.
  const std::vector<int>& circles_through(int point) const;
  // Sorted ids of circles through both points (q+1 of them in a full plane).
  const std::vector<int>& circles_through_pair(int p, int q) const;
  // Membership mask of [P] over circle ids.
  const Bitset& through_mask(int point) const;

  // The unique circle through three pairwise distinct points. For the
  // Miquelian model this pulls the base subline back through the unique
  // fractional-linear map sending (inf, 0, 1) to (A, B, C) and then locates
  // the canonical id; other models scan the pair index.
  int circle_through(int a, int b, int c) const;

  AxiomReport verify_axioms() const;
  CountReport verify_counts() const;
  AffineResidue affine_residue(int p) const;

  std::string point_label(int id) const;
  const GaloisField* field() const { return field_ ? &*field_ : nullptr; }
  // Member point ids of the base subline (Miquelian model only).
  const std::vector<int>& base_circle_members() const { return base_members_; }

 private:
  MobiusPlane() = default;
  void index_incidence();
  int locate_circle(const std::vector<int>& members) const;

  int q_ = 0;
  int n_points_ = 0;
  std::string model_;
  std::vector<Circle> circles_;
  std::vector<std::vector<int>> through_;
  std::vector<Bitset> through_masks_;
  std::vector<std::vector<int>> pair_circles_;  // index p * n_points + q, p < q
  std::optional<GaloisField> field_;            // GF(q^2) for the Miquelian model
  std::vector<int> base_members_;
};

}  // namespace mobius
