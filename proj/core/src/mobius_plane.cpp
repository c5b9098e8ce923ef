#include "mobius/mobius_plane.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mobius {

namespace {

struct Homog {
  int x0, x1;  // point of the projective line, (x0 : x1)
};

Homog point_coords(int id) {
  if (id == 0) return {1, 0};
  return {id - 1, 1};
}

}  // namespace

const std::vector<int>& MobiusPlane::circles_through(int point) const {
  if (point < 0 || point >= n_points_)
    throw std::out_of_range("invalid point id " + std::to_string(point));
  return through_[point];
}

const Bitset& MobiusPlane::through_mask(int point) const {
  if (point < 0 || point >= n_points_)
    throw std::out_of_range("invalid point id " + std::to_string(point));
  return through_masks_[point];
}

const std::vector<int>& MobiusPlane::circles_through_pair(int p, int q) const {
  if (p == q) throw std::invalid_argument("circles_through_pair: equal points");
  if (p > q) std::swap(p, q);
  if (p < 0 || q >= n_points_)
    throw std::out_of_range("invalid point pair");
  return pair_circles_[static_cast<std::size_t>(p) * n_points_ + q];
}

void MobiusPlane::index_incidence() {
  through_.assign(n_points_, {});
  through_masks_.assign(n_points_, Bitset(circle_count()));
  pair_circles_.assign(static_cast<std::size_t>(n_points_) * n_points_, {});
  for (int id = 0; id < circle_count(); ++id) {
    const auto& m = circles_[id].members;
    for (std::size_t i = 0; i < m.size(); ++i) {
      through_[m[i]].push_back(id);
      through_masks_[m[i]].set(id);
      for (std::size_t j = i + 1; j < m.size(); ++j)
        pair_circles_[static_cast<std::size_t>(m[i]) * n_points_ + m[j]]
            .push_back(id);
    }
  }
}

int MobiusPlane::locate_circle(const std::vector<int>& members) const {
  auto it = std::lower_bound(
      circles_.begin(), circles_.end(), members,
      [](const Circle& c, const std::vector<int>& m) { return c.members < m; });
  if (it == circles_.end() || it->members != members)
    throw std::logic_error("circle not found in canonical list");
  return static_cast<int>(it - circles_.begin());
}

MobiusPlane MobiusPlane::miquelian(int q) {
  auto pk = GaloisField::prime_power(q);
  if (!pk || q < 2)
    throw std::invalid_argument("order " + std::to_string(q) +
                                " is not a prime power >= 2");
  auto [p, m] = *pk;

  MobiusPlane plane;
  plane.q_ = q;
  plane.model_ = "miquelian";
  plane.n_points_ = q * q + 1;
  plane.field_.emplace(p, 2 * m);
  const GaloisField& f = *plane.field_;

  // the subfield of GF(q^2) fixed by y -> y^q, i.e. GF(q)
  std::vector<int> subfield;
  subfield.reserve(q);
  for (int e = 0; e < f.q(); ++e)
    if (f.pow(e, q) == e) subfield.push_back(e);
  if (static_cast<int>(subfield.size()) != q)
    throw std::logic_error("subfield extraction failed");

  const int n = plane.n_points_;

  // Unique map with (1:0) -> A, (0:1) -> B, (1:1) -> C; its image of the
  // base subline is the circle through A, B, C.
  auto circle_members = [&](int a, int b, int c) {
    Homog ha = point_coords(a), hb = point_coords(b), hc = point_coords(c);
    int det = f.sub(f.mul(ha.x0, hb.x1), f.mul(ha.x1, hb.x0));
    int lam = f.div(f.sub(f.mul(hc.x0, hb.x1), f.mul(hc.x1, hb.x0)), det);
    int mu = f.div(f.sub(f.mul(ha.x0, hc.x1), f.mul(ha.x1, hc.x0)), det);
    int m00 = f.mul(lam, ha.x0), m10 = f.mul(lam, ha.x1);
    int m01 = f.mul(mu, hb.x0), m11 = f.mul(mu, hb.x1);
    auto to_id = [&](int y0, int y1) {
      return y1 == 0 ? 0 : 1 + f.div(y0, y1);
    };
    std::vector<int> members;
    members.reserve(q + 1);
    members.push_back(to_id(m00, m10));
    for (int s : subfield)
      members.push_back(to_id(f.add(f.mul(m00, s), m01), f.add(f.mul(m10, s), m11)));
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
      throw std::logic_error("degenerate subline image");
    return members;
  };

  // Enumerate circles by scanning point triples in lexicographic order and
  // closing each uncovered triple; doubles as a check that every triple lies
  // on a circle. Dedup via the growing pair index.
  std::vector<std::vector<int>> pair_index(static_cast<std::size_t>(n) * n);
  std::vector<Circle> found;
  for (int a = 0; a < n - 2; ++a)
    for (int b = a + 1; b < n - 1; ++b) {
      const auto& through_ab = pair_index[static_cast<std::size_t>(a) * n + b];
      for (int c = b + 1; c < n; ++c) {
        bool covered = false;
        for (int id : through_ab)
          if (found[id].mask.test(c)) {
            covered = true;
            break;
          }
        if (covered) continue;
        Circle z;
        z.members = circle_members(a, b, c);
        z.mask = Bitset(n);
        for (int x : z.members) z.mask.set(x);
        int id = static_cast<int>(found.size());
        for (std::size_t i = 0; i < z.members.size(); ++i)
          for (std::size_t j = i + 1; j < z.members.size(); ++j)
            pair_index[static_cast<std::size_t>(z.members[i]) * n + z.members[j]]
                .push_back(id);
        found.push_back(std::move(z));
      }
    }

  if (static_cast<long long>(found.size()) != static_cast<long long>(q) * (q * q + 1))
    throw std::logic_error("circle census mismatch for order " + std::to_string(q));

  std::sort(found.begin(), found.end(),
            [](const Circle& x, const Circle& y) { return x.members < y.members; });
  plane.circles_ = std::move(found);
  plane.index_incidence();

  std::vector<int> base;
  base.push_back(0);
  for (int e : subfield) base.push_back(1 + e);
  std::sort(base.begin(), base.end());
  plane.base_members_ = base;
  return plane;
}

MobiusPlane MobiusPlane::order2_subsets() {
  MobiusPlane plane;
  plane.q_ = 2;
  plane.model_ = "order2-subsets";
  plane.n_points_ = 5;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = b + 1; c < 5; ++c) {
        Circle z;
        z.members = {a, b, c};
        z.mask = Bitset(5);
        for (int x : z.members) z.mask.set(x);
        plane.circles_.push_back(std::move(z));
      }
  plane.index_incidence();
  return plane;
}

MobiusPlane MobiusPlane::from_circles(int q, int n_points,
                                      std::vector<std::vector<int>> circles,
                                      std::string model) {
  if (q < 2 || n_points < 5)
    throw std::invalid_argument("from_circles: bad parameters");
  MobiusPlane plane;
  plane.q_ = q;
  plane.n_points_ = n_points;
  plane.model_ = std::move(model);
  for (std::size_t i = 0; i < circles.size(); ++i) {
    const auto& m = circles[i];
    if (!std::is_sorted(m.begin(), m.end()) ||
        std::adjacent_find(m.begin(), m.end()) != m.end())
      throw std::invalid_argument("from_circles: circle members not sorted/unique");
    if (m.empty() || m.front() < 0 || m.back() >= n_points)
      throw std::invalid_argument("from_circles: point id out of range");
    if (i > 0 && !(circles[i - 1] < m))
      throw std::invalid_argument("from_circles: circles not in canonical order");
  }
  for (auto& m : circles) {
    Circle z;
    z.mask = Bitset(n_points);
    for (int x : m) z.mask.set(x);
    z.members = std::move(m);
    plane.circles_.push_back(std::move(z));
  }
  plane.index_incidence();
  return plane;
}

int MobiusPlane::circle_through(int a, int b, int c) const {
  if (a == b || a == c || b == c)
    throw std::invalid_argument("circle_through: points not pairwise distinct");
  for (int x : {a, b, c})
    if (x < 0 || x >= n_points_)
      throw std::out_of_range("circle_through: invalid point id");
  if (field_) {
    // recompute the member set through the map, then locate its canonical id
    const GaloisField& f = *field_;
    Homog ha = point_coords(a), hb = point_coords(b), hc = point_coords(c);
    int det = f.sub(f.mul(ha.x0, hb.x1), f.mul(ha.x1, hb.x0));
    int lam = f.div(f.sub(f.mul(hc.x0, hb.x1), f.mul(hc.x1, hb.x0)), det);
    int mu = f.div(f.sub(f.mul(ha.x0, hc.x1), f.mul(ha.x1, hc.x0)), det);
    int m00 = f.mul(lam, ha.x0), m10 = f.mul(lam, ha.x1);
    int m01 = f.mul(mu, hb.x0), m11 = f.mul(mu, hb.x1);
    auto to_id = [&](int y0, int y1) { return y1 == 0 ? 0 : 1 + f.div(y0, y1); };
    std::vector<int> members;
    members.reserve(q_ + 1);
    for (int base : base_members_) {
      if (base == 0) {
        members.push_back(to_id(m00, m10));
      } else {
        int s = base - 1;
        members.push_back(
            to_id(f.add(f.mul(m00, s), m01), f.add(f.mul(m10, s), m11)));
      }
    }
    std::sort(members.begin(), members.end());
    return locate_circle(members);
  }
  for (int id : circles_through_pair(a, b))
    if (circles_[id].mask.test(c)) return id;
  throw std::runtime_error("no circle through the given triple");
}

AxiomReport MobiusPlane::verify_axioms() const {
  AxiomReport report;
  const int n = n_points_;

  // 1: every three pairwise distinct points lie on exactly one circle
  {
    AxiomCheck& ax = report.axioms[0];
    ax.note = "three points on exactly one circle";
    for (int a = 0; a < n - 2 && ax.pass; ++a)
      for (int b = a + 1; b < n - 1 && ax.pass; ++b) {
        const auto& lst =
            pair_circles_[static_cast<std::size_t>(a) * n + b];
        for (int c = b + 1; c < n; ++c) {
          int cnt = 0;
          for (int id : lst)
            if (circles_[id].mask.test(c)) ++cnt;
          if (cnt != 1) {
            ax.pass = false;
            ax.witness_points = {a, b, c};
            ax.note = "triple lies on " + std::to_string(cnt) + " circles";
            break;
          }
        }
      }
  }

  // 2: tangency axiom
  {
    AxiomCheck& ax = report.axioms[1];
    ax.note = "unique circle through P and Q tangent at P";
    for (int z = 0; z < circle_count() && ax.pass; ++z) {
      const Circle& zc = circles_[z];
      for (int p : zc.members) {
        for (int qq = 0; qq < n; ++qq) {
          if (zc.mask.test(qq)) continue;
          int lo = std::min(p, qq), hi = std::max(p, qq);
          int cnt = 0;
          for (int id : pair_circles_[static_cast<std::size_t>(lo) * n + hi])
            if (zc.mask.intersect_count(circles_[id].mask) == 1) ++cnt;
          if (cnt != 1) {
            ax.pass = false;
            ax.witness_points = {p, qq};
            ax.witness_circles = {z};
            ax.note = std::to_string(cnt) + " tangent circles at P through Q";
            break;
          }
        }
        if (!ax.pass) break;
      }
    }
  }

  // 3: at least one circle, every circle has at least three points
  {
    AxiomCheck& ax = report.axioms[2];
    ax.note = "at least one circle, all circles have >= 3 points";
    if (circles_.empty()) {
      ax.pass = false;
      ax.note = "no circles";
    } else {
      for (int z = 0; z < circle_count(); ++z)
        if (circles_[z].members.size() < 3) {
          ax.pass = false;
          ax.witness_circles = {z};
          ax.note = "circle with fewer than 3 points";
          break;
        }
    }
  }

  // 4: for every circle there is a point off it
  {
    AxiomCheck& ax = report.axioms[3];
    ax.note = "every circle misses some point";
    for (int z = 0; z < circle_count(); ++z)
      if (static_cast<int>(circles_[z].members.size()) >= n) {
        ax.pass = false;
        ax.witness_circles = {z};
        break;
      }
  }

  return report;
}

CountReport MobiusPlane::verify_counts() const {
  CountReport report;
  const int n = n_points_;
  const long long q = q_;

  auto add_item = [&](const std::string& name, long long expected) -> CountCheck& {
    report.items.push_back({name, expected, expected, true, ""});
    return report.items.back();
  };

  {
    CountCheck& it = add_item("circles through two distinct points", q + 1);
    for (int a = 0; a < n - 1 && it.pass; ++a)
      for (int b = a + 1; b < n; ++b) {
        long long got = static_cast<long long>(
            pair_circles_[static_cast<std::size_t>(a) * n + b].size());
        if (got != it.expected) {
          it.pass = false;
          it.actual = got;
          it.witness = "pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
          break;
        }
      }
  }

  CountCheck& secants = add_item("circles meeting a circle twice", (q + 1) * q * q / 2);
  CountCheck& tangents_at =
      add_item("tangent circles at each point of a circle", q - 1);
  CountCheck& tangents = add_item("tangent circles of a circle", q * q - 1);
  CountCheck& skew = add_item("circles skew to a circle", (q * q * q - 3 * q * q + 2 * q) / 2);
  CountCheck& meeting =
      add_item("circles meeting a circle once or twice", (q * q * q + 3 * q * q - 2) / 2);

  for (int z = 0; z < circle_count(); ++z) {
    const Circle& zc = circles_[z];
    long long n_sec = 0, n_tan = 0, n_skew = 0;
    std::vector<long long> tan_at(zc.members.size(), 0);
    for (int w = 0; w < circle_count(); ++w) {
      if (w == z) continue;
      int k = zc.mask.intersect_count(circles_[w].mask);
      if (k == 0) {
        ++n_skew;
      } else if (k == 1) {
        ++n_tan;
        int common = -1;
        for (std::size_t i = 0; i < zc.members.size(); ++i)
          if (circles_[w].mask.test(zc.members[i])) {
            common = static_cast<int>(i);
            break;
          }
        ++tan_at[common];
      } else if (k == 2) {
        ++n_sec;
      } else {
        secants.pass = false;
        secants.actual = k;
        secants.witness = "circles " + std::to_string(z) + "," +
                          std::to_string(w) + " share " + std::to_string(k) +
                          " points";
      }
    }
    auto check = [&](CountCheck& it, long long got) {
      if (it.pass && got != it.expected) {
        it.pass = false;
        it.actual = got;
        it.witness = "circle " + std::to_string(z);
      }
    };
    check(secants, n_sec);
    check(tangents, n_tan);
    check(skew, n_skew);
    check(meeting, n_sec + n_tan);
    for (std::size_t i = 0; i < tan_at.size(); ++i)
      if (tangents_at.pass && tan_at[i] != tangents_at.expected) {
        tangents_at.pass = false;
        tangents_at.actual = tan_at[i];
        tangents_at.witness = "circle " + std::to_string(z) + " at point " +
                              std::to_string(zc.members[i]);
      }
  }

  return report;
}

AffineResidue MobiusPlane::affine_residue(int p) const {
  if (p < 0 || p >= n_points_)
    throw std::out_of_range("affine_residue: invalid point id");

  AffineResidue res;
  res.base_point = p;
  for (int x = 0; x < n_points_; ++x)
    if (x != p) res.residue_points.push_back(x);

  const auto& through = through_[p];
  for (int id : through) {
    ResidueLine line;
    line.circle = id;
    for (int x : circles_[id].members)
      if (x != p) line.points.push_back(x);
    res.lines.push_back(std::move(line));
  }

  // Two circles through p are parallel as residue lines iff they are tangent
  // at p, i.e. their full intersection is exactly {p}.
  std::vector<bool> assigned(res.lines.size(), false);
  for (std::size_t i = 0; i < res.lines.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<int> cls{static_cast<int>(i)};
    assigned[i] = true;
    for (std::size_t j = i + 1; j < res.lines.size(); ++j) {
      if (assigned[j]) continue;
      if (intersection_size(res.lines[i].circle, res.lines[j].circle) == 1) {
        cls.push_back(static_cast<int>(j));
        assigned[j] = true;
      }
    }
    res.parallel_classes.push_back(std::move(cls));
  }

  // sanity: q+1 classes of q mutually disjoint lines partitioning the points
  if (static_cast<int>(res.parallel_classes.size()) != q_ + 1)
    throw std::logic_error("affine residue: wrong number of parallel classes");
  for (const auto& cls : res.parallel_classes) {
    if (static_cast<int>(cls.size()) != q_)
      throw std::logic_error("affine residue: wrong class size");
    Bitset seen(n_points_);
    int covered = 0;
    for (int li : cls)
      for (int x : res.lines[li].points) {
        if (seen.test(x))
          throw std::logic_error("affine residue: class lines not disjoint");
        seen.set(x);
        ++covered;
      }
    if (covered != q_ * q_)
      throw std::logic_error("affine residue: class does not cover the points");
  }
  return res;
}

std::string MobiusPlane::point_label(int id) const {
  if (id < 0 || id >= n_points_)
    throw std::out_of_range("invalid point id");
  if (model_ == "miquelian") return id == 0 ? "inf" : std::to_string(id - 1);
  return std::to_string(id);
}

}  // namespace mobius
