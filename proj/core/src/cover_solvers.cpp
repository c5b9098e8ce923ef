#include "mobius/cover_solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mobius {

namespace {

void require_no_empty_edge(const CoverInstance& inst) {
  for (int e = 0; e < inst.edge_count(); ++e)
    if (inst.edges[e].size == 0)
      throw std::invalid_argument(
          "uncoverable empty edge " + std::to_string(e) + " (label " +
          vertex_to_string(inst.edges[e].label_a) +
          (inst.edges[e].pair_label
               ? "," + vertex_to_string(inst.edges[e].label_b)
               : "") +
          ")");
}

}  // namespace

std::string solve_status_name(SolveStatus s) {
  return s == SolveStatus::Optimal ? "optimal" : "bounded";
}

GreedyTrace greedy_cover(const CoverInstance& inst) {
  require_no_empty_edge(inst);
  const int n = inst.universe_size();
  const int m = inst.edge_count();

  std::vector<int> count(n, 0);
  for (const auto& e : inst.edges)
    e.members.for_each([&](int v) { ++count[v]; });

  std::vector<bool> covered(m, false);
  int uncovered = m;
  GreedyTrace trace;
  while (uncovered > 0) {
    int best = 0;
    for (int v = 1; v < n; ++v)
      if (count[v] > count[best]) best = v;
    if (count[best] == 0)
      throw std::logic_error("greedy_cover: positive uncovered count with no candidate");
    int newly = 0;
    for (int e = 0; e < m; ++e) {
      if (covered[e] || !inst.edges[e].members.test(best)) continue;
      covered[e] = true;
      --uncovered;
      ++newly;
      inst.edges[e].members.for_each([&](int v) { --count[v]; });
    }
    trace.chosen.push_back(best);
    trace.newly_covered.push_back(newly);
  }
  return trace;
}

FractionalAssignment uniform_fractional_check(const CoverInstance& inst,
                                              std::int64_t numerator,
                                              std::int64_t denominator) {
  if (denominator <= 0)
    throw std::invalid_argument("uniform_fractional_check: denominator must be > 0");
  if (numerator < 0)
    throw std::invalid_argument("uniform_fractional_check: negative value");

  FractionalAssignment out;
  out.value_num = numerator;
  out.value_den = denominator;
  out.feasible = true;
  out.all_tight = true;
  for (int e = 0; e < inst.edge_count(); ++e) {
    std::int64_t lhs = static_cast<std::int64_t>(inst.edges[e].size) * numerator;
    if (lhs < denominator) {
      out.feasible = false;
      out.all_tight = false;
      if (out.first_violated_edge == -1) out.first_violated_edge = e;
    } else if (lhs != denominator) {
      out.all_tight = false;
    }
  }
  out.objective = Rational(numerator * inst.universe_size(), denominator);
  return out;
}

bool greedy_within_fractional_guarantee(std::size_t greedy_size,
                                        const Rational& tau_star, int degree) {
  if (degree <= 0) return false;
  long double bound =
      static_cast<long double>(tau_star.num) / tau_star.den *
      (1.0L + std::log(static_cast<long double>(degree)));
  return static_cast<long double>(greedy_size) < bound;
}

int disjoint_edge_lower_bound(const CoverInstance& inst, const Bitset& covered_edges) {
  std::vector<int> order;
  order.reserve(inst.edge_count());
  for (int e = 0; e < inst.edge_count(); ++e)
    if (!covered_edges.test(e)) order.push_back(e);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (inst.edges[a].size != inst.edges[b].size)
      return inst.edges[a].size < inst.edges[b].size;
    return a < b;
  });
  Bitset used(inst.universe_size());
  int packed = 0;
  for (int e : order)
    if (!inst.edges[e].members.intersects(used)) {
      used |= inst.edges[e].members;
      ++packed;
    }
  return packed;
}

namespace {

// Branch-and-bound minimum hitting set over include/exclude decisions.
//
// State is kept in intrusive doubly-linked lists of uncovered edges bucketed
// by effective size (= members not yet excluded), so unit edges and the
// branching edge come out in O(1). All mutations go through an undo log.
class HittingSetSearch {
 public:
  HittingSetSearch(const CoverInstance& inst, SolveBudget budget,
                   std::optional<int> initial_upper)
      : inst_(inst), budget_(budget), initial_upper_(initial_upper) {}

  SolveOutcome run() {
    auto t0 = std::chrono::steady_clock::now();
    SolveOutcome out;

    GreedyTrace seed = greedy_cover(inst_);
    best_witness_ = seed.chosen;
    std::sort(best_witness_.begin(), best_witness_.end());
    upper_ = static_cast<int>(best_witness_.size());
    cutoff_ = std::min(upper_, initial_upper_.value_or(std::numeric_limits<int>::max()));

    build_static();
    int root_lb = std::max(root_lower_bound(), inst_.derived_lower);
    if (root_lb > upper_)
      throw std::logic_error("hitting-set bound exceeds a concrete witness");

    deadline_ = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(budget_.wall_seconds));
    // nothing below root_lb can exist, so only search when the incumbent
    // leaves room for an improvement
    if (m_uncov_ > 0 && cutoff_ > 1 && cutoff_ > root_lb) dfs(0);

    out.nodes = nodes_;
    out.witness = best_witness_;
    out.upper = upper_;
    if (upper_ < root_lb)
      throw std::logic_error("hitting-set search contradicted the derived bound");
    if (!out_of_budget_) {
      // proven: no hitting set smaller than max(cutoff_, root_lb) exists
      out.lower = std::min(std::max(cutoff_, root_lb), upper_);
      out.status = out.lower == out.upper ? SolveStatus::Optimal : SolveStatus::Bounded;
    } else {
      int certified = std::max(std::min(abandoned_min_, cutoff_), root_lb);
      out.lower = std::min(certified, out.upper);
      out.status = out.lower == out.upper ? SolveStatus::Optimal : SolveStatus::Bounded;
    }
    out.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
  }

 private:
  enum class Op : std::uint8_t { Cover, Shrink, Exclude, Choose };
  struct LogEntry {
    Op op;
    int idx;
  };

  void build_static() {
    const int n = inst_.universe_size();
    const int m = inst_.edge_count();

    // Edge subsumption: an edge containing another edge is implied by it.
    active_.assign(m, true);
    std::vector<int> by_size(m);
    for (int e = 0; e < m; ++e) by_size[e] = e;
    std::sort(by_size.begin(), by_size.end(), [&](int a, int b) {
      if (inst_.edges[a].size != inst_.edges[b].size)
        return inst_.edges[a].size < inst_.edges[b].size;
      return a < b;
    });
    if (static_cast<long long>(m) * m <= 200'000'000LL) {
      for (std::size_t i = 0; i < by_size.size(); ++i) {
        int a = by_size[i];
        if (!active_[a]) continue;
        for (std::size_t j = i + 1; j < by_size.size(); ++j) {
          int b = by_size[j];
          if (!active_[b]) continue;
          if (inst_.edges[a].members.is_subset_of(inst_.edges[b].members))
            active_[b] = false;
        }
      }
    }

    edge_ids_.clear();
    for (int e = 0; e < m; ++e)
      if (active_[e]) edge_ids_.push_back(e);
    const int ma = static_cast<int>(edge_ids_.size());

    vertex_edges_.assign(n, {});
    eff_size_.assign(ma, 0);
    alive_.assign(ma, true);
    max_size_ = 0;
    for (int i = 0; i < ma; ++i) {
      const auto& e = inst_.edges[edge_ids_[i]];
      eff_size_[i] = e.size;
      max_size_ = std::max(max_size_, e.size);
      e.members.for_each([&](int v) { vertex_edges_[v].push_back(i); });
    }
    static_degree_.assign(n, 0);
    max_static_degree_ = 1;
    for (int v = 0; v < n; ++v) {
      static_degree_[v] = static_cast<int>(vertex_edges_[v].size());
      max_static_degree_ = std::max(max_static_degree_, static_degree_[v]);
    }

    // per-edge branch order: by static degree descending, index ascending
    branch_members_.assign(ma, {});
    for (int i = 0; i < ma; ++i) {
      auto& mem = branch_members_[i];
      inst_.edges[edge_ids_[i]].members.for_each([&](int v) { mem.push_back(v); });
      std::stable_sort(mem.begin(), mem.end(), [&](int a, int b) {
        if (static_degree_[a] != static_degree_[b])
          return static_degree_[a] > static_degree_[b];
        return a < b;
      });
    }

    bucket_head_.assign(max_size_ + 1, -1);
    nxt_.assign(ma, -1);
    prv_.assign(ma, -1);
    for (int i = ma - 1; i >= 0; --i) push_edge(i);
    m_uncov_ = ma;
    excluded_ = Bitset(n);
    chosen_mark_.assign(n, false);
    word_count_ = excluded_.word_count();
    scratch_used_.assign(word_count_, 0);
    scratch_deg_.assign(n, 0);
  }

  void push_edge(int i) {
    int s = eff_size_[i];
    prv_[i] = -1;
    nxt_[i] = bucket_head_[s];
    if (nxt_[i] != -1) prv_[nxt_[i]] = i;
    bucket_head_[s] = i;
  }
  void unlink_edge(int i) {
    if (prv_[i] == -1)
      bucket_head_[eff_size_[i]] = nxt_[i];
    else
      nxt_[prv_[i]] = nxt_[i];
    if (nxt_[i] != -1) prv_[nxt_[i]] = prv_[i];
  }

  void cover_edge(int i) {
    unlink_edge(i);
    alive_[i] = false;
    --m_uncov_;
    log_.push_back({Op::Cover, i});
  }
  void shrink_edge(int i) {
    unlink_edge(i);
    --eff_size_[i];
    push_edge(i);
    log_.push_back({Op::Shrink, i});
  }

  void include_vertex(int v) {
    chosen_mark_[v] = true;
    chosen_.push_back(v);
    log_.push_back({Op::Choose, v});
    for (int i : vertex_edges_[v])
      if (alive_[i]) cover_edge(i);
  }
  void exclude_vertex(int v) {
    excluded_.set(v);
    log_.push_back({Op::Exclude, v});
    for (int i : vertex_edges_[v])
      if (alive_[i]) shrink_edge(i);
  }

  void rollback(std::size_t mark) {
    while (log_.size() > mark) {
      auto [op, idx] = log_.back();
      log_.pop_back();
      switch (op) {
        case Op::Cover:
          alive_[idx] = true;
          ++m_uncov_;
          push_edge(idx);
          break;
        case Op::Shrink:
          unlink_edge(idx);
          ++eff_size_[idx];
          push_edge(idx);
          break;
        case Op::Exclude:
          excluded_.reset(idx);
          break;
        case Op::Choose:
          chosen_mark_[idx] = false;
          chosen_.pop_back();
          break;
      }
    }
  }

  // Greedy packing of pairwise-disjoint uncovered edges over effective
  // members, smallest edges first. Early exit once the bound exceeds cap.
  int packing_bound(int cap) {
    std::fill(scratch_used_.begin(), scratch_used_.end(), 0);
    int packed = 0;
    for (int s = 1; s <= max_size_ && packed <= cap; ++s) {
      for (int i = bucket_head_[s]; i != -1; i = nxt_[i]) {
        const auto& words = inst_.edges[edge_ids_[i]].members.words();
        bool overlap = false;
        for (int w = 0; w < word_count_; ++w) {
          std::uint64_t eff = words[w] & ~excluded_.words()[w];
          if (eff & scratch_used_[w]) {
            overlap = true;
            break;
          }
        }
        if (overlap) continue;
        for (int w = 0; w < word_count_; ++w)
          scratch_used_[w] |= words[w] & ~excluded_.words()[w];
        if (++packed > cap) break;
      }
    }
    return packed;
  }

  // Counting bound: the k largest current degrees must reach m_uncov.
  int counting_bound(int cap) {
    touched_.clear();
    for (int s = 1; s <= max_size_; ++s)
      for (int i = bucket_head_[s]; i != -1; i = nxt_[i]) {
        const auto& words = inst_.edges[edge_ids_[i]].members.words();
        for (int w = 0; w < word_count_; ++w) {
          std::uint64_t eff = words[w] & ~excluded_.words()[w];
          while (eff) {
            int v = (w << 6) + std::countr_zero(eff);
            eff &= eff - 1;
            if (scratch_deg_[v] == 0) touched_.push_back(v);
            ++scratch_deg_[v];
          }
        }
      }
    degs_.clear();
    for (int v : touched_) {
      degs_.push_back(scratch_deg_[v]);
      scratch_deg_[v] = 0;
    }
    std::sort(degs_.begin(), degs_.end(), std::greater<int>());
    long long need = m_uncov_;
    int k = 0;
    for (int d : degs_) {
      if (need <= 0) break;
      need -= d;
      ++k;
      if (k > cap) return k;
    }
    if (need > 0) return cap + 1;  // even all vertices cannot cover
    return k;
  }

  int cheap_bound() const {
    if (m_uncov_ == 0) return 0;
    return std::max(1, (m_uncov_ + max_static_degree_ - 1) / max_static_degree_);
  }

  int root_lower_bound() {
    if (m_uncov_ == 0) return 0;
    int cap = m_uncov_;
    return std::max(packing_bound(cap), cheap_bound());
  }

  bool budget_exceeded() {
    if (out_of_budget_) return true;
    if (nodes_ >= budget_.max_nodes) {
      out_of_budget_ = true;
      return true;
    }
    if ((nodes_ & 1023) == 0 &&
        std::chrono::steady_clock::now() >= deadline_) {
      out_of_budget_ = true;
      return true;
    }
    return false;
  }

  void dfs(int depth) {
    ++nodes_;
    if (budget_exceeded()) {
      abandoned_min_ = std::min(
          abandoned_min_, static_cast<int>(chosen_.size()) + cheap_bound());
      return;
    }

    if (m_uncov_ == 0) {
      best_witness_ = chosen_;
      std::sort(best_witness_.begin(), best_witness_.end());
      upper_ = static_cast<int>(best_witness_.size());
      cutoff_ = std::min(cutoff_, upper_);
      return;
    }

    const int chosen = static_cast<int>(chosen_.size());
    const int allowed = cutoff_ - 1 - chosen;  // extra vertices we may add
    if (allowed < 1) return;
    if (cheap_bound() > allowed) return;
    if (allowed <= kPackingHorizon && packing_bound(allowed) > allowed) return;
    if (allowed <= kCountingHorizon && m_uncov_ <= kCountingEdgeCap &&
        counting_bound(allowed) > allowed)
      return;

    // branch edge: minimum effective size among uncovered edges
    int s = 0;
    while (s <= max_size_ && bucket_head_[s] == -1) ++s;
    if (s > max_size_) return;  // inconsistent; treated as dead
    if (s == 0) return;         // an uncovered edge lost all members
    const int edge = bucket_head_[s];

    if (s == 1) {
      // unit edge: its single remaining member is forced
      int forced = -1;
      for (int v : branch_members_[edge])
        if (!excluded_.test(v)) {
          forced = v;
          break;
        }
      std::size_t mark = log_.size();
      include_vertex(forced);
      dfs(depth + 1);
      rollback(mark);
      return;
    }

    std::size_t loop_mark = log_.size();
    for (int v : branch_members_[edge]) {
      if (excluded_.test(v)) continue;
      std::size_t mark = log_.size();
      include_vertex(v);
      dfs(depth + 1);
      rollback(mark);
      if (out_of_budget_) {
        // siblings are abandoned; account for them once
        abandoned_min_ = std::min(
            abandoned_min_, static_cast<int>(chosen_.size()) + cheap_bound());
        break;
      }
      exclude_vertex(v);
      if (static_cast<int>(chosen_.size()) + cheap_bound() > cutoff_ - 1) break;
    }
    rollback(loop_mark);
  }

  static constexpr int kPackingHorizon = 10;
  static constexpr int kCountingHorizon = 5;
  static constexpr int kCountingEdgeCap = 1024;

  const CoverInstance& inst_;
  SolveBudget budget_;
  std::optional<int> initial_upper_;

  std::vector<bool> active_;
  std::vector<int> edge_ids_;
  std::vector<std::vector<int>> vertex_edges_;
  std::vector<std::vector<int>> branch_members_;
  std::vector<int> static_degree_;
  int max_static_degree_ = 1;
  int max_size_ = 0;
  int word_count_ = 0;

  std::vector<int> eff_size_;
  std::vector<char> alive_;
  std::vector<int> bucket_head_, nxt_, prv_;
  int m_uncov_ = 0;
  Bitset excluded_;
  std::vector<char> chosen_mark_;
  std::vector<int> chosen_;
  std::vector<LogEntry> log_;

  std::vector<std::uint64_t> scratch_used_;
  std::vector<int> scratch_deg_;
  std::vector<int> touched_;
  std::vector<int> degs_;

  std::vector<int> best_witness_;
  int upper_ = 0;
  int cutoff_ = 0;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  int abandoned_min_ = std::numeric_limits<int>::max();
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace

SolveOutcome exact_min_hitting_set(const CoverInstance& inst, SolveBudget budget,
                                   std::optional<int> initial_upper) {
  if (budget.wall_seconds <= 0 || budget.max_nodes == 0)
    throw std::invalid_argument("solve budget must be positive");
  require_no_empty_edge(inst);

  if (inst.edges.empty()) {
    SolveOutcome out;
    out.status = SolveStatus::Optimal;
    out.upper = out.lower = 0;
    return out;
  }

  HittingSetSearch search(inst, budget, initial_upper);
  SolveOutcome out = search.run();
  if (!inst.hits_all(out.witness))
    throw std::logic_error("solver returned a non-hitting witness");
  return out;
}

}  // namespace mobius
