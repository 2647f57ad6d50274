#pragma once

/**
 * @file enumerate.hpp
 * @brief Pruned search over all A ⊆ [1, n] satisfying a ConstraintProfile.
 *
 * Every profile is hereditary (a subset of an admissible set is admissible),
 * so the search walks the inclusion tree of admissible sets only: a node is
 * an admissible S, and its children are S ∪ {c} for admissible extensions
 * by c < min(S). Candidates are tried from n downward. A candidate rejected
 * at S stays rejected in the whole subtree of S, so each node passes its
 * surviving candidate list down.
 *
 * Visiting order (list mode, and the order of witness samples): pre-order of
 * that tree, larger candidates first. Written as descending sequences, sets
 * are compared element by element, a larger element sorts first, and a
 * proper prefix sorts before its extensions. For n = 3 with no constraint:
 *   {}, {3}, {3,2}, {3,2,1}, {3,1}, {2}, {2,1}, {1}.
 *
 * Per-node state is incremental:
 *  - sum-free: the set of c that would close a Schur triple with the chosen
 *    elements (all chosen elements exceed c, so that is {y - x} ∪ {x / 2});
 *  - sigma layers: reachability bits of ΣS over [0, F];
 *  - k layers: jS ∩ [0, F] for j = 0..max k.
 * Both forbidden-sum tests for a candidate c are plain bit probes of
 * F - i·c against the parent's layers.
 *
 * Parallel runs fix include/exclude decisions for the top `split_depth`
 * elements and search each of the 2^depth prefixes independently; counts
 * add, maxima take the max, witness samples are merged in visiting order.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "sumfree/bits.hpp"
#include "sumfree/errors.hpp"
#include "sumfree/int_set.hpp"
#include "sumfree/parallel.hpp"
#include "sumfree/profile.hpp"

namespace sumfree {

inline constexpr std::string_view engine_version = "sumfree-engine/1";
inline constexpr std::uint64_t default_node_budget = 1'000'000'000ULL;
inline constexpr int max_engine_n = 62;

enum class EnumMode { count, max, list };

struct EnumTask {
  int n = 1;
  ConstraintProfile profile;
  EnumMode mode = EnumMode::count;
  int parallel_split_depth = 0;
  unsigned workers = 1;
  std::uint64_t node_budget = default_node_budget;
  /// Upper bound on stored maximum witnesses (the count of them is exact).
  std::size_t witness_cap = 64;
};

struct EnumResult {
  /// Number of admissible sets, the empty set included. Count mode only.
  std::uint64_t count = 0;
  int max_size = 0;
  std::uint64_t num_max_witnesses = 0;
  /// First `witness_cap` maximum sets in visiting order.
  std::vector<IntSet> witnesses;
  std::uint64_t nodes = 0;
};

struct StreamSummary {
  std::uint64_t visited = 0;
  /// False when the sink asked to stop early.
  bool completed = true;
};

using SetSink = std::function<bool(const IntSet&)>;

/// Visiting-order comparison (see file comment). Both sets must be finite
/// subsets of the same [1, n].
inline bool visit_order_less(const IntSet& a, const IntSet& b) {
  std::vector<int> x = a.members(), y = b.members();
  std::reverse(x.begin(), x.end());
  std::reverse(y.begin(), y.end());
  const std::size_t m = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < m; ++i)
    if (x[i] != y[i]) return x[i] > y[i];
  return x.size() < y.size();
}

namespace detail {

class Search {
 public:
  struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<int> best{-1};
    std::uint64_t budget = default_node_budget;
  };

  Search(const EnumTask& task, Shared& shared, const SetSink* sink)
      : task_(task), profile_(task.profile), shared_(shared), sink_(sink),
        n_(task.n), target_(profile_.forbidden_sum) {
    const auto ground = static_cast<std::size_t>(n_) + 1;
    const auto sums = static_cast<std::size_t>(target_) + 1;
    chosen_bits_ = Bits(ground);
    frames_.resize(static_cast<std::size_t>(n_) + 2);
    for (auto& f : frames_) {
      if (profile_.require_sum_free) f.blocked = Bits(ground);
      if (profile_.layers == Layers::sigma) {
        f.reach = Bits(sums);
      } else {
        f.layer.assign(static_cast<std::size_t>(profile_.max_layer()) + 1, Bits(sums));
      }
      f.viable.reserve(static_cast<std::size_t>(n_));
    }
    chosen_.reserve(static_cast<std::size_t>(n_));
  }

  /// Searches all admissible sets whose intersection with (pool_hi, n] is
  /// exactly `prefix` (given in descending order). Returns this part's tally.
  EnumResult run(const std::vector<int>& prefix, int pool_hi) {
    Frame& root = frames_[0];
    if (profile_.require_sum_free) root.blocked.clear();
    if (profile_.layers == Layers::sigma) {
      root.reach.clear();
      root.reach.set(0);
    } else {
      for (auto& l : root.layer) l.clear();
      root.layer[0].set(0);
    }
    std::size_t depth = 0;
    for (int p : prefix) {
      tick();
      if (!can_add(frames_[depth], p)) {
        flush();
        return std::move(result_);
      }
      push(frames_[depth], frames_[depth + 1], p);
      ++depth;
    }
    Frame& top = frames_[depth];
    if (target_reached(top)) {  // only possible for the empty set, e.g. 0 ∈ Σ∅
      flush();
      return std::move(result_);
    }
    top.viable.clear();
    for (int c = pool_hi; c >= 1; --c) {
      tick();
      if (can_add(top, c)) top.viable.push_back(c);
    }
    expand(depth);
    flush();
    result_.max_size = best_;
    return std::move(result_);
  }

  bool aborted() const { return aborted_; }

 private:
  struct Frame {
    Bits blocked;
    Bits reach;
    std::vector<Bits> layer;
    std::vector<int> viable;  // descending
  };

  bool can_add(const Frame& f, int c) const {
    if (profile_.require_sum_free && f.blocked.test(static_cast<std::size_t>(c))) return false;
    if (profile_.layers == Layers::sigma) {
      for (int v = target_ - c; v >= 0; v -= c)
        if (f.reach.test(static_cast<std::size_t>(v))) return false;
      return true;
    }
    for (int k : profile_.ks)
      for (int i = 1; i <= k; ++i) {
        const int v = target_ - i * c;
        if (v < 0) break;
        if (f.layer[static_cast<std::size_t>(k - i)].test(static_cast<std::size_t>(v))) return false;
      }
    return true;
  }

  bool target_reached(const Frame& f) const {
    const auto t = static_cast<std::size_t>(target_);
    if (profile_.layers == Layers::sigma) return f.reach.test(t);
    for (int k : profile_.ks)
      if (f.layer[static_cast<std::size_t>(k)].test(t)) return true;
    return false;
  }

  /// child := parent extended by c (c below every chosen element).
  void push(const Frame& parent, Frame& child, int c) {
    const auto uc = static_cast<std::size_t>(c);
    if (profile_.require_sum_free) {
      child.blocked.assign(parent.blocked);
      child.blocked.or_shifted_down(chosen_bits_, uc);  // y - c for chosen y
      if (c % 2 == 0) child.blocked.set(uc / 2);
    }
    if (profile_.layers == Layers::sigma) {
      child.reach.assign(parent.reach);
      for (std::size_t s = uc; s <= static_cast<std::size_t>(target_); s *= 2)
        child.reach.or_shifted_up(child.reach, s);
    } else {
      child.layer[0].assign(parent.layer[0]);
      for (std::size_t j = 1; j < child.layer.size(); ++j) {
        child.layer[j].assign(parent.layer[j]);
        child.layer[j].or_shifted_up(child.layer[j - 1], uc);
      }
    }
    chosen_bits_.set(uc);
    chosen_.push_back(c);
  }

  void pop() {
    chosen_bits_.reset(static_cast<std::size_t>(chosen_.back()));
    chosen_.pop_back();
  }

  int effective_best() const {
    return std::max(best_, shared_.best.load(std::memory_order_relaxed));
  }

  void visit() {
    tick();
    const int size = static_cast<int>(chosen_.size());
    ++result_.count;
    if (size > best_) {
      best_ = size;
      result_.num_max_witnesses = 0;
      result_.witnesses.clear();
      if (task_.mode == EnumMode::max) {
        int seen = shared_.best.load(std::memory_order_relaxed);
        while (seen < size && !shared_.best.compare_exchange_weak(seen, size)) {
        }
      }
    }
    if (size == best_) {
      ++result_.num_max_witnesses;
      if (result_.witnesses.size() < task_.witness_cap) result_.witnesses.push_back(current());
    }
    if (sink_ != nullptr && !(*sink_)(current())) aborted_ = true;
  }

  IntSet current() const {
    IntSet s(1, n_);
    for (int x : chosen_) s.insert(x);
    return s;
  }

  void expand(std::size_t depth) {
    visit();
    if (aborted_) return;
    Frame& f = frames_[depth];
    const std::size_t m = f.viable.size();
    for (std::size_t idx = 0; idx < m; ++idx) {
      const std::size_t remaining = m - idx - 1;
      if (task_.mode == EnumMode::max &&
          static_cast<int>(depth + 1 + remaining) < effective_best())
        break;
      const int c = f.viable[idx];
      Frame& child = frames_[depth + 1];
      push(f, child, c);
      child.viable.clear();
      for (std::size_t j = idx + 1; j < m; ++j) {
        tick();
        if (can_add(child, f.viable[j])) child.viable.push_back(f.viable[j]);
      }
      expand(depth + 1);
      pop();
      if (aborted_) return;
    }
  }

  void tick() {
    if (++local_nodes_ >= flush_every) flush();
  }

  void flush() {
    const std::uint64_t total = shared_.nodes.fetch_add(local_nodes_) + local_nodes_;
    result_.nodes += local_nodes_;
    local_nodes_ = 0;
    if (total > shared_.budget) throw BudgetExceeded(shared_.budget);
  }

  static constexpr std::uint64_t flush_every = 1U << 12;

  const EnumTask& task_;
  const ConstraintProfile& profile_;
  Shared& shared_;
  const SetSink* sink_;
  const int n_;
  const int target_;

  Bits chosen_bits_;
  std::vector<int> chosen_;
  std::vector<Frame> frames_;
  EnumResult result_;
  int best_ = -1;
  std::uint64_t local_nodes_ = 0;
  bool aborted_ = false;
};

inline void validate(const EnumTask& task) {
  if (task.n < 0) throw PreconditionError("n must be >= 0");
  if (task.n > max_engine_n)
    throw PreconditionError("n above " + std::to_string(max_engine_n) +
                            " does not fit the 64-bit counters");
  if (task.parallel_split_depth < 0 || task.parallel_split_depth > task.n)
    throw PreconditionError("parallel_split_depth must lie in [0, n]");
  if (task.parallel_split_depth > 24) throw PreconditionError("parallel_split_depth above 24");
  if (task.profile.forbidden_sum < 0) throw PreconditionError("forbidden sum must be >= 0");
}

inline EnumResult run_search(const EnumTask& task, const SetSink* sink, StreamSummary* summary) {
  validate(task);
  Search::Shared shared;
  shared.budget = task.node_budget;

  if (sink != nullptr || task.parallel_split_depth == 0) {
    Search search(task, shared, sink);
    EnumResult r = search.run({}, task.n);
    if (summary != nullptr) {
      summary->visited = r.count;
      summary->completed = !search.aborted();
    }
    return r;
  }

  const int depth = task.parallel_split_depth;
  const std::size_t tasks = std::size_t{1} << depth;
  std::vector<EnumResult> parts(tasks);
  parallel_for(tasks, task.workers, [&](std::size_t mask) {
    std::vector<int> prefix;
    for (int i = 0; i < depth; ++i)
      if (mask >> i & 1U) prefix.push_back(task.n - i);
    Search search(task, shared, nullptr);
    parts[mask] = search.run(prefix, task.n - depth);
  });

  EnumResult out;
  out.max_size = -1;
  for (const auto& p : parts) {
    out.count += p.count;
    out.nodes += p.nodes;
    if (p.count > 0) out.max_size = std::max(out.max_size, p.max_size);
  }
  for (auto& p : parts) {
    if (p.count == 0 || p.max_size != out.max_size) continue;
    out.num_max_witnesses += p.num_max_witnesses;
    for (auto& w : p.witnesses) out.witnesses.push_back(std::move(w));
  }
  std::sort(out.witnesses.begin(), out.witnesses.end(), visit_order_less);
  if (out.witnesses.size() > task.witness_cap) out.witnesses.resize(task.witness_cap);
  return out;
}

}  // namespace detail

/// Task with a prefix split sized for `workers` (none for a single worker).
inline EnumTask make_task(int n, ConstraintProfile profile, EnumMode mode, unsigned workers = 1) {
  EnumTask task;
  task.n = n;
  task.profile = std::move(profile);
  task.mode = mode;
  task.workers = workers;
  task.parallel_split_depth = workers > 1 ? std::min(n, 10) : 0;
  return task;
}

/// Full search in count mode: the count of admissible sets plus the maximum
/// size, the exact number of maximum sets and a sample of them.
inline EnumResult run_enumeration(EnumTask task) {
  if (task.mode == EnumMode::list) throw PreconditionError("list mode needs a sink");
  return detail::run_search(task, nullptr, nullptr);
}

/// Number of admissible subsets of [1, n], the empty set included.
/// Throws BudgetExceeded rather than returning a partial count.
inline std::uint64_t count_admissible(const EnumTask& task) {
  if (task.mode != EnumMode::count) throw PreconditionError("count_admissible needs mode = count");
  return detail::run_search(task, nullptr, nullptr).count;
}

struct MaxResult {
  int size = 0;
  std::uint64_t num_witnesses = 0;
  std::vector<IntSet> witnesses;
};

/// Maximum cardinality of an admissible set and the maximum witnesses.
inline MaxResult max_admissible(const EnumTask& task) {
  if (task.mode != EnumMode::max) throw PreconditionError("max_admissible needs mode = max");
  EnumResult r = detail::run_search(task, nullptr, nullptr);
  return MaxResult{r.max_size, r.num_max_witnesses, std::move(r.witnesses)};
}

/// Streams every admissible set, in visiting order, to `sink` on the calling
/// thread. The sink returns false to stop; the summary then reports
/// completed = false.
inline StreamSummary enumerate_admissible(const EnumTask& task, const SetSink& sink) {
  if (task.mode != EnumMode::list) throw PreconditionError("enumerate_admissible needs mode = list");
  StreamSummary summary;
  detail::run_search(task, &sink, &summary);
  return summary;
}

}  // namespace sumfree
