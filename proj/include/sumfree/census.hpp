#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "sumfree/enumerate.hpp"
#include "sumfree/errors.hpp"
#include "sumfree/profile.hpp"
#include "sumfree/store.hpp"

namespace sumfree {

struct CensusOptions {
  unsigned workers = 1;
  /// -1 picks a depth from the worker count.
  int split_depth = -1;
  std::uint64_t node_budget = default_node_budget;
  std::size_t witness_cap = 8;
};

/// Prefix depth used when the caller does not pin one: none for a single
/// worker, otherwise enough prefixes to keep every worker busy.
inline int default_split_depth(int n, unsigned workers) {
  if (workers <= 1) return 0;
  return std::min(n, 10);
}

/// One count-mode search for (n, rule), packaged as a record.
inline CensusRecord census_one(int n, const ProfileRule& rule, const CensusOptions& opt = {}) {
  EnumTask task;
  task.n = n;
  task.profile = rule.at(n);
  task.mode = EnumMode::count;
  task.workers = opt.workers;
  task.parallel_split_depth = opt.split_depth >= 0 ? std::min(opt.split_depth, n)
                                                   : default_split_depth(n, opt.workers);
  task.node_budget = opt.node_budget;
  task.witness_cap = opt.witness_cap;

  const auto start = std::chrono::steady_clock::now();
  EnumResult r = run_enumeration(task);
  const auto elapsed = std::chrono::steady_clock::now() - start;

  CensusRecord rec;
  rec.n = n;
  rec.profile_id = rule.id;
  rec.count = r.count;
  rec.max_size = r.max_size;
  rec.num_max_witnesses = r.num_max_witnesses;
  rec.sample_witnesses = std::move(r.witnesses);
  rec.engine_version = std::string(engine_version);
  rec.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return rec;
}

/// Census over n in [n_lo, n_hi] (empty when n_lo > n_hi).
///
/// With a store, each record is compared with the latest stored record for
/// the same (n, profile_id): a difference throws CensusMismatch, a new
/// (n, profile_id) is appended, an identical one is left alone.
inline std::vector<CensusRecord> census(int n_lo, int n_hi, const ProfileRule& rule,
                                        ResultsStore* store, const CensusOptions& opt = {}) {
  std::vector<CensusRecord> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    CensusRecord rec = census_one(n, rule, opt);
    if (store != nullptr) {
      if (auto prev = store->find_census(n, rule.id)) {
        if (!prev->same_result(rec))
          throw CensusMismatch("census mismatch for n=" + std::to_string(n) + " profile " +
                               rule.id + ": stored count " + std::to_string(prev->count) +
                               " max " + std::to_string(prev->max_size) + ", recomputed count " +
                               std::to_string(rec.count) + " max " +
                               std::to_string(rec.max_size));
      } else {
        store->append_record(rec);
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace sumfree
