#pragma once

/**
 * @file store.hpp
 * @brief Append-only JSON-lines results store and the record types it holds.
 *
 * One JSON object per line, each carrying `"schema": 1` and a `"kind"`:
 *   census  — {n, profile_id, count, max_size, num_max_witnesses,
 *              sample_witnesses, engine_version, wall_time_ms}
 *   special — {t, count_with_zero, count_all}
 *   zp      — {p, s, count, in_theorem_range, representatives}
 * Unknown kinds are preserved by read_all() and ignored by the typed readers.
 */

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumfree/errors.hpp"
#include "sumfree/int_set.hpp"

namespace sumfree {

inline constexpr int store_schema = 1;
inline constexpr const char* store_env_var = "SUMFREE_STORE";
inline constexpr const char* default_store_path = "sumfree-results.jsonl";

struct CensusRecord {
  int n = 0;
  std::string profile_id;
  std::uint64_t count = 0;
  int max_size = 0;
  std::uint64_t num_max_witnesses = 0;
  std::vector<IntSet> sample_witnesses;
  std::string engine_version;
  std::int64_t wall_time_ms = 0;

  /// Equal up to wall time.
  bool same_result(const CensusRecord& o) const {
    return n == o.n && profile_id == o.profile_id && count == o.count &&
           max_size == o.max_size && num_max_witnesses == o.num_max_witnesses &&
           sample_witnesses == o.sample_witnesses;
  }
};

struct SpecialRecord {
  int t = 0;
  std::uint64_t count_with_zero = 0;
  std::uint64_t count_all = 0;
};

struct ZpRecord {
  int p = 0;
  int s = 0;
  std::uint64_t count = 0;
  bool in_theorem_range = false;
  std::vector<std::vector<int>> representatives;
};

inline void to_json(nlohmann::json& j, const CensusRecord& r) {
  j = nlohmann::json{{"schema", store_schema},
                     {"kind", "census"},
                     {"n", r.n},
                     {"profile_id", r.profile_id},
                     {"count", r.count},
                     {"max_size", r.max_size},
                     {"num_max_witnesses", r.num_max_witnesses},
                     {"sample_witnesses", r.sample_witnesses},
                     {"engine_version", r.engine_version},
                     {"wall_time_ms", r.wall_time_ms}};
}

inline void from_json(const nlohmann::json& j, CensusRecord& r) {
  r.n = j.at("n").get<int>();
  r.profile_id = j.at("profile_id").get<std::string>();
  r.count = j.at("count").get<std::uint64_t>();
  r.max_size = j.at("max_size").get<int>();
  r.num_max_witnesses = j.at("num_max_witnesses").get<std::uint64_t>();
  r.sample_witnesses = j.at("sample_witnesses").get<std::vector<IntSet>>();
  r.engine_version = j.at("engine_version").get<std::string>();
  r.wall_time_ms = j.at("wall_time_ms").get<std::int64_t>();
}

inline void to_json(nlohmann::json& j, const SpecialRecord& r) {
  j = nlohmann::json{{"schema", store_schema}, {"kind", "special"}, {"t", r.t},
                     {"count_with_zero", r.count_with_zero}, {"count_all", r.count_all}};
}

inline void from_json(const nlohmann::json& j, SpecialRecord& r) {
  r.t = j.at("t").get<int>();
  r.count_with_zero = j.at("count_with_zero").get<std::uint64_t>();
  r.count_all = j.at("count_all").get<std::uint64_t>();
}

inline void to_json(nlohmann::json& j, const ZpRecord& r) {
  j = nlohmann::json{{"schema", store_schema},       {"kind", "zp"},
                     {"p", r.p},                     {"s", r.s},
                     {"count", r.count},             {"in_theorem_range", r.in_theorem_range},
                     {"representatives", r.representatives}};
}

inline void from_json(const nlohmann::json& j, ZpRecord& r) {
  r.p = j.at("p").get<int>();
  r.s = j.at("s").get<int>();
  r.count = j.at("count").get<std::uint64_t>();
  r.in_theorem_range = j.at("in_theorem_range").get<bool>();
  r.representatives = j.at("representatives").get<std::vector<std::vector<int>>>();
}

/// Store path: the explicit argument if non-empty, else $SUMFREE_STORE,
/// else ./sumfree-results.jsonl.
inline std::filesystem::path resolve_store_path(const std::string& explicit_path = {}) {
  if (!explicit_path.empty()) return explicit_path;
  if (const char* env = std::getenv(store_env_var); env != nullptr && *env != '\0') return env;
  return default_store_path;
}

class ResultsStore {
 public:
  explicit ResultsStore(std::filesystem::path path) : path_(std::move(path)) {}

  const std::filesystem::path& path() const { return path_; }

  /// Every line, in file order. A missing file reads as empty.
  std::vector<nlohmann::json> read_all() const {
    std::vector<nlohmann::json> out;
    std::ifstream in(path_);
    if (!in) {
      if (std::filesystem::exists(path_)) throw StoreError("cannot open " + path_.string());
      return out;
    }
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error& e) {
        throw StoreError(path_.string() + ":" + std::to_string(lineno) + ": " + e.what());
      }
      if (!j.is_object() || j.value("schema", 0) != store_schema)
        throw StoreError(path_.string() + ":" + std::to_string(lineno) +
                         ": unsupported schema (expected " + std::to_string(store_schema) + ")");
      out.push_back(std::move(j));
    }
    return out;
  }

  template <class Record>
  std::vector<Record> read_kind(const std::string& kind) const {
    std::vector<Record> out;
    for (const auto& j : read_all())
      if (j.value("kind", "") == kind) out.push_back(j.get<Record>());
    return out;
  }

  std::vector<CensusRecord> census_records() const { return read_kind<CensusRecord>("census"); }
  std::vector<SpecialRecord> special_records() const { return read_kind<SpecialRecord>("special"); }
  std::vector<ZpRecord> zp_records() const { return read_kind<ZpRecord>("zp"); }

  /// Most recent census record for (n, profile_id), if any.
  std::optional<CensusRecord> find_census(int n, const std::string& profile_id) const {
    std::optional<CensusRecord> found;
    for (auto& r : census_records())
      if (r.n == n && r.profile_id == profile_id) found = std::move(r);
    return found;
  }

  void append(const nlohmann::json& record) {
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    std::ofstream out(path_, std::ios::app);
    if (!out) throw StoreError("cannot open " + path_.string() + " for appending");
    out << record.dump() << '\n';
    if (!out) throw StoreError("write to " + path_.string() + " failed");
  }

  template <class Record>
  void append_record(const Record& r) {
    append(nlohmann::json(r));
  }

 private:
  std::filesystem::path path_;
};

/// CSV with header row: n,profile_id,count,max_size
inline void write_census_csv(std::ostream& os, const std::vector<CensusRecord>& records) {
  os << "n,profile_id,count,max_size\n";
  for (const auto& r : records)
    os << r.n << ',' << r.profile_id << ',' << r.count << ',' << r.max_size << '\n';
}

}  // namespace sumfree
