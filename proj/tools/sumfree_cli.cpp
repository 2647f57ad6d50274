// sumfree: counting, extremal search, structure checks and Z_p census.
//
// Exit codes: 0 pass, 1 verification failure or store mismatch, 2 usage,
// 3 node budget exceeded.

#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumfree/sumfree.hpp"

namespace {

using namespace sumfree;
using Json = nlohmann::json;

enum class Format { json, csv, table };

struct RunConfig {
  unsigned workers = 1;
  std::uint64_t node_budget = default_node_budget;
  std::string format = "table";
  std::string store;
  bool store_given() const { return !store.empty() || std::getenv(store_env_var) != nullptr; }
  Format fmt() const {
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    return Format::table;
  }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

EnumTask task_for(const RunConfig& cfg, int n, const std::string& profile, EnumMode mode) {
  EnumTask task = make_task(n, find_profile(profile).at(n), mode, cfg.workers);
  task.node_budget = cfg.node_budget;
  return task;
}

std::pair<int, int> parse_range(const std::string& s) {
  static const std::regex re(R"(^\s*(\d+)\s*\.\.\s*(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw UsageError("--range expects a..b, got '" + s + "'");
  return {std::stoi(m[1]), std::stoi(m[2])};
}

int cmd_count(const RunConfig& cfg, int n, const std::string& profile) {
  const std::uint64_t c = count_admissible(task_for(cfg, n, profile, EnumMode::count));
  switch (cfg.fmt()) {
    case Format::json:
      std::cout << Json{{"n", n}, {"profile_id", profile}, {"count", c}}.dump() << '\n';
      break;
    case Format::csv:
      std::cout << "n,profile_id,count\n" << n << ',' << profile << ',' << c << '\n';
      break;
    case Format::table:
      std::cout << c << '\n';
  }
  return 0;
}

int cmd_max(const RunConfig& cfg, int n, const std::string& profile) {
  const MaxResult m = max_admissible(task_for(cfg, n, profile, EnumMode::max));
  switch (cfg.fmt()) {
    case Format::json:
      std::cout << Json{{"n", n},
                        {"profile_id", profile},
                        {"max_size", m.size},
                        {"num_max_witnesses", m.num_witnesses},
                        {"witnesses", m.witnesses}}
                       .dump()
                << '\n';
      break;
    case Format::csv:
      std::cout << "n,profile_id,max_size,num_max_witnesses\n"
                << n << ',' << profile << ',' << m.size << ',' << m.num_witnesses << '\n';
      break;
    case Format::table:
      std::cout << m.size << '\n';
      std::cout << "witnesses: " << m.num_witnesses << '\n';
      for (const auto& w : m.witnesses) std::cout << "  " << w.to_string() << '\n';
  }
  return 0;
}

int cmd_census(const RunConfig& cfg, const std::string& range, const std::string& profile) {
  const auto [lo, hi] = parse_range(range);
  ResultsStore store(resolve_store_path(cfg.store));
  CensusOptions opt;
  opt.workers = cfg.workers;
  opt.node_budget = cfg.node_budget;
  const auto records = census(lo, hi, find_profile(profile), &store, opt);
  switch (cfg.fmt()) {
    case Format::json:
      for (const auto& r : records) std::cout << Json(r).dump() << '\n';
      break;
    case Format::csv:
      write_census_csv(std::cout, records);
      break;
    case Format::table:
      std::cout << "profile " << profile << "  store " << store.path().string() << '\n';
      std::cout << "   n        count  max  #max\n";
      for (const auto& r : records) {
        char line[96];
        std::snprintf(line, sizeof line, "%4d %12llu %4d %5llu\n", r.n,
                      static_cast<unsigned long long>(r.count), r.max_size,
                      static_cast<unsigned long long>(r.num_max_witnesses));
        std::cout << line;
      }
  }
  return 0;
}

int cmd_list(const RunConfig& cfg, int n, const std::string& profile, std::uint64_t limit) {
  std::uint64_t emitted = 0;
  const bool as_json = cfg.fmt() == Format::json;
  const StreamSummary s = enumerate_admissible(task_for(cfg, n, profile, EnumMode::list),
                                               [&](const IntSet& a) {
                                                 if (as_json) std::cout << Json(a.members()).dump() << '\n';
                                                 else std::cout << a.to_string() << '\n';
                                                 return limit == 0 || ++emitted < limit;
                                               });
  if (!as_json) std::cerr << s.visited << " sets" << (s.completed ? "" : " (stopped at --limit)") << '\n';
  return 0;
}

int cmd_special(const RunConfig& cfg, int t, bool require_zero) {
  const auto sets = enumerate_t_special(t, require_zero, cfg.workers);
  const auto with_zero = require_zero ? sets : enumerate_t_special(t, true, cfg.workers);
  const auto all = require_zero ? enumerate_t_special(t, false, cfg.workers) : sets;
  const auto closed = enumerate_closed(t - 1, cfg.workers);

  bool bijection = with_zero.size() == closed.size();
  for (const auto& T : with_zero)
    if (!(inverse_g(bijection_g(T), t).members == T.members)) bijection = false;

  if (cfg.store_given()) {
    ResultsStore store(resolve_store_path(cfg.store));
    store.append_record(SpecialRecord{t, with_zero.size(), all.size()});
  }
  switch (cfg.fmt()) {
    case Format::json: {
      Json sj = Json::array();
      for (const auto& T : sets) sj.push_back(T.members.members());
      std::cout << Json{{"t", t},
                        {"require_zero", require_zero},
                        {"count", sets.size()},
                        {"count_with_zero", with_zero.size()},
                        {"count_all", all.size()},
                        {"closed_count", closed.size()},
                        {"bijection_verified", bijection},
                        {"sets", sj}}
                       .dump()
                << '\n';
      break;
    }
    case Format::csv:
      std::cout << "t,require_zero,count,count_with_zero,count_all,closed_count,bijection_verified\n"
                << t << ',' << require_zero << ',' << sets.size() << ',' << with_zero.size() << ','
                << all.size() << ',' << closed.size() << ',' << bijection << '\n';
      break;
    case Format::table:
      std::cout << sets.size() << (sets.size() == 1 ? " set" : " sets") << '\n';
      for (const auto& T : sets) std::cout << "  " << T.members.to_string() << '\n';
      std::cout << "|T_" << t << "| = " << with_zero.size() << ", |A_" << t - 1
                << "| = " << closed.size() << ", bijection " << (bijection ? "verified" : "FAILED")
                << '\n';
  }
  return bijection ? 0 : 1;
}

int cmd_zp(const RunConfig& cfg, int p, std::optional<int> s, int limit) {
  const auto rows = census_scsf(p, s, cfg.workers, limit);
  struct Cross {
    int s;
    StCrossCheck x;
    bool in_range;
  };
  std::vector<Cross> crosses;
  bool ok = true;
  for (const auto& row : rows) {
    const int k = row.size;
    if (k % 2 != 0 || 4 * k < p + 3 || 3 * k > p - 1) continue;
    Cross c{k, st_cross_check(p, k, cfg.workers, limit), row.in_theorem_range};
    // Outside the theorem range the correspondence is reported, not asserted.
    if (c.in_range && !c.x.passed()) ok = false;
    crosses.push_back(c);
  }

  if (cfg.store_given()) {
    ResultsStore store(resolve_store_path(cfg.store));
    for (const auto& row : rows)
      store.append_record(ZpRecord{p, row.size, row.count, row.in_theorem_range, row.representatives});
  }

  switch (cfg.fmt()) {
    case Format::json:
      for (const auto& row : rows)
        std::cout << Json(ZpRecord{p, row.size, row.count, row.in_theorem_range, row.representatives})
                         .dump()
                  << '\n';
      for (const auto& c : crosses)
        std::cout << Json{{"kind", "zp_cross_check"},
                          {"p", p},
                          {"s", c.s},
                          {"t", c.x.params.t},
                          {"census_count", c.x.census_count},
                          {"special_count", c.x.special_count},
                          {"members_match", c.x.members_match},
                          {"gap_matches", c.x.gap_matches},
                          {"s_members_from_zero_t", c.x.s_members_from_zero_t},
                          {"in_theorem_range", c.in_range}}
                         .dump()
                  << '\n';
      break;
    case Format::csv:
      std::cout << "p,size,count,in_theorem_range,orbits\n";
      for (const auto& row : rows)
        std::cout << p << ',' << row.size << ',' << row.count << ',' << row.in_theorem_range << ','
                  << row.representatives.size() << '\n';
      break;
    case Format::table:
      std::cout << "Z_" << p << " symmetric complete sum-free sets\n";
      for (const auto& row : rows) {
        std::cout << "  size " << row.size << ": count " << row.count << ", "
                  << row.representatives.size() << " dilation orbit(s)"
                  << (row.in_theorem_range ? ", in theorem range" : "") << '\n';
        for (const auto& r : row.representatives) {
          std::cout << "    {";
          for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << r[i];
          std::cout << "}\n";
        }
      }
      for (const auto& c : crosses)
        std::cout << "  S_T check s=" << c.s << " t=" << c.x.params.t << ": " << c.x.census_count
                  << " = " << (p - 1) / 2 << " x " << c.x.special_count << " "
                  << (c.x.passed() ? "PASS" : (c.in_range ? "FAIL" : "differs (outside range)"))
                  << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, int n_max, int t_max) {
  const VerifyReport rep = run_verification({n_max, t_max, cfg.workers});
  if (cfg.fmt() == Format::json) {
    Json checks = Json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    std::cout << Json{{"passed", rep.passed()}, {"checks", checks}}.dump() << '\n';
  } else {
    for (const auto& c : rep.checks)
      std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name
                << (c.detail.empty() ? "" : "  [" + c.detail + "]") << '\n';
    std::cout << (rep.passed() ? "PASS" : "FAIL") << '\n';
  }
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sum-free sets with a forbidden sum: counts, extremal sets, structures, Z_p census"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--node-budget", cfg.node_budget, "Search node budget (exit 3 when exceeded)")
      ->check(CLI::PositiveNumber);
  app.add_option("--output-format", cfg.format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--store", cfg.store, std::string("Results store (default $") + store_env_var +
                                           ", then " + default_store_path + ")");

  std::vector<std::string> ids;
  for (const auto& r : profile_registry()) ids.push_back(r.id);
  const auto profile_check = CLI::IsMember(ids);

  int n = 0;
  std::string profile;
  std::string range;
  std::uint64_t limit = 0;
  int t = 1;
  bool require_zero = false;
  int p = 0;
  std::optional<int> s;
  int zp_limit = default_census_limit;
  int n_max = 16, t_max = 10;

  auto* count = app.add_subcommand("count", "Number of admissible subsets of [1, n]");
  auto* max = app.add_subcommand("max", "Largest admissible subsets of [1, n]");
  auto* list = app.add_subcommand("list", "Stream admissible subsets in visiting order");
  for (auto* sub : {count, max, list}) {
    sub->add_option("--n", n, "Ground set [1, n]")->required()->check(CLI::Range(0, max_engine_n));
    sub->add_option("--profile", profile, "Profile id")->required()->check(profile_check);
  }
  list->add_option("--limit", limit, "Stop after this many sets (0: all)");

  auto* census_cmd = app.add_subcommand("census", "Counts and maxima over a range of n, kept in the store");
  census_cmd->add_option("--range", range, "a..b")->required();
  census_cmd->add_option("--profile", profile, "Profile id")->required()->check(profile_check);

  auto* special = app.add_subcommand("special", "t-special sets and the bijection with A_{t-1}");
  special->add_option("--t", t, "t")->required()->check(CLI::Range(1, 20));
  special->add_flag("--require-zero", require_zero, "Only sets containing 0");

  auto* zp = app.add_subcommand("zp", "Symmetric complete sum-free subsets of Z_p");
  zp->add_option("--p", p, "Prime modulus")->required();
  zp->add_option("--s", s, "Only sets of this size");
  zp->add_option("--limit", zp_limit, "Largest p the census accepts")->check(CLI::Range(3, 61));

  auto* verify = app.add_subcommand("verify", "Run every oracle and invariant check");
  verify->add_option("--n-max", n_max, "Largest n for the [1, n] checks")->check(CLI::Range(1, 28));
  verify->add_option("--t-max", t_max, "Largest t for the t-special checks")->check(CLI::Range(1, 16));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*count) return cmd_count(cfg, n, profile);
    if (*max) return cmd_max(cfg, n, profile);
    if (*list) return cmd_list(cfg, n, profile, limit);
    if (*census_cmd) return cmd_census(cfg, range, profile);
    if (*special) return cmd_special(cfg, t, require_zero);
    if (*zp) return cmd_zp(cfg, p, s, zp_limit);
    if (*verify) return cmd_verify(cfg, n_max, t_max);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CensusMismatch& e) {
    std::cerr << "mismatch: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
