// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
//   acceptance [--workers W] [--store PATH]
//
// Criterion 12 reruns 1-8 with W workers (default 4) and compares every
// computed count with the single-worker run.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "sumfree/sumfree.hpp"

using namespace sumfree;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  std::vector<std::uint64_t> values;
};

Outcome from_checks(std::initializer_list<CheckOutcome> checks) {
  Outcome o;
  for (const auto& c : checks) {
    o.values.insert(o.values.end(), c.values.begin(), c.values.end());
    if (!c.passed) {
      o.passed = false;
      o.detail += (o.detail.empty() ? "" : "; ") + c.name + ": " + c.detail;
    }
  }
  if (o.passed)
    for (const auto& c : checks)
      if (!c.detail.empty()) o.detail += (o.detail.empty() ? "" : "; ") + c.detail;
  return o;
}

const CheckOutcome& named(const StructureReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::logic_error("missing check " + name);
}

Outcome crit1(unsigned w) { return from_checks({check_oracle_equivalence(20, w)}); }
Outcome crit2(unsigned w) { return from_checks({check_extremal_2n1(28, w)}); }
Outcome crit3(unsigned w) { return from_checks({check_lower_bound_family(28, w)}); }

Outcome crit4(unsigned w, ResultsStore* store) {
  Outcome o = from_checks({check_3a_construction(27, w)});
  if (store != nullptr) {
    CensusOptions opt;
    opt.workers = w;
    try {
      census(1, 27, find_profile("sf-3a-2n1"), store, opt);
    } catch (const CensusMismatch& e) {
      o.passed = false;
      o.detail = e.what();
    }
  }
  std::string maxima;
  for (std::size_t i = 0; i < o.values.size(); ++i)
    maxima += (i ? "," : "") + std::to_string(o.values[i]);
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("maxima n=1..27: ") + maxima;
  return o;
}

Outcome crit5(unsigned w) { return from_checks({check_extremal_2n(28, w)}); }

Outcome crit6(unsigned w) {
  const StructureReport r = verify_structures(0, 12, w);
  Outcome o = from_checks({named(r, "|T_t| = |A_{t-1}|"), named(r, "g and its inverse are mutually inverse")});
  std::string seq;
  for (int t = 1; t <= 12; ++t) seq += (t > 1 ? "," : "") + std::to_string(r.special_with_zero[static_cast<std::size_t>(t)]);
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("|T_t| t=1..12: ") + seq;
  return o;
}

Outcome crit7(unsigned w) {
  const StructureReport r = verify_structures(18, 0, w);
  Outcome o = from_checks({named(r, "f(A_n) ⊆ D_n"), named(r, "f injective on A_n"), named(r, "|A_n| <= |D_n|")});
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("|A_18|=") + std::to_string(r.closed_counts[18]) +
              " |D_18|=" + std::to_string(r.sumfree_counts[18]);
  return o;
}

Outcome crit8(unsigned w) {
  Outcome o = from_checks({check_zp_cross_check(31, 10, w)});
  const auto rows = census_scsf(31, 10, w);
  const std::uint64_t count = rows.at(0).count;
  o.values.push_back(count);
  if (count != 15) {
    o.passed = false;
    o.detail += "; size-10 count " + std::to_string(count) + " != 15";
  }
  const ZpSet s0 = build_S_T(PrimeParams::make(31, 10), IntSet(0, 1, {0}));
  const ZpSet c0 = canonical_form(s0);
  for (const auto& m : scsf_members(31, 10, w))
    if (m.contains(10) && !(canonical_form(m) == c0)) {
      o.passed = false;
      o.detail += "; member " + m.to_string() + " contains 10 but is not a dilation of S_{0}";
    }
  return o;
}

Outcome crit9(unsigned w) { return from_checks({check_freiman(30, 8, w)}); }
Outcome crit10() { return from_checks({check_sumset_bound(10'000), check_partition_bound(60, 10)}); }
Outcome crit11() { return from_checks({check_stability_bn(200), check_odd_block({15, 30, 45}, true)}); }

}  // namespace

int main(int argc, char** argv) {
  unsigned workers = 4;
  std::string store_path = "acceptance-results.jsonl";
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--workers") && i + 1 < argc) workers = static_cast<unsigned>(std::stoul(argv[++i]));
    else if (!std::strcmp(argv[i], "--store") && i + 1 < argc) store_path = argv[++i];
    else {
      std::fprintf(stderr, "usage: acceptance [--workers W] [--store PATH]\n");
      return 2;
    }
  }
  ResultsStore store(store_path);

  int failures = 0;
  auto report = [&](int id, const std::string& title, const std::function<Outcome()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.passed) ++failures;
    std::printf("%s  %2d  %s  (%.1fs)%s%s\n", o.passed ? "PASS" : "FAIL", id, title.c_str(), secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
    return o;
  };

  std::vector<Outcome> serial;
  serial.push_back(report(1, "engine count = naive count, 7 profiles, n <= 20", [] { return crit1(1); }));
  serial.push_back(report(2, "max = floor((n+1)/3), B_n a witness, sf-34a-2n1 and sf-sigma-2n1, n <= 28",
                          [] { return crit2(1); }));
  serial.push_back(report(3, "every subset of B_n admissible under sf-sigma-2n1, n <= 28", [] { return crit3(1); }));
  serial.push_back(report(4, "mod-5 construction, sf-3a-2n1 max >= ceil(2n/5) for n = 2 mod 5, n <= 27",
                          [&] { return crit4(1, &store); }));
  serial.push_back(report(5, "sf-sigma-2n max = floor((n-1)/3) with interval witness, n <= 28", [] { return crit5(1); }));
  serial.push_back(report(6, "|T_t with 0| = |A_{t-1}|, t <= 12", [] { return crit6(1); }));
  serial.push_back(report(7, "f injective into D_n, |A_n| <= |D_n|, n <= 18", [] { return crit7(1); }));
  serial.push_back(report(8, "Z_31 size-10 census = 15 x |1-special T|, member with 10 from T={0}",
                          [] { return crit8(1); }));
  report(9, "Freiman 3k-4, A ⊆ [1,30], 2 <= |A| <= 8", [&] { return crit9(workers); });
  report(10, "sumset lower bound (10^4 random) and partition bound (k <= 60, l <= 10)", [] { return crit10(); });
  report(11, "stability probe: B_n zero for n <= 200; odd block c3 = c4 = 0, c5 > 0 at n = 15, 30, 45",
         [] { return crit11(); });
  report(12, "criteria 1-8 identical with workers = 1 and " + std::to_string(workers), [&] {
    const std::vector<std::function<Outcome()>> par = {
        [&] { return crit1(workers); }, [&] { return crit2(workers); }, [&] { return crit3(workers); },
        [&] { return crit4(workers, nullptr); }, [&] { return crit5(workers); }, [&] { return crit6(workers); },
        [&] { return crit7(workers); }, [&] { return crit8(workers); }};
    Outcome o;
    for (std::size_t i = 0; i < par.size(); ++i) {
      const Outcome p = par[i]();
      if (p.values != serial[i].values || p.passed != serial[i].passed) {
        o.passed = false;
        o.detail += (o.detail.empty() ? "" : "; ") + std::string("criterion ") + std::to_string(i + 1) + " differs";
      }
    }
    return o;
  });

  std::printf("%s  acceptance: %d failing\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
