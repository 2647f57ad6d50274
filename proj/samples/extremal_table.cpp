// Largest sum-free A ⊆ [1, n] with 2n+1 not a sum of elements of A, next to
// |B_n| and the Z_31 census.

#include <cstdio>

#include "sumfree/sumfree.hpp"

int main() {
  using namespace sumfree;
  const ProfileRule& rule = find_profile("sf-sigma-2n1");
  std::printf("  n  count  max  |B_n|  first witness\n");
  for (int n = 1; n <= 20; ++n) {
    const EnumResult r = run_enumeration(make_task(n, rule.at(n), EnumMode::count, 2));
    std::printf("%3d %6llu %4d %6zu  %s\n", n, static_cast<unsigned long long>(r.count), r.max_size,
                b_n(n).size(), r.witnesses.empty() ? "-" : r.witnesses.front().to_string().c_str());
  }
  for (const auto& row : census_scsf(31))
    std::printf("Z_31 size %d: %llu sets in %zu orbit(s)\n", row.size,
                static_cast<unsigned long long>(row.count), row.representatives.size());
}
