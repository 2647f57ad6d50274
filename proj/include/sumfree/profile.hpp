#pragma once

/**
 * @file profile.hpp
 * @brief Constraint profiles: which sums are forbidden, and in which layers.
 *
 * A ConstraintProfile is concrete (the forbidden value is a number). The
 * registry holds ProfileRules, which produce a ConstraintProfile for each n
 * because the forbidden value is a function of n (2n+1, 2n, n+1).
 */

#include <algorithm>
#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumfree/core.hpp"
#include "sumfree/errors.hpp"
#include "sumfree/int_set.hpp"

namespace sumfree {

enum class Layers {
  sigma,  ///< target not in kA for any k >= 0
  k_set,  ///< target not in kA for each listed k
};

struct ConstraintProfile {
  int forbidden_sum = 0;
  Layers layers = Layers::sigma;
  std::vector<int> ks;  ///< sorted, each >= 3; empty for Layers::sigma
  bool require_sum_free = true;

  static ConstraintProfile sigma(int forbidden, bool sum_free) {
    if (forbidden < 0) throw PreconditionError("forbidden sum must be >= 0");
    return ConstraintProfile{forbidden, Layers::sigma, {}, sum_free};
  }

  static ConstraintProfile k_layers(int forbidden, std::vector<int> ks, bool sum_free) {
    if (forbidden < 0) throw PreconditionError("forbidden sum must be >= 0");
    if (ks.empty()) throw PreconditionError("k-layer profile needs at least one k");
    for (int k : ks)
      if (k < 3) throw PreconditionError("k-layer profiles require every k >= 3");
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ConstraintProfile{forbidden, Layers::k_set, std::move(ks), sum_free};
  }

  int max_layer() const { return ks.empty() ? 0 : ks.back(); }

  friend bool operator==(const ConstraintProfile&, const ConstraintProfile&) = default;
};

/// Whether `a` satisfies the profile, tested directly with the core
/// predicates. This is the reference definition the engine must agree with.
inline bool admits(const ConstraintProfile& p, const IntSet& a) {
  if (p.require_sum_free && !is_sum_free(a)) return false;
  if (p.layers == Layers::sigma) return !sigma_contains(a, p.forbidden_sum);
  for (int k : p.ks)
    if (k_fold_sumset(a, k, p.forbidden_sum).contains(p.forbidden_sum)) return false;
  return true;
}

/// Forbidden value as a function of n: n_coeff * n + offset.
struct ProfileRule {
  std::string id;
  int n_coeff = 2;
  int offset = 1;
  Layers layers = Layers::sigma;
  std::vector<int> ks;
  bool require_sum_free = true;

  int forbidden_for(int n) const { return n_coeff * n + offset; }

  ConstraintProfile at(int n) const {
    return layers == Layers::sigma
               ? ConstraintProfile::sigma(forbidden_for(n), require_sum_free)
               : ConstraintProfile::k_layers(forbidden_for(n), ks, require_sum_free);
  }
};

/// Registry of frozen profile names. Census records are joined on these.
inline std::span<const ProfileRule> profile_registry() {
  static const std::array<ProfileRule, 7> rules{{
      {"sf-sigma-2n1", 2, 1, Layers::sigma, {}, true},
      {"sf-3a-2n1", 2, 1, Layers::k_set, {3}, true},
      {"sf-34a-2n1", 2, 1, Layers::k_set, {3, 4}, true},
      {"sf-345a-2n1", 2, 1, Layers::k_set, {3, 4, 5}, true},
      {"sf-sigma-2n", 2, 0, Layers::sigma, {}, true},
      {"any-3a-n1", 1, 1, Layers::k_set, {3}, false},
      {"any-sigma-2n", 2, 0, Layers::sigma, {}, false},
  }};
  return rules;
}

inline const ProfileRule& find_profile(std::string_view id) {
  for (const auto& r : profile_registry())
    if (r.id == id) return r;
  throw PreconditionError("unknown profile id '" + std::string(id) + "'");
}

}  // namespace sumfree
