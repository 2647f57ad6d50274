#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sumfree {

/// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The requested configuration class (e.g. k outside {3,4,5}) is not supported.
class UnsupportedConfiguration : public Error {
 public:
  using Error::Error;
};

/// The search exceeded its node budget. Never accompanied by partial results.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : Error("node budget of " + std::to_string(budget) + " exceeded"), budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

/// A recomputed census record disagrees with the stored one.
class CensusMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed or unreadable results store.
class StoreError : public Error {
 public:
  using Error::Error;
};

}  // namespace sumfree
