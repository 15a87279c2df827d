#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semimod {

enum class ErrorKind {
  OutOfRange,
  NotIdentity,
  NotCommutative,
  NotAssociative,
  NotAdditive,
  IdentityNotPreserved,
  NotASubmonoid,
  NotACongruence,
  HypothesisFails,
  EmptyIdeal,
  PreconditionFailed,
  NotDivisible,
  NotBalanced,
  WellDefinednessFailure,
  InvalidInput,
  BudgetExceeded,
  BoundCapExceeded,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotIdentity: return "NotIdentity";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotAdditive: return "NotAdditive";
    case ErrorKind::IdentityNotPreserved: return "IdentityNotPreserved";
    case ErrorKind::NotASubmonoid: return "NotASubmonoid";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::HypothesisFails: return "HypothesisFails";
    case ErrorKind::EmptyIdeal: return "EmptyIdeal";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotBalanced: return "NotBalanced";
    case ErrorKind::WellDefinednessFailure: return "WellDefinednessFailure";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BoundCapExceeded: return "BoundCapExceeded";
  }
  return "Unknown";
}

/// Budget and bound failures are resource limits; everything else is a
/// rejected input (or, for WellDefinednessFailure, an internal bug).
constexpr bool is_resource_limit(ErrorKind k) noexcept {
  return k == ErrorKind::BudgetExceeded || k == ErrorKind::BoundCapExceeded;
}

/// Exception carrying a machine-readable kind and the witnessing elements
/// (indices, integers) that exhibit the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::vector<std::size_t> witness, std::string const& what)
      : std::runtime_error(format(kind, witness, what)),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::vector<std::size_t> const& witness() const noexcept { return witness_; }

 private:
  static std::string format(ErrorKind kind, std::vector<std::size_t> const& w,
                            std::string const& what) {
    std::ostringstream os;
    os << to_string(kind);
    if (!w.empty()) {
      os << '(';
      for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
      os << ')';
    }
    if (!what.empty()) os << ": " << what;
    return os.str();
  }

  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::vector<std::size_t> witness = {},
                              std::string const& what = {}) {
  throw Error(kind, std::move(witness), what);
}

/// Work counter shared by the brute-force searches. Throws BudgetExceeded
/// as soon as the allowance is spent.
class Budget {
 public:
  static constexpr std::size_t kDefault = 10'000'000;

  explicit Budget(std::size_t limit = kDefault) : limit_(limit) {}

  void spend(std::size_t units, std::string_view what = {}) {
    if (units > limit_ - used_) {
      fail(ErrorKind::BudgetExceeded, {limit_}, std::string(what));
    }
    used_ += units;
  }

  /// Checks that `units` more work would fit without spending it.
  void require(std::size_t units, std::string_view what = {}) const {
    if (units > limit_ - used_) {
      fail(ErrorKind::BudgetExceeded, {limit_}, std::string(what));
    }
  }

  std::size_t used() const noexcept { return used_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

}  // namespace semimod
