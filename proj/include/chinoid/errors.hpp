#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chinoid {

/// Raised when a congruence-class closure grows past the configured budget.
/// Signals the caller to reduce the input length (or raise the budget); the
/// class is never silently truncated.
class ClassBudgetExceeded : public std::runtime_error {
 public:
  explicit ClassBudgetExceeded(std::size_t budget)
      : std::runtime_error("congruence class exceeds the budget of " +
                           std::to_string(budget) + " words"),
        budget_(budget) {}

  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

/// Internal-consistency failures: a congruence class with anything other
/// than exactly one canonically shaped member would contradict uniqueness
/// of the normal form, so it can only mean an implementation bug.
class NoCanonicalMember : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class MultipleCanonicalMembers : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class RankTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IsLeaf : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CatalogMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OddRank : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ZeroParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ZeroVector : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConstraintViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A two-letter product expected to act as one constant scalar does not.
class NotScalar : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The base module handed to the inductive construction fails one of the
/// finitely checkable hypotheses (block commutativity, shape).
class HypothesisViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chinoid
