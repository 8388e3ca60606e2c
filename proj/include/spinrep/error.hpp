#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spinrep {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed descriptor, weight, subset or parameter.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A computation would exceed a configured size limit. Carries the size it
// would have needed so callers can raise the limit knowingly.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string limit_name, std::uint64_t required, std::uint64_t limit)
      : Error(limit_name + " budget exceeded: needs " + std::to_string(required) +
              ", limit " + std::to_string(limit)),
        name_(std::move(limit_name)),
        required_(required),
        limit_(limit) {}

  const std::string& limit_name() const noexcept { return name_; }
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::string name_;
  std::uint64_t required_;
  std::uint64_t limit_;
};

// A virtual character that is not the character of a module.
class NotAModule : public Error {
 public:
  using Error::Error;
};

// Division of characters left a nonzero remainder.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagree.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace spinrep
