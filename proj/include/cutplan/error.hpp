#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cutplan {

/// Base of every domain error. `name()` is the stable identifier that the
/// CLI prints next to the message.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define CUTPLAN_DEFINE_ERROR(Type)                                  \
  class Type : public Error {                                       \
   public:                                                          \
    explicit Type(const std::string& what) : Error(#Type, what) {} \
  }

CUTPLAN_DEFINE_ERROR(InvalidStructure);
CUTPLAN_DEFINE_ERROR(DegenerateStructure);
CUTPLAN_DEFINE_ERROR(BudgetTooSmall);
CUTPLAN_DEFINE_ERROR(InvalidAlpha);
CUTPLAN_DEFINE_ERROR(SearchSpaceTooLarge);
CUTPLAN_DEFINE_ERROR(TooManyConstraints);
CUTPLAN_DEFINE_ERROR(ParseError);
// A broken mathematical guarantee; indicates a bug, never bad input.
CUTPLAN_DEFINE_ERROR(InternalInvariantViolation);

#undef CUTPLAN_DEFINE_ERROR

/// Truth table violates monotonicity. Carries the witnessing pair of
/// states (bit j = component j) with below <= above, phi(below) = 1 and
/// phi(above) = 0.
class NonCoherentStructure : public Error {
 public:
  NonCoherentStructure(const std::string& what, std::uint32_t below,
                       std::uint32_t above)
      : Error("NonCoherentStructure", what), below_(below), above_(above) {}

  std::uint32_t below() const noexcept { return below_; }
  std::uint32_t above() const noexcept { return above_; }

 private:
  std::uint32_t below_;
  std::uint32_t above_;
};

}  // namespace cutplan
