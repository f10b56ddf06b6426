#pragma once

#include <stdexcept>
#include <string>

namespace hrdet {

// Error kinds surfaced by the library. Checkers map some of these to
// "falsified"/"inconclusive" outcomes instead of aborting.
enum class ErrorKind {
  InvalidInput,
  FieldMismatch,
  DivisionByZero,
  DenominatorVanishes,
  NonOrientable,
  NotAnLsop,
  ExtendedVariableResidue,
  LefschetzFailure,
  BudgetExceeded,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

#define HRDET_CHECK(cond, kind, msg) \
  do {                               \
    if (!(cond)) ::hrdet::fail(kind, msg); \
  } while (0)

// Internal invariant check, active in all build types.
#define HRDET_ASSERT(cond, msg)                                          \
  do {                                                                   \
    if (!(cond))                                                         \
      throw std::logic_error(std::string("internal invariant failed: ") + \
                             (msg));                                     \
  } while (0)

}  // namespace hrdet
