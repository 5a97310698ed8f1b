#pragma once

#include <stdexcept>
#include <string>

namespace cicover {

// Named precondition violations. The CLI maps any InputError to exit code 1
// and prints the violation name, so callers can tell *which* contract failed
// without parsing prose.
enum class Violation {
  EmptyMultidegree,        // a complete intersection needs at least one degree
  DegreeTooSmall,          // every d_i must be >= 2 (degree-1 forms just cut down N)
  CodimTooLarge,           // need dim = N - r >= 2
  BadCoverParams,          // cover order/twist outside its allowed range
  NotATower,               // cover has no (outer cyclic) x (inner double) shape
  UnsupportedCombination,  // no necessary-condition lemma for this pair
  OutOfBoundBox,           // requested (N, s) falls outside the admissible box
  BadParity,               // family parameter parity makes the ambient dimension fractional
  BadArgument,             // malformed CLI/range/format argument
};

const char* violation_name(Violation v);

class InputError : public std::runtime_error {
 public:
  InputError(Violation v, const std::string& msg);
  Violation violation() const { return violation_; }

 private:
  Violation violation_;
};

// Convenience: throw InputError with the violation name prefixed.
[[noreturn]] void fail(Violation v, const std::string& msg);

}  // namespace cicover
