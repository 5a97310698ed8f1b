#include "cicover/errors.hpp"

namespace cicover {

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::EmptyMultidegree: return "EmptyMultidegree";
    case Violation::DegreeTooSmall: return "DegreeTooSmall";
    case Violation::CodimTooLarge: return "CodimTooLarge";
    case Violation::BadCoverParams: return "BadCoverParams";
    case Violation::NotATower: return "NotATower";
    case Violation::UnsupportedCombination: return "UnsupportedCombination";
    case Violation::OutOfBoundBox: return "OutOfBoundBox";
    case Violation::BadParity: return "BadParity";
    case Violation::BadArgument: return "BadArgument";
  }
  return "UnknownViolation";
}

InputError::InputError(Violation v, const std::string& msg)
    : std::runtime_error(std::string(violation_name(v)) + ": " + msg), violation_(v) {}

void fail(Violation v, const std::string& msg) { throw InputError(v, msg); }

}  // namespace cicover
