#pragma once

#include <stdexcept>
#include <string>

namespace arf {

enum class Err {
  ReducibleModulus,
  InvalidField,
  ZeroInverse,
  ZeroDenominator,
  ParseError,
  DimensionMismatch,
  ContextMismatch,
  SingularMatrix,
  DegenerateForm,
  NotALagrangian,
  DecompositionFailed,
  LevelCapExceeded,
  DegreeCapExceeded,
  BudgetExceeded,
  InconsistentInvariant,
  InvalidForm,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::ReducibleModulus:      return "ReducibleModulus";
    case Err::InvalidField:          return "InvalidField";
    case Err::ZeroInverse:           return "ZeroInverse";
    case Err::ZeroDenominator:       return "ZeroDenominator";
    case Err::ParseError:            return "ParseError";
    case Err::DimensionMismatch:     return "DimensionMismatch";
    case Err::ContextMismatch:       return "ContextMismatch";
    case Err::SingularMatrix:        return "SingularMatrix";
    case Err::DegenerateForm:        return "DegenerateForm";
    case Err::NotALagrangian:        return "NotALagrangian";
    case Err::DecompositionFailed:   return "DecompositionFailed";
    case Err::LevelCapExceeded:      return "LevelCapExceeded";
    case Err::DegreeCapExceeded:     return "DegreeCapExceeded";
    case Err::BudgetExceeded:        return "BudgetExceeded";
    case Err::InconsistentInvariant: return "InconsistentInvariant";
    case Err::InvalidForm:           return "InvalidForm";
  }
  return "UnknownError";
}

class ArfError : public std::runtime_error {
 public:
  ArfError(Err code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
  throw ArfError(code, what);
}

}  // namespace arf
