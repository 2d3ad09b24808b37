#pragma once

#include <stdexcept>
#include <string>

namespace wdist {

// Every recoverable failure mode of the library. CLI maps these to exit code 2.
enum class Errc {
  DEGREE_TOO_LOW,
  IDENTICALLY_ZERO,
  INPUT_DEFECTIVE,
  NOT_A_SQUARE,
  JACOBI_HYPOTHESIS_VIOLATED,
  MULTIPLE_ZERO_Z,
  COMPLEX_LAMBDA,
  SINGULAR_VALUE_MISMATCH,
  CLUSTERED_SINGULAR_VALUES,
  ELIMINATION_DEGENERATE,
  COFACTOR_SINGULAR,
  NEGATIVE_B,
  INVALID_PARAMS,
  NOT_PUBLISHED,
  PARSE_ERROR,
  INTERNAL,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DEGREE_TOO_LOW: return "DEGREE_TOO_LOW";
    case Errc::IDENTICALLY_ZERO: return "IDENTICALLY_ZERO";
    case Errc::INPUT_DEFECTIVE: return "INPUT_DEFECTIVE";
    case Errc::NOT_A_SQUARE: return "NOT_A_SQUARE";
    case Errc::JACOBI_HYPOTHESIS_VIOLATED: return "JACOBI_HYPOTHESIS_VIOLATED";
    case Errc::MULTIPLE_ZERO_Z: return "MULTIPLE_ZERO_Z";
    case Errc::COMPLEX_LAMBDA: return "COMPLEX_LAMBDA";
    case Errc::SINGULAR_VALUE_MISMATCH: return "SINGULAR_VALUE_MISMATCH";
    case Errc::CLUSTERED_SINGULAR_VALUES: return "CLUSTERED_SINGULAR_VALUES";
    case Errc::ELIMINATION_DEGENERATE: return "ELIMINATION_DEGENERATE";
    case Errc::COFACTOR_SINGULAR: return "COFACTOR_SINGULAR";
    case Errc::NEGATIVE_B: return "NEGATIVE_B";
    case Errc::INVALID_PARAMS: return "INVALID_PARAMS";
    case Errc::NOT_PUBLISHED: return "NOT_PUBLISHED";
    case Errc::PARSE_ERROR: return "PARSE_ERROR";
    case Errc::INTERNAL: return "INTERNAL";
  }
  return "INTERNAL";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

// For conditions that indicate a bug in this library rather than bad input.
inline void ensure(bool ok, const std::string& what) {
  if (!ok) raise(Errc::INTERNAL, what);
}

}  // namespace wdist
