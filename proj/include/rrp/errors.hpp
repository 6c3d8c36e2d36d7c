#ifndef RRP_ERRORS_HPP
#define RRP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rrp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inputs whose shapes do not agree (vector lengths, state counts, horizons).
struct DimensionError : Error {
  using Error::Error;
};

// A scalar argument outside its documented range (step index, probabilities).
struct RangeError : Error {
  using Error::Error;
};

// Invalid configuration or argument values.
struct ParameterError : Error {
  using Error::Error;
};

// Iterative method hit its iteration cap; carries the last residual.
struct ConvergenceError : Error {
  double residual;
  ConvergenceError(const std::string& what, double res)
      : Error(what), residual(res) {}
};

// Instance too large for an exact method (oracle caps, DP table caps).
struct ResourceError : Error {
  using Error::Error;
};

// Malformed input file.
struct ParseError : Error {
  using Error::Error;
};

// Model invariants violated by data that was otherwise well-formed.
struct ValidationError : Error {
  using Error::Error;
};

// A model with no collectable reward where one is required.
struct DegenerateModelError : Error {
  using Error::Error;
};

}  // namespace rrp

#endif  // RRP_ERRORS_HPP
