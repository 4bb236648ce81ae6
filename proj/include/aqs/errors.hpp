#pragma once

#include <stdexcept>
#include <string>

namespace aqs {

// Error taxonomy mirrored by the CLI exit codes:
// validation -> 3, bounds -> 4, numeric -> 5, insufficient data -> 6.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (files, database invariants).
class ValidationError : public Error {
public:
  using Error::Error;
};

// Parameter outside its documented domain (bit index, cutoff, marked index).
class BoundsError : public Error {
public:
  using Error::Error;
};

// Numerical failure: integrator underflow, eigensolver non-convergence,
// window search running out of probes.
class NumericError : public Error {
public:
  using Error::Error;
};

// Ground-state degeneracy where a spectral gap was required.
class DegeneracyError : public NumericError {
public:
  using NumericError::NumericError;
};

// Fewer usable data points than a fit needs.
class InsufficientDataError : public Error {
public:
  using Error::Error;
};

// Time integration gave up; carries the last time it still trusted.
class IntegrationError : public NumericError {
public:
  IntegrationError(const std::string& what, double last_good_t)
      : NumericError(what), last_good_t_(last_good_t) {}

  double last_good_t() const noexcept { return last_good_t_; }

private:
  double last_good_t_;
};

}  // namespace aqs
