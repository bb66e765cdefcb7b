#ifndef WVA_ERRORS_HPP
#define WVA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wva {

// Base class for all domain errors thrown by this library.  Everything that
// can go wrong falls into one of two buckets: the *input* was ill-formed
// (InputError and the construction-time errors below), or a *computation*
// could not be carried out to the requested accuracy (the numerical errors).
// The CLI maps the first bucket to exit code 2 and the second to exit code 3.
//
// kind() returns the stable machine-readable error name used in CLI
// diagnostics and scan row statuses.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "Error"; }
};

// ---- construction / input errors -------------------------------------------

// Malformed scenario files, out-of-range CLI arguments, unknown keys, ...
class InputError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InputError"; }
};

// Re(A_w) = 0: the sign sigma and the parameter z = (1 - sigma A_w)/(1 + sigma A_w)
// are undefined, so such weak values are rejected at construction.
class DegenerateWeakValue : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override { return "DegenerateWeakValue"; }
};

// theta = pi: post-selection orthogonal to the preparation, <f|i> = 0, the
// weak value diverges.
class OrthogonalPostSelection : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override {
    return "OrthogonalPostSelection";
  }
};

// Variational probe requested with a mean kernel norm outside the open range
// of |B(k)|^2 (for A_w = +-1 that range collapses to the single point 1).
class MeanKernelNormOutOfRange : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override {
    return "MeanKernelNormOutOfRange";
  }
};

// Variational probe requested on an interval that contains no zero of
// D(k) = |B(k)|^2 - m; the self-consistency condition requires at least one.
class NoSingularPointInInterval : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override {
    return "NoSingularPointInInterval";
  }
};

// A_w = +-1: the pointer shift is +-1 for every probe, so solving for a
// probe that produces a different shift is impossible.
class TrivialWeakValue : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override { return "TrivialWeakValue"; }
};

// ---- evaluation / numerical errors -----------------------------------------

class OutOfSupport : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "OutOfSupport"; }
};

class EvaluationAtSingularity : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override {
    return "EvaluationAtSingularity";
  }
};

// A probe with non-integrable singular points was handed to a quadrature
// routine with singularity_epsilon = 0, so no regularization is possible.
class SingularProbe : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "SingularProbe"; }
};

class MaxSubdivisionsExceeded : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override {
    return "MaxSubdivisionsExceeded";
  }
};

// The integrand returned NaN or infinity at a point that was not declared
// singular.
class NonFiniteEvaluation : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "NonFiniteEvaluation"; }
};

class ZeroNorm : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ZeroNorm"; }
};

// Lerch series requested outside its convergence disc |z| < 1.
class SeriesDomain : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "SeriesDomain"; }
};

// Lerch series requested at x such that x + k = 0 for some k >= 0: a term of
// the series diverges.
class PoleHit : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "PoleHit"; }
};

// Position-space operation applied to a momentum-space table or vice versa.
class WrongRepresentation : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "WrongRepresentation"; }
};

}  // namespace wva

#endif  // WVA_ERRORS_HPP
