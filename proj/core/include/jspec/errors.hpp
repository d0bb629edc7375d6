#pragma once

#include <stdexcept>
#include <string>

namespace jspec {

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI's error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Invalid arguments or violated preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The numerics could not reach a verified answer. Callers may retry with
/// more samples or a perturbed input.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class InvalidNodes : public InputError {
 public:
  explicit InvalidNodes(const std::string& what) : InputError("InvalidNodes", what) {}
};

class DegenerateCurve : public InputError {
 public:
  explicit DegenerateCurve(const std::string& what) : InputError("DegenerateCurve", what) {}
};

class ParseError : public InputError {
 public:
  explicit ParseError(const std::string& what) : InputError("ParseError", what) {}
};

class RootFindingFailed : public NumericalError {
 public:
  explicit RootFindingFailed(const std::string& what) : NumericalError("RootFindingFailed", what) {}
};

class InconsistentSamples : public NumericalError {
 public:
  explicit InconsistentSamples(const std::string& what)
      : NumericalError("InconsistentSamples", what) {}
};

class InsufficientSampling : public NumericalError {
 public:
  explicit InsufficientSampling(const std::string& what)
      : NumericalError("InsufficientSampling", what) {}
};

class OnBoundaryAmbiguous : public NumericalError {
 public:
  explicit OnBoundaryAmbiguous(const std::string& what)
      : NumericalError("OnBoundaryAmbiguous", what) {}
};

class TraceAmbiguous : public NumericalError {
 public:
  TraceAmbiguous(const std::string& what, double theta_lo, double theta_hi)
      : NumericalError("TraceAmbiguous", what), theta_lo_(theta_lo), theta_hi_(theta_hi) {}
  double theta_lo() const noexcept { return theta_lo_; }
  double theta_hi() const noexcept { return theta_hi_; }

 private:
  double theta_lo_;
  double theta_hi_;
};

class StructureMismatch : public NumericalError {
 public:
  explicit StructureMismatch(const std::string& what)
      : NumericalError("StructureMismatch", what) {}
};

}  // namespace jspec
