#pragma once

#include <stdexcept>
#include <string>

namespace grasscub {

/// Invalid arguments (bad dimensions, out-of-range parameters, malformed input).
class ParameterError : public std::invalid_argument {
public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// A value failed its type invariant (non-projector matrix, non-orthonormal frame, ...).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal identity that must hold did not (e.g. a dimension formula went non-integral).
class ConsistencyError : public std::logic_error {
public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

/// Linear system too ill-conditioned to trust; carries the offending condition number.
class IllConditionedError : public std::runtime_error {
public:
  IllConditionedError(const std::string& what, double condition)
      : std::runtime_error(what), condition_number(condition) {}
  double condition_number;
};

/// Root finding produced materially complex roots where real ones were expected.
class SpuriousRootError : public std::runtime_error {
public:
  SpuriousRootError(const std::string& what, double max_imag)
      : std::runtime_error(what), max_imaginary(max_imag) {}
  double max_imaginary;
};

/// A reconstruction system is rank deficient; names the degree that failed.
class UnderdeterminedError : public std::runtime_error {
public:
  UnderdeterminedError(const std::string& what, int degree)
      : std::runtime_error(what), failed_degree(degree) {}
  int failed_degree;
};

}  // namespace grasscub
