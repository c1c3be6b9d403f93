#pragma once

#include <stdexcept>
#include <string>

namespace hyperham {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Vector/form/structure dimensions do not agree.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// Quaternionic dimension n < 1.
struct InvalidDimension : Error {
  using Error::Error;
};

/// A 3x3 matrix expected to satisfy c^T c = I does not.
struct NonOrthogonal : Error {
  using Error::Error;
};

/// det(c) = -1: the induced triple would violate j3 = j1 j2.
struct OrientationReversing : Error {
  using Error::Error;
};

/// Post-construction validation of a unit triple failed.
struct TripleInconsistent : Error {
  using Error::Error;
};

/// Quaternion expected to be purely imaginary with unit norm is not.
struct NotUnitImaginary : Error {
  using Error::Error;
};

/// Wedge powers are only defined for even-degree base forms.
struct OddDegreeBase : Error {
  using Error::Error;
};

/// Interior product of a 0-form is undefined.
struct DegreeZero : Error {
  using Error::Error;
};

/// Form degree incompatible with the requested operation.
struct DegreeMismatch : Error {
  using Error::Error;
};

/// A quaternion-valued 1-form expected to be purely imaginary has a
/// nonzero real component.
struct NotImaginary : Error {
  using Error::Error;
};

/// Malformed input document.  line/column refer to the input text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0), column_(0) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that violates the scenario schema.  The message
/// names the offending field.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace hyperham
