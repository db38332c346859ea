#ifndef CURVSPACE_ERRORS_HPP
#define CURVSPACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace curvspace {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mixing values tagged with different ground fields.
class FieldMismatchError : public Error {
public:
  explicit FieldMismatchError(const std::string& msg) : Error(msg) {}
};

/// Incompatible matrix or subspace dimensions.
class DimensionError : public Error {
public:
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// A documented operation precondition does not hold.
class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

/// Malformed textual input (scalars, rep-specs, algebra files).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace curvspace

#endif // CURVSPACE_ERRORS_HPP
