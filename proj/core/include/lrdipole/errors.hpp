#pragma once

#include <stdexcept>
#include <string>

namespace lrdipole {

/// Base class for every failure raised by the library. Callers higher up the
/// stack may prepend context (e.g. which drive axis failed) before rethrowing.
class Error : public std::runtime_error
{
public:
  explicit Error(const std::string& message);

  const char* what() const noexcept override;

  /// Prepends "context: " to the message.
  void add_context(const std::string& context);

private:
  std::string message_;
};

/// The closed-form auxiliary solution is singular near Omega == omega.
class ResonanceError : public Error
{
public:
  using Error::Error;
};

class GridError : public Error
{
public:
  using Error::Error;
};

class NonFiniteError : public Error
{
public:
  using Error::Error;
};

class IncommensurateError : public Error
{
public:
  using Error::Error;
};

class OpenCurveError : public Error
{
public:
  using Error::Error;
};

/// Amplitude has leaked into the last basis states of a truncated Fock space.
class TruncationError : public Error
{
public:
  using Error::Error;
};

class DimensionError : public Error
{
public:
  using Error::Error;
};

/// A documented precondition or type invariant was violated by the caller.
class PreconditionError : public Error
{
public:
  using Error::Error;
};

} // namespace lrdipole
