#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ocmf {

enum class ErrorKind {
  InvalidArgument,
  ContextMismatch,
  NonUnit,
  PrecisionShortfall,
  SingularSystem,
  ResidualMismatch,
  Integrality,
  Unsupported,
  NotSimple,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind is stable and is what the
/// CLI reports in its structured error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ocmf
