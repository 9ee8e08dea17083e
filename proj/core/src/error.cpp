#include "ocmf/error.hpp"

namespace ocmf {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::ContextMismatch: return "context_mismatch";
    case ErrorKind::NonUnit: return "non_unit";
    case ErrorKind::PrecisionShortfall: return "precision_shortfall";
    case ErrorKind::SingularSystem: return "singular_system";
    case ErrorKind::ResidualMismatch: return "residual_mismatch";
    case ErrorKind::Integrality: return "integrality";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::NotSimple: return "not_simple";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace ocmf
