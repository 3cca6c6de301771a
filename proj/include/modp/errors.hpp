#pragma once
#include <stdexcept>
#include <string>

namespace modp {

// Exit code mapping used by the CLI: config 2, precondition 3, the rest 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : Error { using Error::Error; };
struct LevelError : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };
struct TheoremViolation : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
// A computation that needs a larger truncation to be decided.
struct InconclusiveTruncation : Error { using Error::Error; };

}  // namespace modp
