#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abcprat {

enum class ErrorKind {
    InvalidArgument,
    NotSquarefree,
    NotAUnit,
    NonConvergence,
    TooLargeDiscriminant,
    MixedField,
    RamifiedUnsupported,
    PartialFactorization,
    NotInS,
    InsufficientRecords,
    Io,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported through this type;
/// the kind is what callers (and the CLI exit-code mapping) switch on.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace abcprat
