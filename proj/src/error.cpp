#include "abcprat/error.hpp"

namespace abcprat {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument:
        return "InvalidArgument";
    case ErrorKind::NotSquarefree:
        return "NotSquarefree";
    case ErrorKind::NotAUnit:
        return "NotAUnit";
    case ErrorKind::NonConvergence:
        return "NonConvergence";
    case ErrorKind::TooLargeDiscriminant:
        return "TooLargeDiscriminant";
    case ErrorKind::MixedField:
        return "MixedField";
    case ErrorKind::RamifiedUnsupported:
        return "RamifiedUnsupported";
    case ErrorKind::PartialFactorization:
        return "PartialFactorization";
    case ErrorKind::NotInS:
        return "NotInS";
    case ErrorKind::InsufficientRecords:
        return "InsufficientRecords";
    case ErrorKind::Io:
        return "Io";
    }
    return "Unknown";
}

} // namespace abcprat
