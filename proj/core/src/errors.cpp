#include "arcdiag/errors.hpp"

namespace arcdiag {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::BadLength: return "BadLength";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::FixedPoint: return "FixedPoint";
        case ErrorKind::NotInvolution: return "NotInvolution";
        case ErrorKind::BadMultiplicity: return "BadMultiplicity";
        case ErrorKind::DuplicatePoint: return "DuplicatePoint";
        case ErrorKind::NotAChord: return "NotAChord";
        case ErrorKind::EmptyDiagram: return "EmptyDiagram";
        case ErrorKind::EmptyCutSet: return "EmptyCutSet";
        case ErrorKind::GuardExceeded: return "GuardExceeded";
        case ErrorKind::TooSmall: return "TooSmall";
        case ErrorKind::StarViolated: return "StarViolated";
        case ErrorKind::ImpossibleParity: return "ImpossibleParity";
        case ErrorKind::DegenerateModulus: return "DegenerateModulus";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, long long index)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      index_(index) {}

}  // namespace arcdiag
