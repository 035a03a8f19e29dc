#pragma once

#include <stdexcept>
#include <string>

namespace arcdiag {

enum class ErrorKind {
    BadLength,
    OutOfRange,
    FixedPoint,
    NotInvolution,
    BadMultiplicity,
    DuplicatePoint,
    NotAChord,
    EmptyDiagram,
    EmptyCutSet,
    GuardExceeded,
    TooSmall,
    StarViolated,
    ImpossibleParity,
    DegenerateModulus,
    ParseError,
    IoError,
};

const char* to_string(ErrorKind kind);

/// Domain error. `index` names the first violating point index or token
/// position where that is meaningful, -1 otherwise.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message, long long index = -1);

    ErrorKind kind() const noexcept { return kind_; }
    long long index() const noexcept { return index_; }

  private:
    ErrorKind kind_;
    long long index_;
};

}  // namespace arcdiag
