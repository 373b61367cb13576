#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sutura {

enum class ErrorKind {
    CrossingChords,
    BadPartition,
    ParseError,
    OddStep,
    BothNull,
    GradingMismatch,
    LengthMismatch,
    NotComparable,
    NotMonotone,
    ArcNotOnDiagram,
    TrivialArc,
    MoveUndefined,
    ArcNotDefined,
    NotNicelyOrdered,
    ZeroElement,
    SizeMismatch,
    NoCommonOutermost,
    NotTight,
    IndexOutOfRange,
    CapExceeded,
};

std::string_view kind_name(ErrorKind k);

// every domain failure in the library is one of these
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace sutura
