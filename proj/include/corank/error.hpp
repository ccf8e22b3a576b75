#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace corank {

enum class ErrorKind {
    AmbientMismatch,
    NotContained,
    NotWellDefined,
    InvalidComplex,
    InvalidCosheaf,
    MaskNotClosed,
    NotAComplex,
    InvalidFiltration,
    Condition2Violated,
    DegenerateFace,
    GluingInconsistent,
    NotFaceClosed,
    MissingCosheaf,
    MissingAugmentation,
    BadPeriod,
    Schema,
    Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the engine carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace corank
