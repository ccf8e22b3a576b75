#include "corank/error.hpp"

namespace corank {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::AmbientMismatch: return "AmbientMismatch";
        case ErrorKind::NotContained: return "NotContained";
        case ErrorKind::NotWellDefined: return "NotWellDefined";
        case ErrorKind::InvalidComplex: return "InvalidComplex";
        case ErrorKind::InvalidCosheaf: return "InvalidCosheaf";
        case ErrorKind::MaskNotClosed: return "MaskNotClosed";
        case ErrorKind::NotAComplex: return "NotAComplex";
        case ErrorKind::InvalidFiltration: return "InvalidFiltration";
        case ErrorKind::Condition2Violated: return "Condition2Violated";
        case ErrorKind::DegenerateFace: return "DegenerateFace";
        case ErrorKind::GluingInconsistent: return "GluingInconsistent";
        case ErrorKind::NotFaceClosed: return "NotFaceClosed";
        case ErrorKind::MissingCosheaf: return "MissingCosheaf";
        case ErrorKind::MissingAugmentation: return "MissingAugmentation";
        case ErrorKind::BadPeriod: return "BadPeriod";
        case ErrorKind::Schema: return "Schema";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace corank
