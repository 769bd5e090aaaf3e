#pragma once

#include <stdexcept>
#include <string>

namespace kz {

enum class Errc {
    CapExceeded,
    MixedVariant,
    UnassignedSymbol,
    NotSubgroup,
    Disconnected,
    NonSymmetricSet,
    TooLarge,
    NoConvergence,
    NotGenerating,
    UnequalIndices,
    BadParameters,
    BadPrime,
    OutOfRange,
    BadType,
    UnknownPattern,
    UnsupportedAlgebraicForm,
    UnknownVertexGroup,
    BadTag,
    NotAnEdge,
    NonUnitriangularInverse,
    PreconditionViolated,
    SearchExhausted,
    ParseError,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::MixedVariant: return "MixedVariant";
    case Errc::UnassignedSymbol: return "UnassignedSymbol";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NonSymmetricSet: return "NonSymmetricSet";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::NotGenerating: return "NotGenerating";
    case Errc::UnequalIndices: return "UnequalIndices";
    case Errc::BadParameters: return "BadParameters";
    case Errc::BadPrime: return "BadPrime";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::BadType: return "BadType";
    case Errc::UnknownPattern: return "UnknownPattern";
    case Errc::UnsupportedAlgebraicForm: return "UnsupportedAlgebraicForm";
    case Errc::UnknownVertexGroup: return "UnknownVertexGroup";
    case Errc::BadTag: return "BadTag";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::NonUnitriangularInverse: return "NonUnitriangularInverse";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace kz
