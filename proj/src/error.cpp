#include "dualgeom/error.hpp"

namespace dualgeom {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByPureDual: return "DivisionByPureDual";
        case ErrorCode::NonPositiveRealPart: return "NonPositiveRealPart";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::ZeroRealPart: return "ZeroRealPart";
        case ErrorCode::NotUnit: return "NotUnit";
        case ErrorCode::NotUnitDirection: return "NotUnitDirection";
        case ErrorCode::MomentNotPerpendicular: return "MomentNotPerpendicular";
        case ErrorCode::ParallelLines: return "ParallelLines";
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::SingularIndicatrix: return "SingularIndicatrix";
        case ErrorCode::VanishingCurvature: return "VanishingCurvature";
        case ErrorCode::VanishingTorsion: return "VanishingTorsion";
        case ErrorCode::QuadratureNonConvergence: return "QuadratureNonConvergence";
        case ErrorCode::IllConditionedFit: return "IllConditionedFit";
        case ErrorCode::InconsistentFits: return "InconsistentFits";
        case ErrorCode::NotOnDualUnitSphere: return "NotOnDualUnitSphere";
        case ErrorCode::IOFailure: return "IOFailure";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownBuiltin: return "UnknownBuiltin";
        case ErrorCode::SchemaViolation: return "SchemaViolation";
    }
    return "Unknown";
}

}  // namespace dualgeom
