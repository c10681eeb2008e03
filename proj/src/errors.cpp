#include "mcqw/errors.hpp"

namespace mcqw {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::ZeroOutDegree: return "ZeroOutDegree";
        case ErrorKind::NonUniqueStationary: return "NonUniqueStationary";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::DegenerateNormalization: return "DegenerateNormalization";
        case ErrorKind::StateOutsideInvariantSubspace: return "StateOutsideInvariantSubspace";
        case ErrorKind::PreconditionViolation: return "PreconditionViolation";
        case ErrorKind::LightConeOverflow: return "LightConeOverflow";
        case ErrorKind::SingularK: return "SingularK";
        case ErrorKind::QuadratureFailure: return "QuadratureFailure";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace mcqw
