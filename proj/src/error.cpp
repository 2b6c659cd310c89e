#include "slq/error.hpp"

namespace slq {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MissingCurve: return "MissingCurve";
        case ErrorCode::UntrackedIntersection: return "UntrackedIntersection";
        case ErrorCode::InconsistentIncidence: return "InconsistentIncidence";
        case ErrorCode::NotContractibleChain: return "NotContractibleChain";
        case ErrorCode::NotMinusOne: return "NotMinusOne";
        case ErrorCode::FlipPreconditionFailed: return "FlipPreconditionFailed";
        case ErrorCode::NotInGenus4List: return "NotInGenus4List";
        case ErrorCode::ExceedsMultiplicityBound: return "ExceedsMultiplicityBound";
        case ErrorCode::UnsupportedContraction: return "UnsupportedContraction";
        case ErrorCode::ConeUnknown: return "ConeUnknown";
        case ErrorCode::NotToricChain: return "NotToricChain";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace slq
