#include "latgrowth/errors.hpp"

namespace latgrowth {

char const* error_kind_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::InvalidDiscriminant: return "InvalidDiscriminant";
    case ErrorKind::NotTotallyReal: return "NotTotallyReal";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::InvalidT: return "InvalidT";
    case ErrorKind::AlphaZero: return "AlphaZero";
    case ErrorKind::AlphaPossiblySquare: return "AlphaPossiblySquare";
    case ErrorKind::SignUncertifiable: return "SignUncertifiable";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::InconsistentOverride: return "InconsistentOverride";
    case ErrorKind::NonIntegralOrder: return "NonIntegralOrder";
    case ErrorKind::EmptyReport: return "EmptyReport";
    case ErrorKind::ResidueBudgetExceeded: return "ResidueBudgetExceeded";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

} // namespace latgrowth
