#include "hookclusters/error.hpp"

namespace hc {

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::NonDecreasingParts: return "NonDecreasingParts";
    case Errc::NonPositivePart: return "NonPositivePart";
    case Errc::BoxOutOfRange: return "BoxOutOfRange";
    case Errc::EmptyPartition: return "EmptyPartition";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::PeriodExceedsRows: return "PeriodExceedsRows";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::EmptyRange: return "EmptyRange";
    case Errc::InvalidCharacteristic: return "InvalidCharacteristic";
    case Errc::NotAFrontSection: return "NotAFrontSection";
    case Errc::InconsistentT: return "InconsistentT";
    case Errc::HeightMismatch: return "HeightMismatch";
    case Errc::XTooSmall: return "XTooSmall";
    case Errc::PeriodTooLarge: return "PeriodTooLarge";
    case Errc::JunctionViolation: return "JunctionViolation";
    case Errc::NotClustered: return "NotClustered";
    case Errc::DuplicateMember: return "DuplicateMember";
    case Errc::HypothesisFailure: return "HypothesisFailure";
    case Errc::NotAPeriodicCluster: return "NotAPeriodicCluster";
    case Errc::PeriodTooSmall: return "PeriodTooSmall";
    case Errc::NoPrimeFound: return "NoPrimeFound";
    case Errc::MemberCollision: return "MemberCollision";
    case Errc::WeightOutOfRange: return "WeightOutOfRange";
    case Errc::BelowThreshold: return "BelowThreshold";
    case Errc::CeilingExceeded: return "CeilingExceeded";
    case Errc::WeightMismatch: return "WeightMismatch";
    case Errc::InternalError: return "InternalError";
    }
    return "UnknownError";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail)
    , code_(code)
    , detail_(detail)
{
}

} // namespace hc
