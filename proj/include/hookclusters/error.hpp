#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hc {

// Error names are part of the CLI contract: they are printed verbatim.
enum class Errc {
    NonDecreasingParts,
    NonPositivePart,
    BoxOutOfRange,
    EmptyPartition,
    IndexOutOfRange,
    PeriodExceedsRows,
    InexactDivision,
    EmptyRange,
    InvalidCharacteristic,
    NotAFrontSection,
    InconsistentT,
    HeightMismatch,
    XTooSmall,
    PeriodTooLarge,
    JunctionViolation,
    NotClustered,
    DuplicateMember,
    HypothesisFailure,
    NotAPeriodicCluster,
    PeriodTooSmall,
    NoPrimeFound,
    MemberCollision,
    WeightOutOfRange,
    BelowThreshold,
    CeilingExceeded,
    WeightMismatch,
    InternalError,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail);

    Errc code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

} // namespace hc
