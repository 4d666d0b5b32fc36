#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace udlrc {

enum class ErrorCode {
    DivisionByZero,
    SingularMatrix,
    NotPrime,
    FieldTooLarge,
    RankDeficientPoints,
    MessageTooLong,
    TooManyPoints,
    SpecInvalid,
    FieldTooSmall,
    LengthMismatch,
    IndexOutOfRange,
    Undecodable,
    DimensionInfeasible,
    RankInfeasible,
    PreconditionViolated,
    TooManyClasses,
    TooLarge,
    RankDeficientGenerator,
    CountOutOfRange,
    OrderedConditionRequired,
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by erasure decoding when the surviving symbols carry too little rank.
class UndecodableError : public Error {
public:
    UndecodableError(std::size_t remaining_rank, std::size_t k)
        : Error(ErrorCode::Undecodable, "remaining rank " + std::to_string(remaining_rank) + " < k = " +
                                            std::to_string(k)),
          remaining_rank_(remaining_rank) {}

    [[nodiscard]] std::size_t remaining_rank() const noexcept { return remaining_rank_; }

private:
    std::size_t remaining_rank_;
};

}  // namespace udlrc
