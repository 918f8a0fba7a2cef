#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rainbow {

enum class ErrorCode {
    MalformedHeader,
    MalformedLine,
    VertexOutOfRange,
    DuplicateEdge,
    LoopEdge,
    NotTwoConnected,
    NoEvenCycle,
    NoEar,
    BudgetExceeded,
    EarTooShort,
    EvenEar,
    OddEar,
    RepairExhausted,
    TooFewShortEars,
    FeetNotInStage,
    NotAChord,
    ConstructionUnverified,
    UncoloredEdge,
    NotRainbowConnected,
    Disconnected,
    MaxColorsExceeded,
    InfeasibleParameters,
    MalformedColoring,
};

auto to_string(ErrorCode code) -> std::string_view;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string & detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    auto code() const noexcept -> ErrorCode { return code_; }

private:
    ErrorCode code_;
};

} // namespace rainbow
