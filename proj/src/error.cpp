#include "predation/error.hpp"

namespace predation {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CyclicOrOversized: return "CyclicOrOversized";
    case ErrorCode::PayoffArity: return "PayoffArity";
    case ErrorCode::EmptyDecision: return "EmptyDecision";
    case ErrorCode::DuplicateAction: return "DuplicateAction";
    case ErrorCode::IncompleteStrategy: return "IncompleteStrategy";
    case ErrorCode::InvalidDiscount: return "InvalidDiscount";
    case ErrorCode::InvalidStream: return "InvalidStream";
    case ErrorCode::OrderingViolation: return "OrderingViolation";
    case ErrorCode::NonpositiveHarm: return "NonpositiveHarm";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnknownParam: return "UnknownParam";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::NoBoundary: return "NoBoundary";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownScenario: return "UnknownScenario";
    case ErrorCode::MissingField: return "MissingField";
    case ErrorCode::UnknownField: return "UnknownField";
    case ErrorCode::NotANumber: return "NotANumber";
    case ErrorCode::NoSweepBlock: return "NoSweepBlock";
    case ErrorCode::NotRepeatedScenario: return "NotRepeatedScenario";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace predation
