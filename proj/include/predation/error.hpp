#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace predation {

enum class ErrorCode {
  // game-core
  CyclicOrOversized,
  PayoffArity,
  EmptyDecision,
  DuplicateAction,
  IncompleteStrategy,
  // repeated-engine
  InvalidDiscount,
  InvalidStream,
  OrderingViolation,
  NonpositiveHarm,
  // scenarios / oracle
  InvalidParams,
  TooLarge,
  // sweep-report
  UnknownParam,
  EmptyGrid,
  NoBoundary,
  // cli-config
  SyntaxError,
  UnknownScenario,
  MissingField,
  UnknownField,
  NotANumber,
  NoSweepBlock,
  NotRepeatedScenario,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the engine; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace predation
