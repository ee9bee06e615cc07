#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chaingame {

using PointId = std::size_t;
using ChainId = std::size_t;

enum class Errc {
  // order-core
  UnknownPoint,
  DownUpOverlap,
  NotDownwardClosed,
  NotUpwardClosed,
  TwoPlusTwo,
  ThreePlusOne,
  InternalInfeasible,
  // partition-engine
  NotMaximal,
  InvalidChain,
  // spoilers
  InconsistentReply,
  InternalStrategy,
  // arena
  UnknownStrategy,
  ModeMismatch,
  PointCapExceeded,
  WidthExceeded,
  NotYourTurn,
  GameOver,
  // oracle
  BudgetExceeded,
  // plumbing
  InvalidArgument,
  ParseError,
  SessionNotFound,
};

/// Engine error name in snake_case, as used on the wire.
std::string_view errc_name(Errc code);

/// CamelCase name, as printed by the CLI.
std::string_view errc_title(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::vector<PointId> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  Errc code() const noexcept { return code_; }
  /// Points realising a forbidden pattern, in pattern-role order, when relevant.
  const std::vector<PointId>& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::vector<PointId> witness_;
};

}  // namespace chaingame
