#include "chaingame/error.hpp"

namespace chaingame {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::UnknownPoint: return "unknown_point";
    case Errc::DownUpOverlap: return "down_up_overlap";
    case Errc::NotDownwardClosed: return "not_downward_closed";
    case Errc::NotUpwardClosed: return "not_upward_closed";
    case Errc::TwoPlusTwo: return "two_plus_two";
    case Errc::ThreePlusOne: return "three_plus_one";
    case Errc::InternalInfeasible: return "internal_infeasible";
    case Errc::NotMaximal: return "not_maximal";
    case Errc::InvalidChain: return "invalid_chain";
    case Errc::InconsistentReply: return "inconsistent_reply";
    case Errc::InternalStrategy: return "internal_strategy";
    case Errc::UnknownStrategy: return "unknown_strategy";
    case Errc::ModeMismatch: return "mode_mismatch";
    case Errc::PointCapExceeded: return "point_cap_exceeded";
    case Errc::WidthExceeded: return "width_exceeded";
    case Errc::NotYourTurn: return "not_your_turn";
    case Errc::GameOver: return "game_over";
    case Errc::BudgetExceeded: return "budget_exceeded";
    case Errc::InvalidArgument: return "invalid_argument";
    case Errc::ParseError: return "parse_error";
    case Errc::SessionNotFound: return "session_not_found";
  }
  return "unknown";
}

std::string_view errc_title(Errc code) {
  switch (code) {
    case Errc::UnknownPoint: return "UnknownPoint";
    case Errc::DownUpOverlap: return "DownUpOverlap";
    case Errc::NotDownwardClosed: return "NotDownwardClosed";
    case Errc::NotUpwardClosed: return "NotUpwardClosed";
    case Errc::TwoPlusTwo: return "TwoPlusTwo";
    case Errc::ThreePlusOne: return "ThreePlusOne";
    case Errc::InternalInfeasible: return "InternalInfeasible";
    case Errc::NotMaximal: return "NotMaximal";
    case Errc::InvalidChain: return "InvalidChain";
    case Errc::InconsistentReply: return "InconsistentReply";
    case Errc::InternalStrategy: return "InternalStrategy";
    case Errc::UnknownStrategy: return "UnknownStrategy";
    case Errc::ModeMismatch: return "ModeMismatch";
    case Errc::PointCapExceeded: return "PointCapExceeded";
    case Errc::WidthExceeded: return "WidthExceeded";
    case Errc::NotYourTurn: return "NotYourTurn";
    case Errc::GameOver: return "GameOver";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::SessionNotFound: return "SessionNotFound";
  }
  return "Unknown";
}

}  // namespace chaingame
