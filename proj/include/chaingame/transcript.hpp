#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chaingame/spoilers.hpp"
#include "json.hpp"

namespace chaingame {

struct GameConfig {
  Mode mode = Mode::UpGrowing;
  std::uint64_t w = 1;
  std::string spoiler = "golden";
  std::string algorithm = "alg";
  std::uint64_t seed = 0;
  /// Number of points for the random spoiler; serialized only when set.
  std::optional<std::size_t> points;
  /// Safety cap on presented points; not serialized.
  std::optional<std::size_t> max_points;
};

enum class Outcome { InProgress, Completed, SpoilerFault, AlgorithmFault };

std::string_view outcome_name(Outcome outcome);
Outcome parse_outcome(std::string_view text);

struct PresentEvent {
  PointId id = 0;
  std::vector<PointId> down;
  std::vector<PointId> up;
  friend bool operator==(const PresentEvent&, const PresentEvent&) = default;
};

struct AssignEvent {
  PointId id = 0;
  ChainId chain = 0;
  friend bool operator==(const AssignEvent&, const AssignEvent&) = default;
};

using Event = std::variant<PresentEvent, AssignEvent>;

/// Why a game stopped early. `event_index` is the position the rejected
/// event would have taken in the event list.
struct Fault {
  std::size_t event_index = 0;
  Errc code = Errc::InvalidArgument;
  std::string message;
  std::vector<PointId> witness;
};

/// Replayable record of one game.
struct Transcript {
  GameConfig config;
  std::vector<Event> events;
  std::size_t chains_used = 0;
  Outcome outcome = Outcome::InProgress;
  std::optional<Fault> fault;
};

using OrderedJson = nlohmann::ordered_json;

OrderedJson config_to_json(const GameConfig& config);
GameConfig config_from_json(const nlohmann::json& j);
OrderedJson events_to_json(const std::vector<Event>& events);
OrderedJson fault_to_json(const Fault& fault);

OrderedJson transcript_to_json(const Transcript& t);
/// Throws Error(ParseError) on malformed input.
Transcript transcript_from_json(const nlohmann::json& j);

/// Canonical single-line document with a fixed field order.
std::string to_canonical_json(const Transcript& t);
Transcript parse_transcript(std::string_view text);

Transcript load_transcript(const std::string& path);
void save_transcript(const Transcript& t, const std::string& path);

}  // namespace chaingame
