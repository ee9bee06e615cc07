#include "chaingame/transcript.hpp"

#include <fstream>
#include <sstream>

namespace chaingame {

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::InProgress: return "in_progress";
    case Outcome::Completed: return "completed";
    case Outcome::SpoilerFault: return "spoiler_fault";
    case Outcome::AlgorithmFault: return "algorithm_fault";
  }
  return "in_progress";
}

Outcome parse_outcome(std::string_view text) {
  if (text == "in_progress") return Outcome::InProgress;
  if (text == "completed") return Outcome::Completed;
  if (text == "spoiler_fault") return Outcome::SpoilerFault;
  if (text == "algorithm_fault") return Outcome::AlgorithmFault;
  throw Error(Errc::ParseError, "unknown outcome '" + std::string(text) + "'");
}

namespace {

Errc errc_from_name(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(Errc::SessionNotFound); ++i) {
    const auto code = static_cast<Errc>(i);
    if (errc_name(code) == name) return code;
  }
  throw Error(Errc::ParseError, "unknown error code '" + std::string(name) + "'");
}

}  // namespace

OrderedJson config_to_json(const GameConfig& config) {
  OrderedJson j;
  j["mode"] = mode_name(config.mode);
  j["w"] = config.w;
  j["spoiler"] = config.spoiler;
  j["algorithm"] = config.algorithm;
  j["seed"] = config.seed;
  if (config.points) j["points"] = *config.points;
  return j;
}

GameConfig config_from_json(const nlohmann::json& j) {
  GameConfig config;
  config.mode = parse_mode(j.at("mode").get<std::string>());
  config.w = j.at("w").get<std::uint64_t>();
  config.spoiler = j.at("spoiler").get<std::string>();
  config.algorithm = j.at("algorithm").get<std::string>();
  config.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("points")) config.points = j.at("points").get<std::size_t>();
  return config;
}

OrderedJson events_to_json(const std::vector<Event>& events) {
  OrderedJson out = OrderedJson::array();
  for (const Event& e : events) {
    OrderedJson item;
    if (const auto* p = std::get_if<PresentEvent>(&e)) {
      OrderedJson body;
      body["id"] = p->id;
      body["down"] = p->down;
      body["up"] = p->up;
      item["present"] = std::move(body);
    } else {
      const auto& a = std::get<AssignEvent>(e);
      OrderedJson body;
      body["id"] = a.id;
      body["chain"] = a.chain;
      item["assign"] = std::move(body);
    }
    out.push_back(std::move(item));
  }
  return out;
}

OrderedJson fault_to_json(const Fault& fault) {
  OrderedJson j;
  j["event_index"] = fault.event_index;
  j["code"] = errc_name(fault.code);
  j["message"] = fault.message;
  if (!fault.witness.empty()) j["witness"] = fault.witness;
  return j;
}

OrderedJson transcript_to_json(const Transcript& t) {
  OrderedJson j;
  j["config"] = config_to_json(t.config);
  j["events"] = events_to_json(t.events);
  j["chains_used"] = t.chains_used;
  j["outcome"] = outcome_name(t.outcome);
  if (t.fault) j["fault"] = fault_to_json(*t.fault);
  return j;
}

Transcript transcript_from_json(const nlohmann::json& j) {
  try {
    Transcript t;
    t.config = config_from_json(j.at("config"));
    for (const auto& item : j.at("events")) {
      if (item.contains("present")) {
        const auto& body = item.at("present");
        t.events.emplace_back(PresentEvent{body.at("id").get<PointId>(),
                                           body.at("down").get<std::vector<PointId>>(),
                                           body.value("up", std::vector<PointId>{})});
      } else if (item.contains("assign")) {
        const auto& body = item.at("assign");
        t.events.emplace_back(AssignEvent{body.at("id").get<PointId>(), body.at("chain").get<ChainId>()});
      } else {
        throw Error(Errc::ParseError, "event is neither present nor assign");
      }
    }
    t.chains_used = j.at("chains_used").get<std::size_t>();
    t.outcome = parse_outcome(j.at("outcome").get<std::string>());
    if (j.contains("fault")) {
      const auto& f = j.at("fault");
      t.fault = Fault{f.at("event_index").get<std::size_t>(),
                      errc_from_name(f.at("code").get<std::string>()),
                      f.value("message", std::string{}),
                      f.value("witness", std::vector<PointId>{})};
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed transcript: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    throw Error(Errc::ParseError, std::string("malformed transcript: ") + e.what());
  }
}

std::string to_canonical_json(const Transcript& t) { return transcript_to_json(t).dump() + "\n"; }

Transcript parse_transcript(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return transcript_from_json(j);
}

Transcript load_transcript(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_transcript(buffer.str());
}

void save_transcript(const Transcript& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
  out << to_canonical_json(t);
}

}  // namespace chaingame
