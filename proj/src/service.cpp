#include "chaingame/service.hpp"

#include <iostream>

#include "chaingame/game_value.hpp"
#include "httplib.h"

namespace chaingame::service {

OrderedJson session_state(const std::string& id, const GameSession& session) {
  const Transcript& t = session.transcript();
  OrderedJson j;
  j["id"] = id;
  j["config"] = config_to_json(t.config);
  j["events"] = events_to_json(t.events);
  j["chains_used"] = t.chains_used;
  j["bound"] = game_value(t.config.w);
  j["next_actor"] = actor_name(session.next_actor());
  j["outcome"] = outcome_name(t.outcome);
  j["human_role"] = human_role_name(session.human_role());
  j["human_to_move"] = session.human_to_move();
  if (const auto p = session.pending_point()) {
    j["pending_point"] = *p;
  } else {
    j["pending_point"] = nullptr;
  }
  j["valid_chains"] = session.pending_valid_chains();
  OrderedJson chains = OrderedJson::array();
  for (const auto& chain : session.partition().chains()) chains.push_back(chain);
  j["chains"] = std::move(chains);
  j["max_points"] = session.max_points();
  if (t.fault) j["fault"] = fault_to_json(*t.fault);
  return j;
}

OrderedJson intervals_json(const SemiOrder& order) {
  const IntervalRepresentation rep = order.interval_representation();
  OrderedJson list = OrderedJson::array();
  for (PointId p = 0; p < rep.left.size(); ++p) {
    OrderedJson item;
    item["id"] = p;
    item["num"] = rep.left[p].num;
    item["den"] = rep.left[p].den;
    list.push_back(std::move(item));
  }
  OrderedJson j;
  j["left_endpoints"] = std::move(list);
  return j;
}

OrderedJson error_json(const Error& e, std::optional<std::size_t> event_index) {
  OrderedJson j;
  j["code"] = errc_name(e.code());
  j["message"] = e.what();
  if (event_index) j["event_index"] = *event_index;
  if (!e.witness().empty()) j["witness"] = e.witness();
  return j;
}

int http_status(Errc code) {
  switch (code) {
    case Errc::SessionNotFound: return 404;
    case Errc::NotYourTurn:
    case Errc::GameOver:
    case Errc::PointCapExceeded: return 409;
    default: return 400;
  }
}

std::string SessionStore::create(GameConfig config, HumanRole role) {
  GameSession session(std::move(config), role);
  std::unique_lock lock(table_mutex_);
  const std::string id = "s" + std::to_string(next_id_++);
  sessions_.emplace(id, std::make_shared<Entry>(std::move(session)));
  return id;
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(table_mutex_);
  return sessions_.size();
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(table_mutex_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(Errc::SessionNotFound, "no session '" + id + "'");
  return it->second;
}

namespace {

constexpr const char* kJson = "application/json";

void send(httplib::Response& res, int status, const OrderedJson& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void send_error(httplib::Response& res, const Error& e, std::optional<std::size_t> event_index = std::nullopt) {
  send(res, http_status(e.code()), error_json(e, event_index));
}

nlohmann::json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return nlohmann::json::object();
  try {
    auto j = nlohmann::json::parse(req.body);
    if (!j.is_object()) throw Error(Errc::ParseError, "request body must be a JSON object");
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON body: ") + e.what());
  }
}

GameConfig config_from_request(const nlohmann::json& body) {
  try {
    GameConfig config;
    config.mode = parse_mode(body.value("mode", std::string("up_growing")));
    config.w = body.value("w", std::uint64_t{2});
    config.spoiler = body.value("spoiler", std::string("golden"));
    config.algorithm = body.value("algorithm", std::string("alg"));
    config.seed = body.value("seed", std::uint64_t{0});
    if (body.contains("points")) config.points = body.at("points").get<std::size_t>();
    if (body.contains("max_points")) config.max_points = body.at("max_points").get<std::size_t>();
    return config;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("bad session field: ") + e.what());
  }
}

PointSet id_set(const nlohmann::json& body, const char* key) {
  if (!body.contains(key)) return {};
  try {
    return PointSet::of(body.at(key).get<std::vector<PointId>>());
  } catch (const nlohmann::json::exception&) {
    throw Error(Errc::InvalidArgument, std::string("'") + key + "' must be a list of point ids");
  }
}

ChainChoice choice_from(const nlohmann::json& body) {
  if (!body.contains("chain")) throw Error(Errc::InvalidArgument, "missing 'chain'");
  const auto& c = body.at("chain");
  if (c.is_string() && c.get<std::string>() == "new") return ChainChoice::fresh();
  if (c.is_number_unsigned()) return ChainChoice::existing(c.get<ChainId>());
  throw Error(Errc::InvalidArgument, "'chain' must be a chain id or \"new\"");
}

// Runs a mutation; referee rejections carry the index the move would have had.
template <typename F>
void mutate(SessionStore& store, const httplib::Request& req, httplib::Response& res, F&& f) {
  const std::string id = req.path_params.at("id");
  try {
    const nlohmann::json body = parse_body(req);
    OrderedJson state = store.write(id, [&](GameSession& s) {
      try {
        f(s, body);
      } catch (const Error& e) {
        if (e.code() == Errc::NotYourTurn || e.code() == Errc::GameOver) throw;
        send_error(res, e, s.transcript().events.size());
        return OrderedJson();
      }
      return session_state(id, s);
    });
    if (!state.is_null()) send(res, 200, state);
  } catch (const Error& e) {
    send_error(res, e);
  }
}

}  // namespace

void install_routes(httplib::Server& server, SessionStore& store) {
  server.Post("/api/sessions", [&store](const httplib::Request& req, httplib::Response& res) {
    try {
      const nlohmann::json body = parse_body(req);
      const HumanRole role = parse_human_role(body.value("human_role", std::string("none")));
      const std::string id = store.create(config_from_request(body), role);
      OrderedJson out;
      out["id"] = id;
      out["state"] = store.read(id, [&](const GameSession& s) { return session_state(id, s); });
      send(res, 201, out);
    } catch (const Error& e) {
      send_error(res, e);
    }
  });

  server.Get("/api/sessions/:id", [&store](const httplib::Request& req, httplib::Response& res) {
    const std::string id = req.path_params.at("id");
    try {
      send(res, 200, store.read(id, [&](const GameSession& s) { return session_state(id, s); }));
    } catch (const Error& e) {
      send_error(res, e);
    }
  });

  server.Get("/api/sessions/:id/intervals", [&store](const httplib::Request& req, httplib::Response& res) {
    try {
      send(res, 200, store.read(req.path_params.at("id"), [](const GameSession& s) { return intervals_json(s.order()); }));
    } catch (const Error& e) {
      send_error(res, e);
    }
  });

  server.Get("/api/sessions/:id/transcript", [&store](const httplib::Request& req, httplib::Response& res) {
    try {
      send(res, 200, store.read(req.path_params.at("id"), [](const GameSession& s) { return transcript_to_json(s.transcript()); }));
    } catch (const Error& e) {
      send_error(res, e);
    }
  });

  server.Post("/api/sessions/:id/step", [&store](const httplib::Request& req, httplib::Response& res) {
    mutate(store, req, res, [](GameSession& s, const nlohmann::json&) { s.step(); });
  });

  server.Post("/api/sessions/:id/run", [&store](const httplib::Request& req, httplib::Response& res) {
    mutate(store, req, res, [](GameSession& s, const nlohmann::json&) { s.run_automated(); });
  });

  server.Post("/api/sessions/:id/assign", [&store](const httplib::Request& req, httplib::Response& res) {
    mutate(store, req, res, [](GameSession& s, const nlohmann::json& body) { s.human_assign(choice_from(body)); });
  });

  server.Post("/api/sessions/:id/present", [&store](const httplib::Request& req, httplib::Response& res) {
    mutate(store, req, res, [](GameSession& s, const nlohmann::json& body) {
      s.human_present(id_set(body, "down"), id_set(body, "up"));
    });
  });

  server.Post("/api/sessions/:id/stop", [&store](const httplib::Request& req, httplib::Response& res) {
    mutate(store, req, res, [](GameSession& s, const nlohmann::json&) { s.stop(); });
  });

  server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    try {
      std::rethrow_exception(ep);
    } catch (const Error& e) {
      send_error(res, e);
    } catch (const std::exception& e) {
      send(res, 500, error_json(Error(Errc::InvalidArgument, e.what())));
    }
  });
}

bool serve(const std::string& host, int port) {
  httplib::Server server;
  SessionStore store;
  install_routes(server, store);
  if (!server.bind_to_port(host, port)) {
    std::cerr << "cannot bind " << host << ':' << port << '\n';
    return false;
  }
  std::cerr << "serving on http://" << host << ':' << port << '\n';
  return server.listen_after_bind();
}

}  // namespace chaingame::service
