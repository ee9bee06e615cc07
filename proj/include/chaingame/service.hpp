#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "chaingame/arena.hpp"

namespace httplib {
class Server;
}

namespace chaingame::service {

/// JSON view of a session as served by GET /api/sessions/{id}.
OrderedJson session_state(const std::string& id, const GameSession& session);

/// {"left_endpoints": [{"id", "num", "den"}]}.
OrderedJson intervals_json(const SemiOrder& order);

/// {"code", "message", "event_index"?}.
OrderedJson error_json(const Error& e, std::optional<std::size_t> event_index = std::nullopt);
int http_status(Errc code);

/// In-memory sessions. Each session has its own reader/writer lock; the
/// table lock is only held to look sessions up.
class SessionStore {
 public:
  std::string create(GameConfig config, HumanRole role);

  /// Runs f under a shared lock. Throws SessionNotFound.
  template <typename F>
  auto read(const std::string& id, F&& f) {
    auto entry = find(id);
    std::shared_lock lock(entry->mutex);
    return f(static_cast<const GameSession&>(entry->session));
  }

  /// Runs f under an exclusive lock. Throws SessionNotFound.
  template <typename F>
  auto write(const std::string& id, F&& f) {
    auto entry = find(id);
    std::unique_lock lock(entry->mutex);
    return f(entry->session);
  }

  std::size_t size() const;

 private:
  struct Entry {
    explicit Entry(GameSession s) : session(std::move(s)) {}
    std::shared_mutex mutex;
    GameSession session;
  };

  std::shared_ptr<Entry> find(const std::string& id) const;

  mutable std::shared_mutex table_mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::uint64_t next_id_ = 1;
};

/// Installs the session API on `server`.
void install_routes(httplib::Server& server, SessionStore& store);

/// Blocks serving on host:port. Returns false if the port cannot be bound.
bool serve(const std::string& host, int port);

}  // namespace chaingame::service
