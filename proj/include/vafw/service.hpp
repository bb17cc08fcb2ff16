#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

#include "vafw/document.hpp"

namespace httplib {
class Server;
}

namespace vafw {

struct ServiceOptions {
  std::chrono::seconds ttl = std::chrono::hours(24);
  /// Sessions are written here by save_snapshot() and on destruction.
  std::optional<std::string> snapshot_path;
  EngineLimits limits;
  /// Time source for idle expiry; steady_clock when empty.
  std::function<std::chrono::steady_clock::time_point()> clock;
};

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
  std::map<std::string, std::string> headers;
};

using Query = std::map<std::string, std::string>;

/// Session store behind the HTTP API. `handle` is transport-free so the
/// routes can be exercised without sockets.
class DisputeService {
 public:
  explicit DisputeService(ServiceOptions options = {});
  ~DisputeService();

  DisputeService(const DisputeService&) = delete;
  DisputeService& operator=(const DisputeService&) = delete;

  Response handle(std::string_view method, std::string_view path, const Query& query,
                  std::string_view body);

  std::size_t session_count() const;
  /// Drops sessions idle longer than the TTL; returns how many went.
  std::size_t expire_idle();

  void save_snapshot() const;
  /// Restores sessions saved by save_snapshot. Missing file is not an error.
  void load_snapshot();

 private:
  struct Session;

  std::shared_ptr<Session> find(const std::string& id);
  std::chrono::steady_clock::time_point now() const;
  std::string fresh_id();

  Response create(std::string_view body);
  Response route_session(std::string_view method, const std::string& id, std::string_view rest,
                         const Query& query, std::string_view body);

  ServiceOptions options_;
  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

/// Registers every route on `server`, forwarding to `service.handle`.
void bind_routes(httplib::Server& server, DisputeService& service);

/// Blocks serving on host:port. Returns false when the port cannot be bound.
bool serve(DisputeService& service, const std::string& host, int port);

}  // namespace vafw
