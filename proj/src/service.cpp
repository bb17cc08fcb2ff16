#include "vafw/service.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>

#include "httplib.h"

#include "vafw/chains.hpp"
#include "vafw/fixtures.hpp"
#include "vafw/semantics.hpp"
#include "vafw/strategy.hpp"

namespace vafw {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct DisputeService::Session {
  Session(std::string id_, std::vector<NamedOrder> orders_, Vaf initial_, Clock::time_point t)
      : id(std::move(id_)), orders(std::move(orders_)), initial(initial_),
        current(std::move(initial_)), created(t), accessed(t.time_since_epoch().count()) {}

  std::string id;
  std::vector<NamedOrder> orders;
  Vaf initial;
  Vaf current;
  /// Framework before each applied move, newest last.
  std::vector<std::pair<Vaf, Move>> history;
  std::uint64_t revision = 0;

  mutable std::shared_mutex mutex;
  std::mutex cache_mutex;
  std::map<std::string, json> cache;

  Clock::time_point created;
  std::atomic<Clock::rep> accessed;

  void touch(Clock::time_point t) { accessed.store(t.time_since_epoch().count()); }
};

namespace {

Response json_response(int status, const json& body) {
  return {status, body.dump(2) + "\n", "application/json", {}};
}

Response error_response(int status, std::string_view code, const std::string& message,
                        const std::vector<std::string>& details = {}) {
  return json_response(status,
                       {{"error", {{"code", code}, {"message", message}, {"details", details}}}});
}

Response error_response(int status, const VafError& e) {
  return error_response(status, error_code_name(e.code()), e.what(), e.details());
}

int domain_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateArgumentId:
      return 409;
    case ErrorCode::SyntaxError:
    case ErrorCode::SchemaError:
      return 400;
    case ErrorCode::UnknownFixture:
      return 404;
    default:
      return 422;
  }
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(sep, start), text.size());
    out.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

json parse_body(std::string_view body) {
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw VafError(ErrorCode::SyntaxError, std::string("request body is not valid JSON: ") + e.what());
  }
}

const json& body_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw VafError(ErrorCode::SchemaError, std::string("missing field '") + key + "'", {key});
  return j.at(key);
}

std::string body_string(const json& j, const char* key) {
  const json& v = body_field(j, key);
  if (!v.is_string())
    throw VafError(ErrorCode::SchemaError, std::string("field '") + key + "' must be a string", {key});
  return v.get<std::string>();
}

}  // namespace

DisputeService::DisputeService(ServiceOptions options) : options_(std::move(options)) {}

DisputeService::~DisputeService() {
  if (!options_.snapshot_path) return;
  try {
    save_snapshot();
  } catch (...) {
  }
}

Clock::time_point DisputeService::now() const {
  return options_.clock ? options_.clock() : Clock::now();
}

std::string DisputeService::fresh_id() {
  static thread_local std::random_device device;
  std::ostringstream out;
  out << std::hex;
  for (int i = 0; i < 4; ++i) {
    const std::uint32_t word = device();
    for (int shift = 28; shift >= 0; shift -= 4) out << ((word >> shift) & 0xF);
  }
  return out.str();
}

std::size_t DisputeService::session_count() const {
  std::shared_lock lock(sessions_mutex_);
  return sessions_.size();
}

std::size_t DisputeService::expire_idle() {
  const auto cutoff = (now() - options_.ttl).time_since_epoch().count();
  std::unique_lock lock(sessions_mutex_);
  return std::erase_if(sessions_, [&](const auto& entry) {
    return entry.second->accessed.load() < cutoff;
  });
}

std::shared_ptr<DisputeService::Session> DisputeService::find(const std::string& id) {
  expire_idle();
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return nullptr;
  it->second->touch(now());
  return it->second;
}

void DisputeService::save_snapshot() const {
  if (!options_.snapshot_path) return;
  json sessions = json::array();
  {
    std::shared_lock lock(sessions_mutex_);
    for (const auto& [id, session] : sessions_) {
      std::shared_lock session_lock(session->mutex);
      json moves = json::array();
      for (const auto& entry : session->history) moves.push_back(to_json(entry.second));
      sessions.push_back({{"id", id},
                          {"document", document_to_json(to_document(session->initial, session->orders))},
                          {"moves", moves}});
    }
  }
  std::ofstream out(*options_.snapshot_path);
  if (!out) throw VafError(ErrorCode::IoError, "cannot write " + *options_.snapshot_path);
  out << json{{"sessions", sessions}}.dump(2) << "\n";
}

void DisputeService::load_snapshot() {
  if (!options_.snapshot_path) return;
  std::ifstream in(*options_.snapshot_path);
  if (!in) return;
  const json saved = parse_body(std::string(std::istreambuf_iterator<char>(in), {}));
  std::unique_lock lock(sessions_mutex_);
  for (const auto& entry : saved.at("sessions")) {
    FrameworkDocument doc = document_from_json(entry.at("document"));
    auto session = std::make_shared<Session>(entry.at("id").get<std::string>(), doc.orders,
                                             to_vaf(doc), now());
    for (const auto& m : entry.at("moves")) {
      Move move = move_from_json(m);
      Vaf next = apply_move(session->current, move);
      session->history.emplace_back(std::move(session->current), std::move(move));
      session->current = std::move(next);
      ++session->revision;
    }
    sessions_[session->id] = session;
  }
}

Response DisputeService::handle(std::string_view method, std::string_view path, const Query& query,
                                std::string_view body) {
  Response response;
  try {
    std::vector<std::string> parts = split(path, '/');
    if (!parts.empty() && parts.front().empty()) parts.erase(parts.begin());
    if (!parts.empty() && parts.back().empty()) parts.pop_back();

    if (!parts.empty() && parts[0] == "frameworks") {
      if (parts.size() == 1) {
        response = method == "POST" ? create(body)
                                    : error_response(405, "MethodNotAllowed", "use POST");
      } else {
        std::string rest;
        for (std::size_t i = 2; i < parts.size(); ++i) rest += (i > 2 ? "/" : "") + parts[i];
        response = route_session(method, parts[1], rest, query, body);
      }
    } else if (!parts.empty() && parts[0] == "fixtures" && parts.size() <= 2) {
      if (method != "GET") {
        response = error_response(405, "MethodNotAllowed", "use GET");
      } else if (parts.size() == 1) {
        json list = json::array();
        for (const auto& name : fixture_names())
          list.push_back({{"name", name}, {"description", load_fixture(name).description}});
        response = json_response(200, list);
      } else {
        response = json_response(200, to_json(load_fixture(parts[1])));
      }
    } else {
      response = error_response(404, "NotFound", "no route for " + std::string(path));
    }
  } catch (const VafError& e) {
    response = error_response(domain_status(e.code()), e);
  } catch (const std::exception& e) {
    response = error_response(500, "InternalError", e.what());
  }
  response.headers["engineVersion"] = std::string(kEngineVersion);
  return response;
}

Response DisputeService::create(std::string_view body) {
  std::shared_ptr<Session> session;
  std::vector<std::string> warnings;
  try {
    FrameworkDocument doc = parse_framework(body);
    Vaf vaf = to_vaf(doc, &warnings);
    session = std::make_shared<Session>(fresh_id(), doc.orders, std::move(vaf), now());
  } catch (const VafError& e) {
    return error_response(400, e);
  }
  {
    std::unique_lock lock(sessions_mutex_);
    while (sessions_.contains(session->id)) session->id = fresh_id();
    sessions_[session->id] = session;
  }
  return json_response(201, {{"id", session->id},
                             {"revision", 0},
                             {"historyLength", 0},
                             {"warnings", warnings},
                             {"document", document_to_json(to_document(session->current, session->orders))}});
}

Response DisputeService::route_session(std::string_view method, const std::string& id,
                                       std::string_view rest, const Query& query,
                                       std::string_view body) {
  auto session = find(id);
  if (!session) return error_response(404, "UnknownSession", "no session " + id);

  auto summary = [&] {
    return json{{"id", session->id},
                {"revision", session->revision},
                {"historyLength", session->history.size()},
                {"document", document_to_json(to_document(session->current, session->orders))}};
  };
  // Reads share the session lock; results are memoised per revision.
  auto cached = [&](const std::string& key, const std::function<json()>& compute) {
    {
      std::lock_guard guard(session->cache_mutex);
      if (auto it = session->cache.find(key); it != session->cache.end()) return it->second;
    }
    json value = compute();
    std::lock_guard guard(session->cache_mutex);
    session->cache.emplace(key, value);
    return value;
  };
  auto invalidate = [&] {
    ++session->revision;
    std::lock_guard guard(session->cache_mutex);
    session->cache.clear();
  };
  auto param = [&](const std::string& key) -> std::optional<std::string> {
    auto it = query.find(key);
    if (it == query.end()) return std::nullopt;
    return it->second;
  };

  const bool get = method == "GET";
  const bool post = method == "POST";

  if (rest.empty() && get) {
    std::shared_lock lock(session->mutex);
    return json_response(200, document_to_json(to_document(session->current, session->orders)));
  }
  if (rest == "status" && get) {
    std::shared_lock lock(session->mutex);
    return json_response(200, cached("status", [&] {
      return to_json(status_map(session->current, options_.limits));
    }));
  }
  if (rest == "extension" && get) {
    auto order_text = param("order");
    if (!order_text) return error_response(400, "SchemaError", "missing query parameter 'order'", {"order"});
    std::vector<ValueId> ranking = split(*order_text, ',');
    std::shared_lock lock(session->mutex);
    return json_response(200, cached("extension:" + *order_text, [&] {
      const ValueOrder order = ValueOrder::total(session->current, ranking);
      const OrderOutcome outcome = evaluate_order(session->current, order, options_.limits);
      return json{{"order", *order.ranking()},
                  {"accepted", to_json(outcome.accepted)},
                  {"scepticalFallback", outcome.sceptical_fallback}};
    }));
  }
  if (rest == "chains" && get) {
    std::shared_lock lock(session->mutex);
    return json_response(200, cached("chains", [&] {
      const ChainDecomposition chains = decompose_chains(session->current);
      json out = to_json(chains);
      out["classification"] = to_json(classify_dichromatic(session->current, chains));
      return out;
    }));
  }
  if (rest == "export" && get) {
    const std::string format = param("format").value_or("dot");
    std::shared_lock lock(session->mutex);
    if (format == "canonical")
      return {200, serialize_framework(to_document(session->current, session->orders)),
              "application/json", {}};
    if (format != "dot")
      return error_response(400, "SchemaError", "format must be dot or canonical", {"format"});
    std::optional<std::map<ArgumentId, ArgStatus>> overlay;
    if (param("overlay").value_or("") == "status")
      overlay = status_map(session->current, options_.limits).statuses;
    return {200, export_dot(session->current, overlay ? &*overlay : nullptr), "text/vnd.graphviz",
            {}};
  }
  if (rest == "moves/suggest" && post) {
    const json request = parse_body(body);
    const std::string target = body_string(request, "target");
    const ArgStatus desired = parse_status(body_string(request, "desired"));
    SuggestOptions opts;
    opts.limits = options_.limits;
    opts.exhaustive = request.value("exhaustive", false);
    std::shared_lock lock(session->mutex);
    json list = json::array();
    for (const auto& s : suggest_moves(session->current, target, desired, opts))
      list.push_back(to_json(s));
    return json_response(200, {{"target", target},
                               {"desired", status_name(desired)},
                               {"suggestions", list}});
  }
  if (rest == "moves/apply" && post) {
    const json request = parse_body(body);
    const Move move = move_from_json(body_field(request, "move"));
    std::unique_lock lock(session->mutex);
    Vaf next = apply_move(session->current, move);
    session->history.emplace_back(std::move(session->current), move);
    session->current = std::move(next);
    invalidate();
    return json_response(200, summary());
  }
  if (rest == "undo" && post) {
    std::unique_lock lock(session->mutex);
    if (session->history.empty())
      return error_response(422, "EmptyHistory", "nothing to undo");
    session->current = std::move(session->history.back().first);
    session->history.pop_back();
    invalidate();
    return json_response(200, summary());
  }
  if (rest.empty() || rest == "status" || rest == "extension" || rest == "chains" ||
      rest == "export" || rest == "moves/suggest" || rest == "moves/apply" || rest == "undo")
    return error_response(405, "MethodNotAllowed", "method not allowed here");
  return error_response(404, "NotFound", "no route for " + std::string(rest));
}

void bind_routes(httplib::Server& server, DisputeService& service) {
  auto forward = [&service](const char* method) {
    return [&service, method](const httplib::Request& req, httplib::Response& res) {
      Query query;
      for (const auto& [k, v] : req.params) query.emplace(k, v);
      Response r = service.handle(method, req.path, query, req.body);
      res.status = r.status;
      for (const auto& [k, v] : r.headers) res.set_header(k, v);
      res.set_content(r.body, r.content_type);
    };
  };
  server.Get(".*", forward("GET"));
  server.Post(".*", forward("POST"));
  server.Put(".*", forward("PUT"));
  server.Delete(".*", forward("DELETE"));
}

bool serve(DisputeService& service, const std::string& host, int port) {
  httplib::Server server;
  bind_routes(server, service);
  return server.listen(host, port);
}

}  // namespace vafw
