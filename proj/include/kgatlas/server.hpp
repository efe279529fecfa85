#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kgatlas/dot.hpp"
#include "kgatlas/facets.hpp"
#include "kgatlas/ontology.hpp"
#include "kgatlas/parser.hpp"
#include "kgatlas/provenance.hpp"
#include "kgatlas/renderer.hpp"

namespace httplib {
class Server;
}

namespace kgatlas::server {

using json = nlohmann::json;

// Closed set of error codes carried in every error body.
enum class ErrorCode {
  not_found,
  bad_request,
  syntax_error,
  unknown_seed,
  bad_depth,
  renderer_unavailable,
  span_out_of_bounds,
  unknown_document,
  malformed_span,
};

std::string_view to_string(ErrorCode code);
int http_status(ErrorCode code);

class ApiError : public std::runtime_error {
 public:
  ApiError(ErrorCode code, std::string message,
           std::optional<std::size_t> line = std::nullopt,
           std::optional<std::size_t> column = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> line() const { return line_; }
  std::optional<std::size_t> column() const { return column_; }
  // {code, message, line?, column?}
  json body() const;

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> column_;
};

// Wire schema.
json to_json(const facet::ViewGraph& view);
json to_json(const std::vector<facet::ConceptFacet>& concepts,
             const std::vector<facet::IndividualFacet>& individuals);
json to_json(const std::vector<facet::TableRow>& rows);
json to_json(const prov::TextSpan& span);

// Parses a node reference as sent by clients: `_:label` or an IRI.
rdf::Term parse_node_ref(std::string_view text);

struct Session {
  std::string id;
  rdf::Graph graph;
  prov::DocumentStore store;
  std::chrono::system_clock::time_point created_at;
  mutable std::atomic<std::uint64_t> last_used{0};
};

// Bounded session map with least-recently-used eviction. Lookups take a
// shared lock; only insertion (and the eviction it may trigger) is exclusive.
class SessionStore {
 public:
  explicit SessionStore(std::size_t capacity = 64);

  std::shared_ptr<const Session> insert(rdf::Graph graph, prov::DocumentStore store);
  std::shared_ptr<const Session> find(std::string_view id) const;
  std::size_t size() const;
  std::size_t capacity() const { return capacity_; }

 private:
  std::string fresh_id();

  std::size_t capacity_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>, std::less<>> sessions_;
  mutable std::atomic<std::uint64_t> clock_{0};
  std::mutex rng_mutex_;
  std::mt19937_64 rng_;
};

using Params = std::multimap<std::string, std::string>;

struct Response {
  int status = 200;
  std::string content_type;
  std::string body;
};

struct ServiceConfig {
  std::size_t session_cap = 64;
  render::RendererConfig renderer;
  std::optional<std::filesystem::path> icon_dir;
  std::optional<std::string> hyperlink_base;
};

// Request handling independent of the HTTP transport. Every method throws
// ApiError on failure.
class Service {
 public:
  Service(onto::Ontology ontology, ServiceConfig config = {});

  const onto::Ontology& ontology() const { return ontology_; }
  const SessionStore& sessions() const { return sessions_; }

  std::string create_session(std::string_view rdf_text, rdf::Format format,
                             std::map<std::string, std::string> documents);

  json languages() const;
  json facets(std::string_view id, std::string_view lang) const;
  // `format` param selects view | dot | svg | table.
  Response view(std::string_view id, const Params& params) const;
  Response table(std::string_view id, const Params& params) const;
  Response document(std::string_view id, std::string_view doc_id) const;
  json document_list(std::string_view id) const;
  json nodes_at(std::string_view id, std::string_view doc_id, const Params& params) const;
  json spans(std::string_view id, const Params& params) const;

 private:
  std::shared_ptr<const Session> require(std::string_view id) const;
  facet::ViewGraph build_view(const Session& session, const Params& params) const;

  onto::Ontology ontology_;
  ServiceConfig config_;
  SessionStore sessions_;
};

// HTTP binding of Service under /api, plus optional static assets.
class HttpServer {
 public:
  explicit HttpServer(Service& service,
                      std::optional<std::filesystem::path> static_dir = std::nullopt);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Returns false when the address cannot be bound.
  bool bind(const std::string& host, int port);
  // Binds an ephemeral port and returns it, or -1.
  int bind_any_port(const std::string& host);
  // Blocks until stop().
  bool listen();
  void stop();
  void wait_until_ready() const;

 private:
  void install_routes();

  Service& service_;
  std::unique_ptr<httplib::Server> http_;
};

}  // namespace kgatlas::server
