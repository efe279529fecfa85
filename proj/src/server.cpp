#include "kgatlas/server.hpp"

#include <charconv>
#include <cstdio>

#include "httplib.h"

namespace kgatlas::server {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_found: return "not_found";
    case ErrorCode::bad_request: return "bad_request";
    case ErrorCode::syntax_error: return "syntax_error";
    case ErrorCode::unknown_seed: return "unknown_seed";
    case ErrorCode::bad_depth: return "bad_depth";
    case ErrorCode::renderer_unavailable: return "renderer_unavailable";
    case ErrorCode::span_out_of_bounds: return "span_out_of_bounds";
    case ErrorCode::unknown_document: return "unknown_document";
    case ErrorCode::malformed_span: return "malformed_span";
  }
  return "bad_request";
}

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_found: return 404;
    case ErrorCode::bad_request:
    case ErrorCode::syntax_error:
    case ErrorCode::bad_depth: return 400;
    case ErrorCode::unknown_seed:
    case ErrorCode::span_out_of_bounds:
    case ErrorCode::unknown_document:
    case ErrorCode::malformed_span: return 422;
    case ErrorCode::renderer_unavailable: return 503;
  }
  return 400;
}

ApiError::ApiError(ErrorCode code, std::string message, std::optional<std::size_t> line,
                   std::optional<std::size_t> column)
    : std::runtime_error(std::move(message)), code_(code), line_(line), column_(column) {}

json ApiError::body() const {
  json b = {{"code", to_string(code_)}, {"message", what()}};
  if (line_) b["line"] = *line_;
  if (column_) b["column"] = *column_;
  return b;
}

// ---------------------------------------------------------------------------
// Wire schema

namespace {

json optional_iri(const std::optional<rdf::Iri>& iri) {
  return iri ? json(iri->value) : json(nullptr);
}

}  // namespace

json to_json(const prov::TextSpan& span) {
  return {{"doc", span.doc}, {"begin", span.begin}, {"end", span.end}};
}

json to_json(const facet::ViewGraph& view) {
  json nodes = json::array();
  for (const auto& n : view.nodes) {
    json tooltip = json::array();
    for (const auto& e : n.tooltip) tooltip.push_back({{"property", e.property}, {"value", e.value}});
    json spans = json::array();
    for (const auto& s : n.spans) spans.push_back(to_json(s));
    nodes.push_back({{"id", rdf::display_id(n.id)},
                     {"label", n.label},
                     {"classIri", optional_iri(n.class_iri)},
                     {"classLabel", n.class_label},
                     {"iconKey", n.icon_key ? json(*n.icon_key) : json(nullptr)},
                     {"tooltip", std::move(tooltip)},
                     {"spans", std::move(spans)}});
  }
  json edges = json::array();
  for (const auto& e : view.edges) {
    edges.push_back({{"source", rdf::display_id(e.source)},
                     {"target", rdf::display_id(e.target)},
                     {"property", e.property.value},
                     {"label", e.label}});
  }
  json seeds = json::array();
  for (const auto& s : view.request.seeds) seeds.push_back(rdf::display_id(s));
  return {{"nodes", std::move(nodes)},
          {"edges", std::move(edges)},
          {"lang", view.lang},
          {"depth", view.request.depth},
          {"seeds", std::move(seeds)}};
}

json to_json(const std::vector<facet::ConceptFacet>& concepts,
             const std::vector<facet::IndividualFacet>& individuals) {
  json c = json::array();
  for (const auto& f : concepts) {
    c.push_back({{"classIri", f.class_iri.value},
                 {"label", f.label},
                 {"instanceCount", f.instance_count}});
  }
  json i = json::array();
  for (const auto& f : individuals) {
    i.push_back({{"iri", rdf::display_id(f.iri)},
                 {"label", f.label},
                 {"classIri", optional_iri(f.class_iri)}});
  }
  return {{"concepts", std::move(c)}, {"individuals", std::move(i)}};
}

json to_json(const std::vector<facet::TableRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"subject", r.subject}, {"predicate", r.predicate}, {"object", r.object}});
  }
  return out;
}

rdf::Term parse_node_ref(std::string_view text) {
  if (text.starts_with("_:")) return rdf::BlankNode(std::string(text.substr(2)));
  return rdf::Iri(std::string(text));
}

// ---------------------------------------------------------------------------
// Sessions

SessionStore::SessionStore(std::size_t capacity)
    : capacity_(capacity == 0 ? 1 : capacity), rng_(std::random_device{}()) {}

std::string SessionStore::fresh_id() {
  std::lock_guard lock(rng_mutex_);
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(rng_()),
                static_cast<unsigned long long>(rng_()));
  return buf;
}

std::shared_ptr<const Session> SessionStore::insert(rdf::Graph graph, prov::DocumentStore store) {
  auto session = std::make_shared<Session>();
  session->graph = std::move(graph);
  session->store = std::move(store);
  session->created_at = std::chrono::system_clock::now();
  session->last_used = ++clock_;

  std::unique_lock lock(mutex_);
  do {
    session->id = fresh_id();
  } while (sessions_.contains(session->id));
  while (sessions_.size() >= capacity_) {
    auto oldest = sessions_.begin();
    for (auto it = sessions_.begin(); it != sessions_.end(); ++it) {
      if (it->second->last_used < oldest->second->last_used) oldest = it;
    }
    sessions_.erase(oldest);
  }
  sessions_.emplace(session->id, session);
  return session;
}

std::shared_ptr<const Session> SessionStore::find(std::string_view id) const {
  std::shared_lock lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return nullptr;
  it->second->last_used = ++clock_;
  return it->second;
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(mutex_);
  return sessions_.size();
}

// ---------------------------------------------------------------------------
// Service

namespace {

std::optional<std::string> param(const Params& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

std::string param_or(const Params& params, const std::string& key, std::string fallback) {
  auto v = param(params, key);
  return v && !v->empty() ? *v : fallback;
}

// Seeds arrive as repeated `seeds` parameters, each possibly holding several
// whitespace-separated references (IRIs never contain whitespace).
std::vector<rdf::Term> seeds_from(const Params& params) {
  std::vector<rdf::Term> out;
  for (const char* key : {"seeds", "seed"}) {
    auto [lo, hi] = params.equal_range(key);
    for (auto it = lo; it != hi; ++it) {
      std::string_view rest = it->second;
      while (!rest.empty()) {
        auto start = rest.find_first_not_of(" \t\r\n");
        if (start == std::string_view::npos) break;
        rest.remove_prefix(start);
        auto end = rest.find_first_of(" \t\r\n");
        out.push_back(parse_node_ref(rest.substr(0, end)));
        rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
      }
    }
  }
  return out;
}

std::string describe_terms(const std::vector<rdf::Term>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += ", ";
    out += rdf::display_id(t);
  }
  return out;
}

}  // namespace

Service::Service(onto::Ontology ontology, ServiceConfig config)
    : ontology_(std::move(ontology)), config_(std::move(config)), sessions_(config_.session_cap) {}

std::shared_ptr<const Session> Service::require(std::string_view id) const {
  auto session = sessions_.find(id);
  if (!session) throw ApiError(ErrorCode::not_found, "unknown session '" + std::string(id) + "'");
  return session;
}

std::string Service::create_session(std::string_view rdf_text, rdf::Format format,
                                    std::map<std::string, std::string> documents) {
  rdf::Graph graph;
  try {
    graph = rdf::parse_rdf(rdf_text, format);
  } catch (const rdf::SyntaxError& e) {
    throw ApiError(ErrorCode::syntax_error, e.message(), e.line(), e.column());
  }
  prov::DocumentStore store;
  try {
    store = prov::load_provenance(graph, std::move(documents));
  } catch (const prov::SpanOutOfBounds& e) {
    throw ApiError(ErrorCode::span_out_of_bounds, e.what());
  } catch (const prov::UnknownDocument& e) {
    throw ApiError(ErrorCode::unknown_document, e.what());
  } catch (const prov::MalformedSpan& e) {
    throw ApiError(ErrorCode::malformed_span, e.what());
  } catch (const prov::ProvenanceError& e) {
    throw ApiError(ErrorCode::bad_request, e.what());
  }
  return sessions_.insert(std::move(graph), std::move(store))->id;
}

json Service::languages() const { return ontology_.supported_languages(); }

json Service::facets(std::string_view id, std::string_view lang) const {
  auto session = require(id);
  const std::string tag = lang.empty() ? "en" : std::string(lang);
  return to_json(facet::list_concepts(session->graph, ontology_, tag),
                 facet::list_individuals(session->graph, ontology_, tag));
}

facet::ViewGraph Service::build_view(const Session& session, const Params& params) const {
  facet::SubgraphRequest request;
  const std::string mode = param_or(params, "mode", "individual");
  auto parsed_mode = facet::mode_from_name(mode);
  if (!parsed_mode) throw ApiError(ErrorCode::bad_request, "mode must be concept or individual");
  request.mode = *parsed_mode;
  request.seeds = seeds_from(params);
  if (request.seeds.empty()) throw ApiError(ErrorCode::bad_request, "at least one seed is required");
  request.lang = param_or(params, "lang", "en");

  if (auto depth = param(params, "depth"); depth && !depth->empty()) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(depth->data(), depth->data() + depth->size(), value);
    if (ec != std::errc() || ptr != depth->data() + depth->size()) {
      throw ApiError(ErrorCode::bad_depth, "depth must be an integer");
    }
    if (value < 0) throw ApiError(ErrorCode::bad_depth, "depth must be non-negative");
    request.depth = value;
  }

  try {
    return facet::extract_subgraph(session.graph, ontology_, request, &session.store);
  } catch (const facet::UnknownSeed& e) {
    throw ApiError(ErrorCode::unknown_seed,
                   "seeds match nothing in the graph: " + describe_terms(e.seeds()));
  }
}

Response Service::view(std::string_view id, const Params& params) const {
  auto session = require(id);
  const std::string format = param_or(params, "format", "view");
  if (format != "view" && format != "dot" && format != "svg" && format != "table") {
    throw ApiError(ErrorCode::bad_request, "format must be view, dot, svg or table");
  }
  const std::string layout_name = param_or(params, "layout", "hierarchical");
  auto layout = dot::layout_from_name(layout_name);
  if (!layout) throw ApiError(ErrorCode::bad_request, "layout must be hierarchical, radial or circular");

  facet::ViewGraph view = build_view(*session, params);

  if (format == "view") return {200, "application/json; charset=utf-8", to_json(view).dump()};
  if (format == "table") {
    auto rows = facet::triple_table(view, session->graph, ontology_, view.lang);
    return {200, "application/json; charset=utf-8", to_json(rows).dump()};
  }

  dot::EmitOptions options;
  options.include_tooltips = param_or(params, "tooltips", "true") != "false";
  options.hyperlink_base = config_.hyperlink_base;
  options.icon_dir = config_.icon_dir;
  dot::DotDocument doc = dot::emit_dot(view, *layout, options);
  if (format == "dot") return {200, "text/vnd.graphviz; charset=utf-8", doc.text};

  try {
    return {200, std::string(render::content_type(render::OutputFormat::svg)),
            render::render(doc, render::OutputFormat::svg, config_.renderer)};
  } catch (const render::RendererUnavailable& e) {
    throw ApiError(ErrorCode::renderer_unavailable, e.what());
  }
}

Response Service::table(std::string_view id, const Params& params) const {
  Params copy = params;
  copy.erase("format");
  copy.emplace("format", "table");
  return view(id, copy);
}

Response Service::document(std::string_view id, std::string_view doc_id) const {
  auto session = require(id);
  const std::string* text = session->store.document(doc_id);
  if (!text) throw ApiError(ErrorCode::not_found, "unknown document '" + std::string(doc_id) + "'");
  return {200, "text/plain; charset=utf-8", *text};
}

json Service::document_list(std::string_view id) const {
  auto session = require(id);
  json out = json::array();
  for (const auto& [doc_id, text] : session->store.documents()) out.push_back(doc_id);
  return out;
}

json Service::nodes_at(std::string_view id, std::string_view doc_id, const Params& params) const {
  auto session = require(id);
  auto raw = param(params, "offset");
  long long offset = 0;
  if (!raw || std::from_chars(raw->data(), raw->data() + raw->size(), offset).ptr !=
                  raw->data() + raw->size()) {
    throw ApiError(ErrorCode::bad_request, "offset must be an integer");
  }
  std::vector<rdf::Term> nodes;
  try {
    nodes = session->store.nodes_at_offset(doc_id, offset);
  } catch (const prov::UnknownDocument& e) {
    throw ApiError(ErrorCode::not_found, e.what());
  }
  json ids = json::array();
  for (const auto& n : nodes) ids.push_back(rdf::display_id(n));
  return {{"doc", std::string(doc_id)}, {"offset", offset}, {"nodes", std::move(ids)}};
}

json Service::spans(std::string_view id, const Params& params) const {
  auto session = require(id);
  auto node = param(params, "node");
  if (!node || node->empty()) throw ApiError(ErrorCode::bad_request, "node parameter is required");
  json out = json::array();
  for (const auto& s : session->store.spans_for_node(parse_node_ref(*node))) {
    out.push_back(to_json(s));
  }
  return {{"node", *node}, {"spans", std::move(out)}};
}

// ---------------------------------------------------------------------------
// HTTP binding

namespace {

void send_json(httplib::Response& res, const json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json; charset=utf-8");
}

void send_error(httplib::Response& res, const ApiError& e) {
  send_json(res, e.body(), http_status(e.code()));
}

Params to_params(const httplib::Request& req) { return Params(req.params.begin(), req.params.end()); }

std::string stem(const std::string& filename) {
  auto slash = filename.find_last_of("/\\");
  std::string base = slash == std::string::npos ? filename : filename.substr(slash + 1);
  auto dot = base.rfind('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

template <typename Fn>
void guarded(httplib::Response& res, Fn&& fn) {
  try {
    fn();
  } catch (const ApiError& e) {
    send_error(res, e);
  } catch (const json::exception& e) {
    send_error(res, ApiError(ErrorCode::bad_request, e.what()));
  }
}

rdf::Format parse_format_param(const std::string& value, rdf::Format fallback) {
  if (value.empty()) return fallback;
  auto f = rdf::format_from_name(value);
  if (!f) throw ApiError(ErrorCode::bad_request, "format must be turtle or ntriples");
  return *f;
}

}  // namespace

HttpServer::HttpServer(Service& service, std::optional<std::filesystem::path> static_dir)
    : service_(service), http_(std::make_unique<httplib::Server>()) {
  // httplib's default also sets SO_REUSEPORT, which lets a second server
  // share a port that is already in use.
  http_->set_socket_options([](socket_t sock) {
    int yes = 1;
    ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof yes);
  });
  install_routes();
  if (static_dir) http_->set_mount_point("/", static_dir->string());
}

HttpServer::~HttpServer() { stop(); }

void HttpServer::install_routes() {
  auto& http = *http_;
  Service& svc = service_;

  http.Post("/api/sessions", [&svc](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      std::string rdf_text;
      rdf::Format format = rdf::Format::turtle;
      std::map<std::string, std::string> documents;
      const std::string content_type = req.get_header_value("Content-Type");

      if (req.is_multipart_form_data()) {
        if (!req.has_file("rdf")) throw ApiError(ErrorCode::bad_request, "missing 'rdf' part");
        const auto rdf_part = req.get_file_value("rdf");
        rdf_text = rdf_part.content;
        rdf::Format guessed = rdf_part.filename.empty() ? rdf::Format::turtle
                                                        : rdf::format_for_path(rdf_part.filename);
        std::string fmt = req.has_file("format") ? req.get_file_value("format").content
                                                 : req.get_param_value("format");
        format = parse_format_param(fmt, guessed);
        for (const auto& [name, part] : req.files) {
          if (name.starts_with("doc:")) {
            documents[name.substr(4)] = part.content;
          } else if (name == "doc" || name == "document" || name == "documents") {
            if (part.filename.empty()) {
              throw ApiError(ErrorCode::bad_request, "document parts need a filename");
            }
            documents[stem(part.filename)] = part.content;
          }
        }
      } else if (content_type.starts_with("application/json")) {
        json body = json::parse(req.body);
        rdf_text = body.at("rdf").get<std::string>();
        format = parse_format_param(body.value("format", std::string()), rdf::Format::turtle);
        if (body.contains("documents")) {
          for (const auto& [doc_id, text] : body.at("documents").items()) {
            documents[doc_id] = text.get<std::string>();
          }
        }
      } else {
        rdf_text = req.body;
        rdf::Format guessed = content_type.starts_with("application/n-triples")
                                  ? rdf::Format::ntriples
                                  : rdf::Format::turtle;
        format = parse_format_param(req.get_param_value("format"), guessed);
      }

      const std::string id = svc.create_session(rdf_text, format, std::move(documents));
      send_json(res, {{"id", id}}, 201);
    });
  });

  http.Get("/api/meta/languages", [&svc](const httplib::Request&, httplib::Response& res) {
    send_json(res, svc.languages());
  });

  http.Get(R"(/api/sessions/([^/]+)/facets)",
           [&svc](const httplib::Request& req, httplib::Response& res) {
             guarded(res, [&] {
               send_json(res, svc.facets(req.matches[1].str(), req.get_param_value("lang")));
             });
           });

  auto send = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };

  http.Get(R"(/api/sessions/([^/]+)/view)",
           [&svc, send](const httplib::Request& req, httplib::Response& res) {
             guarded(res, [&] { send(res, svc.view(req.matches[1].str(), to_params(req))); });
           });

  http.Get(R"(/api/sessions/([^/]+)/table)",
           [&svc, send](const httplib::Request& req, httplib::Response& res) {
             guarded(res, [&] { send(res, svc.table(req.matches[1].str(), to_params(req))); });
           });

  http.Get(R"(/api/sessions/([^/]+)/spans)",
           [&svc](const httplib::Request& req, httplib::Response& res) {
             guarded(res, [&] { send_json(res, svc.spans(req.matches[1].str(), to_params(req))); });
           });

  http.Get(R"(/api/sessions/([^/]+)/documents)",
           [&svc](const httplib::Request& req, httplib::Response& res) {
             guarded(res, [&] { send_json(res, svc.document_list(req.matches[1].str())); });
           });

  http.Get(R"(/api/sessions/([^/]+)/documents/([^/]+)/nodes)",
           [&svc](const httplib::Request& req, httplib::Response& res) {
             guarded(res, [&] {
               send_json(res, svc.nodes_at(req.matches[1].str(), req.matches[2].str(),
                                           to_params(req)));
             });
           });

  http.Get(R"(/api/sessions/([^/]+)/documents/([^/]+))",
           [&svc, send](const httplib::Request& req, httplib::Response& res) {
             guarded(res, [&] {
               send(res, svc.document(req.matches[1].str(), req.matches[2].str()));
             });
           });

  http.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
    const ErrorCode code = res.status == 404 ? ErrorCode::not_found : ErrorCode::bad_request;
    const std::string message = res.status == 404 ? "no route for " + req.method + " " + req.path
                                                  : "request rejected";
    send_json(res, ApiError(code, message).body(), res.status);
    return httplib::Server::HandlerResponse::Handled;
  });

  http.set_exception_handler(
      [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string message = "internal error";
        try {
          std::rethrow_exception(ep);
        } catch (const std::exception& e) {
          message = e.what();
        } catch (...) {
        }
        res.status = 500;
        res.set_content(json{{"code", "internal"}, {"message", message}}.dump(),
                        "application/json; charset=utf-8");
      });
}

bool HttpServer::bind(const std::string& host, int port) { return http_->bind_to_port(host, port); }

int HttpServer::bind_any_port(const std::string& host) { return http_->bind_to_any_port(host); }

bool HttpServer::listen() { return http_->listen_after_bind(); }

void HttpServer::stop() {
  if (http_ && http_->is_running()) http_->stop();
}

void HttpServer::wait_until_ready() const { http_->wait_until_ready(); }

}  // namespace kgatlas::server
