#include "support/http_harness.hpp"

#include <stdexcept>

#include "support/fixtures.hpp"

namespace kgatlas::testing {

LiveServer::LiveServer(onto::Ontology ontology, server::ServiceConfig config)
    : service_(std::move(ontology), std::move(config)), http_(service_) {
  port_ = http_.bind_any_port("127.0.0.1");
  if (port_ <= 0) throw std::runtime_error("cannot bind loopback port");
  thread_ = std::thread([this] { http_.listen(); });
  http_.wait_until_ready();
}

LiveServer::~LiveServer() {
  http_.stop();
  if (thread_.joinable()) thread_.join();
}

httplib::Client LiveServer::client() const {
  httplib::Client c("127.0.0.1", port_);
  c.set_connection_timeout(5);
  c.set_read_timeout(10);
  return c;
}

std::string LiveServer::upload_fixture() {
  httplib::MultipartFormDataItems items{
      {"rdf", read_text(source_path("fixtures/benghazi.ttl")), "benghazi.ttl", "text/turtle"},
      {"doc:ex1", read_text(source_path("fixtures/ex1.txt")), "ex1.txt", "text/plain"},
  };
  auto res = client().Post("/api/sessions", items);
  if (!res || res->status != 201) throw std::runtime_error("fixture upload failed");
  return nlohmann::json::parse(res->body).at("id").get<std::string>();
}

}  // namespace kgatlas::testing
