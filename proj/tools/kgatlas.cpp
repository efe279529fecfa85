// kgatlas: render knowledge-graph subgraphs, list facets, or run the HTTP API.

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kgatlas/dot.hpp"
#include "kgatlas/facets.hpp"
#include "kgatlas/ontology.hpp"
#include "kgatlas/parser.hpp"
#include "kgatlas/provenance.hpp"
#include "kgatlas/renderer.hpp"
#include "kgatlas/server.hpp"

namespace {

using namespace kgatlas;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

// Domain failure reported as `error: <code>: <message>`.
struct CliError {
  std::string code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{"io_error", "cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

rdf::ParsedDocument load_rdf(const std::string& path) {
  try {
    return rdf::parse_document(read_file(path), rdf::format_for_path(path));
  } catch (const rdf::SyntaxError& e) {
    throw CliError{"syntax_error", path + ": " + e.what()};
  }
}

onto::Ontology load_ontology_file(const std::string& path) {
  auto doc = load_rdf(path);
  try {
    return onto::load_ontology(doc.graph);
  } catch (const onto::OntologyError& e) {
    throw CliError{"ontology_error", e.what()};
  }
}

// Accepts a full IRI, `_:label`, or a prefixed name declared in the RDF file.
rdf::Term seed_term(const std::string& text, const std::map<std::string, std::string>& prefixes) {
  if (text.starts_with("_:")) return rdf::BlankNode(text.substr(2));
  if (auto colon = text.find(':'); colon != std::string::npos) {
    auto it = prefixes.find(text.substr(0, colon));
    if (it != prefixes.end() && text.compare(colon + 1, 2, "//") != 0) {
      return rdf::Iri(it->second + text.substr(colon + 1));
    }
  }
  return rdf::Iri(text);
}

struct CommonArgs {
  std::string rdf_path;
  std::string ontology_path;
  std::string lang = "en";
};

struct RenderArgs {
  CommonArgs common;
  std::vector<std::string> docs;
  std::string mode = "individual";
  std::vector<std::string> seeds;
  long long depth = 1;
  std::string layout = "hierarchical";
  std::string format = "dot";
  std::string output;
  std::string renderer_dir;
  std::string hyperlink_base;
  std::string icon_dir;
  bool no_tooltips = false;
};

int run_render(const RenderArgs& args) {
  auto ontology = load_ontology_file(args.common.ontology_path);
  auto doc = load_rdf(args.common.rdf_path);

  std::map<std::string, std::string> documents;
  for (const auto& arg : args.docs) {
    auto eq = arg.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw CliError{"usage", "--doc expects <id>=<path>, got '" + arg + "'"};
    }
    documents[arg.substr(0, eq)] = read_file(arg.substr(eq + 1));
  }
  prov::DocumentStore store;
  try {
    store = prov::load_provenance(doc.graph, std::move(documents));
  } catch (const prov::SpanOutOfBounds& e) {
    throw CliError{"span_out_of_bounds", e.what()};
  } catch (const prov::UnknownDocument& e) {
    throw CliError{"unknown_document", e.what()};
  } catch (const prov::ProvenanceError& e) {
    throw CliError{"malformed_span", e.what()};
  }

  facet::SubgraphRequest request;
  request.mode = *facet::mode_from_name(args.mode);
  for (const auto& s : args.seeds) request.seeds.push_back(seed_term(s, doc.prefixes));
  request.depth = args.depth;
  request.lang = args.common.lang;

  facet::ViewGraph view;
  try {
    view = facet::extract_subgraph(doc.graph, ontology, request, &store);
  } catch (const facet::UnknownSeed& e) {
    throw CliError{"unknown_seed", e.what()};
  } catch (const facet::BadDepth& e) {
    throw CliError{"bad_depth", e.what()};
  }

  dot::EmitOptions options;
  options.include_tooltips = !args.no_tooltips;
  if (!args.hyperlink_base.empty()) options.hyperlink_base = args.hyperlink_base;
  if (!args.icon_dir.empty()) options.icon_dir = args.icon_dir;
  auto dot_doc = dot::emit_dot(view, *dot::layout_from_name(args.layout), options);

  std::string bytes = dot_doc.text;
  if (args.format != "dot") {
    render::RendererConfig config;
    if (!args.renderer_dir.empty()) config.directory = args.renderer_dir;
    try {
      bytes = render::render(dot_doc, *render::output_format_from_name(args.format), config);
    } catch (const render::RendererUnavailable& e) {
      throw CliError{"renderer_unavailable", e.what()};
    }
  }

  if (args.output.empty() || args.output == "-") {
    std::cout << bytes;
  } else {
    std::ofstream out(args.output, std::ios::binary);
    out << bytes;
    if (!out) throw CliError{"io_error", "cannot write '" + args.output + "'"};
  }
  return 0;
}

int run_facets(const CommonArgs& args) {
  auto ontology = load_ontology_file(args.ontology_path);
  auto doc = load_rdf(args.rdf_path);
  for (const auto& c : facet::list_concepts(doc.graph, ontology, args.lang)) {
    std::cout << c.label << '\t' << c.class_iri.value << '\t' << c.instance_count << '\n';
  }
  for (const auto& i : facet::list_individuals(doc.graph, ontology, args.lang)) {
    std::cout << i.label << '\t' << rdf::display_id(i.iri) << '\n';
  }
  return 0;
}

server::HttpServer* g_server = nullptr;

extern "C" void on_signal(int) {
  if (g_server) g_server->stop();
}

struct ServeArgs {
  std::string ontology_path;
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string static_dir;
  std::string renderer_dir;
  std::size_t session_cap = 64;
};

int run_serve(const ServeArgs& args) {
  server::ServiceConfig config;
  config.session_cap = args.session_cap;
  if (!args.renderer_dir.empty()) config.renderer.directory = args.renderer_dir;
  server::Service service(load_ontology_file(args.ontology_path), config);

  std::optional<std::filesystem::path> static_dir;
  if (!args.static_dir.empty()) static_dir = args.static_dir;
  server::HttpServer http(service, static_dir);
  if (!http.bind(args.host, args.port)) {
    throw CliError{"port_unavailable",
                   "cannot listen on " + args.host + ":" + std::to_string(args.port)};
  }
  g_server = &http;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cerr << "listening on http://" << args.host << ":" << args.port << "\n";
  http.listen();
  g_server = nullptr;
  return 0;
}

std::string env_or(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Faceted, multilingual RDF knowledge-graph explorer"};
  app.require_subcommand(1);

  RenderArgs render_args;
  render_args.renderer_dir = env_or("KGATLAS_RENDERER", "");
  auto* render_cmd = app.add_subcommand("render", "Render a subgraph to DOT or SVG");
  render_cmd->add_option("--rdf", render_args.common.rdf_path, "RDF graph (Turtle or .nt)")
      ->required();
  render_cmd->add_option("--ontology", render_args.common.ontology_path, "Ontology (Turtle)")
      ->required();
  render_cmd->add_option("--doc", render_args.docs, "Source document as <id>=<path>");
  render_cmd->add_option("--mode", render_args.mode, "Selection mode")
      ->check(CLI::IsMember({"concept", "individual"}));
  render_cmd->add_option("--seed", render_args.seeds, "Seed class or individual")->required();
  render_cmd->add_option("--depth", render_args.depth, "Traversal depth")
      ->check(CLI::NonNegativeNumber);
  render_cmd->add_option("--lang", render_args.common.lang, "Label language");
  render_cmd->add_option("--layout", render_args.layout, "Graph layout")
      ->check(CLI::IsMember({"hierarchical", "radial", "circular"}));
  render_cmd->add_option("--format", render_args.format, "Output format")
      ->check(CLI::IsMember({"dot", "svg", "png", "pdf"}));
  render_cmd->add_option("-o,--output", render_args.output, "Output file (default stdout)");
  render_cmd->add_option("--renderer", render_args.renderer_dir,
                         "Directory holding layout engines");
  render_cmd->add_option("--link-base", render_args.hyperlink_base, "Node hyperlink prefix");
  render_cmd->add_option("--icons", render_args.icon_dir, "Directory of icon assets");
  render_cmd->add_flag("--no-tooltips", render_args.no_tooltips, "Omit node tooltips");

  CommonArgs facet_args;
  auto* facets_cmd = app.add_subcommand("facets", "List concept and individual facets");
  facets_cmd->add_option("--rdf", facet_args.rdf_path, "RDF graph")->required();
  facets_cmd->add_option("--ontology", facet_args.ontology_path, "Ontology")->required();
  facets_cmd->add_option("--lang", facet_args.lang, "Label language");

  ServeArgs serve_args;
  serve_args.ontology_path = env_or("KGATLAS_ONTOLOGY", "");
  serve_args.port = std::atoi(env_or("KGATLAS_PORT", "8080").c_str());
  serve_args.renderer_dir = env_or("KGATLAS_RENDERER", "");
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  serve_cmd->add_option("--ontology", serve_args.ontology_path, "Ontology (Turtle)");
  serve_cmd->add_option("--port", serve_args.port, "TCP port")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", serve_args.host, "Bind address");
  serve_cmd->add_option("--static", serve_args.static_dir, "Static UI asset directory");
  serve_cmd->add_option("--renderer", serve_args.renderer_dir, "Directory holding layout engines");
  serve_cmd->add_option("--max-sessions", serve_args.session_cap, "Session cap")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (render_cmd->parsed()) return run_render(render_args);
    if (facets_cmd->parsed()) return run_facets(facet_args);
    if (serve_cmd->parsed()) {
      if (serve_args.ontology_path.empty()) {
        std::cerr << "error: usage: --ontology or KGATLAS_ONTOLOGY is required\n";
        return kExitUsage;
      }
      return run_serve(serve_args);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.code << ": " << e.message << "\n";
    return e.code == "usage" ? kExitUsage : kExitDomain;
  }
  return kExitUsage;
}
