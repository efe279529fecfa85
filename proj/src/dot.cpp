#include "kgatlas/dot.hpp"

#include <array>
#include <cstdio>
#include <utility>

namespace kgatlas::dot {

std::optional<Layout> layout_from_name(std::string_view name) {
  if (name == "hierarchical") return Layout::hierarchical;
  if (name == "radial") return Layout::radial;
  if (name == "circular") return Layout::circular;
  return std::nullopt;
}

std::string_view to_string(Layout layout) {
  switch (layout) {
    case Layout::hierarchical: return "hierarchical";
    case Layout::radial: return "radial";
    case Layout::circular: return "circular";
  }
  return "hierarchical";
}

std::string_view layout_engine_for(Layout layout) {
  switch (layout) {
    case Layout::hierarchical: return "dot";
    case Layout::radial: return "twopi";
    case Layout::circular: return "circo";
  }
  return "dot";
}

std::string escape_dot(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string percent_encode(std::string_view text) {
  std::string out;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
        c == '-' || c == '.' || c == '_' || c == '~') {
      out.push_back(ch);
    } else {
      char buf[4];
      std::snprintf(buf, sizeof buf, "%%%02X", c);
      out += buf;
    }
  }
  return out;
}

std::string_view shape_for_class(const std::optional<rdf::Iri>& class_iri) {
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 5> kShapes{{
      {"Person", "ellipse"},
      {"Location", "house"},
      {"Organization", "box"},
      {"ViolentAct", "octagon"},
      {"Date", "note"},
  }};
  if (class_iri) {
    const std::string local = rdf::local_name(*class_iri);
    for (const auto& [name, shape] : kShapes) {
      if (local == name) return shape;
    }
  }
  return "ellipse";
}

namespace {

class AttributeList {
 public:
  void add(std::string_view key, std::string_view value) {
    text_ += text_.empty() ? "[" : ", ";
    text_ += key;
    text_ += "=\"";
    text_ += escape_dot(value);
    text_ += '"';
  }
  std::string str() const { return text_.empty() ? std::string() : text_ + "]"; }

 private:
  std::string text_;
};

std::optional<std::filesystem::path> icon_asset(const EmitOptions& options,
                                                const std::optional<std::string>& key) {
  if (!options.icon_dir || !key || key->empty()) return std::nullopt;
  for (const char* ext : {".png", ".svg"}) {
    auto candidate = *options.icon_dir / (*key + ext);
    std::error_code ec;
    if (std::filesystem::is_regular_file(candidate, ec)) return candidate;
  }
  return std::nullopt;
}

}  // namespace

DotDocument emit_dot(const facet::ViewGraph& view, Layout layout, const EmitOptions& options) {
  const std::string engine(layout_engine_for(layout));
  std::string out = "digraph G {\n  layout=\"" + engine + "\";\n";

  for (const auto& node : view.nodes) {
    AttributeList attrs;
    std::string caption = node.label;
    if (node.class_iri) caption += "\n(" + node.class_label + ")";
    attrs.add("label", caption);
    if (auto icon = icon_asset(options, node.icon_key)) {
      attrs.add("shape", "none");
      attrs.add("image", icon->string());
      attrs.add("labelloc", "b");
    } else {
      attrs.add("shape", shape_for_class(node.class_iri));
    }
    if (options.include_tooltips && !node.tooltip.empty()) {
      std::string tip;
      for (const auto& entry : node.tooltip) {
        if (!tip.empty()) tip += '\n';
        tip += entry.property + ": " + entry.value;
      }
      attrs.add("tooltip", tip);
    }
    if (options.hyperlink_base) {
      attrs.add("URL", *options.hyperlink_base + percent_encode(rdf::display_id(node.id)));
    }
    attrs.add("fontname", kTheme.font);
    attrs.add("fontsize", kTheme.node_font_size);
    out += "  \"" + escape_dot(rdf::display_id(node.id)) + "\" " + attrs.str() + ";\n";
  }

  for (const auto& edge : view.edges) {
    AttributeList attrs;
    attrs.add("label", edge.label);
    attrs.add("fontname", kTheme.font);
    attrs.add("fontsize", kTheme.edge_font_size);
    attrs.add("color", kTheme.edge_color);
    out += "  \"" + escape_dot(rdf::display_id(edge.source)) + "\" -> \"" +
           escape_dot(rdf::display_id(edge.target)) + "\" " + attrs.str() + ";\n";
  }

  out += "}\n";
  return DotDocument{std::move(out), engine};
}

}  // namespace kgatlas::dot
