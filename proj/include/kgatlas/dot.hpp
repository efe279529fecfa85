#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "kgatlas/facets.hpp"

namespace kgatlas::dot {

enum class Layout { hierarchical, radial, circular };

std::optional<Layout> layout_from_name(std::string_view name);
std::string_view to_string(Layout layout);

// hierarchical -> dot, radial -> twopi, circular -> circo
std::string_view layout_engine_for(Layout layout);

// Escapes the body of a DOT double-quoted string.
std::string escape_dot(std::string_view text);

// Percent-encodes everything outside the RFC 3986 unreserved set.
std::string percent_encode(std::string_view text);

struct EmitOptions {
  std::optional<std::string> hyperlink_base;
  bool include_tooltips = true;
  // Directory holding `<iconKey>.png` / `<iconKey>.svg` assets.
  std::optional<std::filesystem::path> icon_dir;
};

struct DotDocument {
  std::string text;
  std::string engine;
};

// Fonts, sizes and colours applied to every statement.
struct Theme {
  std::string_view font = "Noto Sans";
  std::string_view node_font_size = "11";
  std::string_view edge_font_size = "9";
  std::string_view edge_color = "#555555";
};

inline constexpr Theme kTheme{};

// Shape used when no icon asset is available; keyed on the class local name.
std::string_view shape_for_class(const std::optional<rdf::Iri>& class_iri);

DotDocument emit_dot(const facet::ViewGraph& view, Layout layout,
                     const EmitOptions& options = {});

}  // namespace kgatlas::dot
