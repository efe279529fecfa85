#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kgatlas/dot.hpp"

namespace kgatlas::render {

enum class OutputFormat { svg, png, pdf };

std::optional<OutputFormat> output_format_from_name(std::string_view name);
std::string_view to_string(OutputFormat format);
std::string_view content_type(OutputFormat format);

class RendererUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RendererConfig {
  // Directory holding the layout engines; PATH is searched when unset.
  std::optional<std::filesystem::path> directory;
};

std::optional<std::filesystem::path> find_engine(std::string_view engine,
                                                 const RendererConfig& config);

// Runs `<engine> -T<format>` with the DOT text on stdin and returns stdout.
// Throws RendererUnavailable when the engine is missing or exits non-zero.
std::string render(const dot::DotDocument& doc, OutputFormat format,
                   const RendererConfig& config);

}  // namespace kgatlas::render
