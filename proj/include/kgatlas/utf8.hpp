#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace kgatlas::utf8 {

// Decodes one codepoint starting at `pos`. On success advances `pos` past the
// sequence. Rejects overlong forms, surrogates and values above U+10FFFF.
std::optional<char32_t> decode(std::string_view text, std::size_t& pos);

void append(std::string& out, char32_t cp);

// Byte offset of the first invalid sequence, or nullopt if `text` is valid.
std::optional<std::size_t> find_invalid(std::string_view text);

// Number of codepoints; `text` must be valid UTF-8.
std::size_t length(std::string_view text);

}  // namespace kgatlas::utf8
