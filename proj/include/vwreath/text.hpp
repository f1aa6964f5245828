#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vwreath::text {

std::string_view trim(std::string_view s);

// Splits on `sep` occurring outside (), [], {} and <> nesting.
// Each piece carries its offset into the original text.
struct Piece {
  std::string_view text;
  std::size_t offset;
};
std::vector<Piece> split_top_level(std::string_view s, char sep, std::size_t base_offset = 0);

// Strips `open`...`close` around a trimmed string; throws ParseError otherwise.
std::string_view unwrap(std::string_view s, char open, char close, std::size_t offset = 0);

bool starts_with(std::string_view s, std::string_view prefix);

// Accepts "", "e" and "ε" as the empty word.
std::string_view normalize_empty_word(std::string_view s);

long parse_int(std::string_view s, std::size_t offset = 0);

}  // namespace vwreath::text
