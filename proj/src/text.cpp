#include "vwreath/text.hpp"

#include <charconv>

#include "vwreath/error.hpp"

namespace vwreath::text {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<Piece> split_top_level(std::string_view s, char sep, std::size_t base_offset) {
  std::vector<Piece> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[' || c == '{' || c == '<') {
      ++depth;
    } else if (c == ')' || c == ']' || c == '}' || c == '>') {
      // "->" inside V tables is an arrow, not a bracket.
      if (c == '>' && i > 0 && s[i - 1] == '-') continue;
      --depth;
      if (depth < 0) throw ParseError("unbalanced bracket", base_offset + i);
    } else if (c == sep && depth == 0) {
      out.push_back({s.substr(start, i - start), base_offset + start});
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced bracket", base_offset + s.size());
  out.push_back({s.substr(start), base_offset + start});
  return out;
}

std::string_view unwrap(std::string_view s, char open, char close, std::size_t offset) {
  s = trim(s);
  if (s.size() < 2 || s.front() != open || s.back() != close) {
    throw ParseError(std::string("expected ") + open + "..." + close, offset);
  }
  return s.substr(1, s.size() - 2);
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::string_view normalize_empty_word(std::string_view s) {
  s = trim(s);
  if (s == "e" || s == "\xce\xb5") return {};
  return s;
}

long parse_int(std::string_view s, std::size_t offset) {
  s = trim(s);
  long value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("expected an integer, got '" + std::string(s) + "'", offset);
  }
  return value;
}

}  // namespace vwreath::text
