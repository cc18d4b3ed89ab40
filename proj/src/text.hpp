#pragma once

// Small helpers for the input grammars (groups, fields, manifolds, literals).

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pinless/error.hpp"

namespace pinless::text {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Splits on commas that are not nested inside (), [] or {}.
inline std::vector<std::string_view> split_top_level(std::string_view s, char sep = ',') {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    else if (c == ')' || c == ']' || c == '}') --depth;
    else if (c == sep && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
    if (depth < 0) throw ParseError("unbalanced brackets in '" + std::string(s) + "'");
  }
  if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(s) + "'");
  parts.push_back(trim(s.substr(start)));
  return parts;
}

struct Call {
  std::string_view name;
  std::vector<std::string_view> args;
};

/// Parses `name(arg, arg, ...)`; a bare identifier yields no args.
inline Call parse_call(std::string_view s) {
  s = trim(s);
  const std::size_t open = s.find('(');
  if (open == std::string_view::npos) return {s, {}};
  if (s.back() != ')') throw ParseError("expected ')' at end of '" + std::string(s) + "'");
  Call call{trim(s.substr(0, open)), {}};
  std::string_view inner = trim(s.substr(open + 1, s.size() - open - 2));
  if (!inner.empty()) call.args = split_top_level(inner);
  return call;
}

inline std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

inline bool is_integer(std::string_view s) {
  s = trim(s);
  if (s.empty()) return false;
  std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace pinless::text
