// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

// Character-level helpers shared by the Turtle and N-Triples readers.

#ifndef OWLFOL_SRC_RDF_LEX_UTIL_H_
#define OWLFOL_SRC_RDF_LEX_UTIL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace owlfol::rdf::detail {

inline void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Decodes the escape sequence starting at s[pos] == '\\' and advances pos
// past it. Returns an error message on failure.
inline std::optional<std::string> decode_escape(std::string_view s,
                                                std::size_t& pos,
                                                std::string& out) {
  if (pos + 1 >= s.size()) return "dangling backslash";
  char c = s[pos + 1];
  pos += 2;
  switch (c) {
    case 't': out += '\t'; return std::nullopt;
    case 'b': out += '\b'; return std::nullopt;
    case 'n': out += '\n'; return std::nullopt;
    case 'r': out += '\r'; return std::nullopt;
    case 'f': out += '\f'; return std::nullopt;
    case '"': out += '"'; return std::nullopt;
    case '\'': out += '\''; return std::nullopt;
    case '\\': out += '\\'; return std::nullopt;
    case 'u':
    case 'U': {
      std::size_t digits = c == 'u' ? 4 : 8;
      if (pos + digits > s.size()) return "truncated unicode escape";
      std::uint32_t cp = 0;
      for (std::size_t i = 0; i < digits; ++i) {
        char h = s[pos + i];
        cp <<= 4;
        if (h >= '0' && h <= '9') cp |= static_cast<std::uint32_t>(h - '0');
        else if (h >= 'a' && h <= 'f') cp |= static_cast<std::uint32_t>(h - 'a' + 10);
        else if (h >= 'A' && h <= 'F') cp |= static_cast<std::uint32_t>(h - 'A' + 10);
        else return "bad hex digit in unicode escape";
      }
      if (cp > 0x10FFFF) return "unicode escape out of range";
      pos += digits;
      append_utf8(out, cp);
      return std::nullopt;
    }
    default:
      return std::string("unknown escape \\") + c;
  }
}

inline bool is_label_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.' ||
         static_cast<unsigned char>(c) >= 0x80;
}

}  // namespace owlfol::rdf::detail

#endif  // OWLFOL_SRC_RDF_LEX_UTIL_H_
