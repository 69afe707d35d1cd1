#ifndef BNC_UTF8_HPP_
#define BNC_UTF8_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bnc::utf8 {

struct DecodeError : std::runtime_error {
  std::size_t byte_offset;
  explicit DecodeError(std::size_t offset)
      : std::runtime_error("invalid UTF-8 sequence at byte offset " +
                           std::to_string(offset)),
        byte_offset(offset) {}
};

inline void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string encode(char32_t cp) {
  std::string s;
  append(s, cp);
  return s;
}

inline std::string encode(const std::vector<char32_t>& cps) {
  std::string s;
  for (char32_t cp : cps) append(s, cp);
  return s;
}

/// Decodes `text` into `out`, returning the byte offset of the first invalid
/// sequence, or nullopt on success. Overlong encodings and surrogates are
/// rejected.
inline std::optional<std::size_t> try_decode(std::string_view text,
                                             std::vector<char32_t>& out) {
  out.clear();
  out.reserve(text.size());
  std::size_t i = 0;
  const auto n = text.size();
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    int len;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      return i;
    }
    if (i + len > n) return i;
    for (int k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      return i;
    out.push_back(cp);
    i += len;
  }
  return std::nullopt;
}

inline std::vector<char32_t> decode(std::string_view text) {
  std::vector<char32_t> out;
  if (auto bad = try_decode(text, out)) throw DecodeError(*bad);
  return out;
}

}  // namespace bnc::utf8

#endif  // BNC_UTF8_HPP_
