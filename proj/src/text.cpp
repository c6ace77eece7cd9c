// Copyright 2026 The citemetrics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "citemetrics/text.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace citemetrics::text {
namespace {

// U+00C0..U+00FF. Empty entries are non-letters (multiplication and division
// signs) and are kept verbatim.
constexpr std::array<const char*, 64> kLatin1 = {
    "A", "A", "A",  "A", "A", "A", "AE", "C", "E", "E", "E", "E", "I", "I", "I", "I",
    "D", "N", "O",  "O", "O", "O", "O",  "",  "O", "U", "U", "U", "U", "Y", "TH", "ss",
    "a", "a", "a",  "a", "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i", "i", "i",
    "d", "n", "o",  "o", "o", "o", "o",  "",  "o", "u", "u", "u", "u", "y", "th", "y"};

// U+0100..U+017F, one base letter per code point except the ligatures.
constexpr std::string_view kLatinExtA =
    "AaAaAaCcCcCcCcDd"
    "DdEeEeEeEeEeGgGg"
    "GgGgHhHhIiIiIiIi"
    "Ii??JjKkkLlLlLlL"
    "lLlNnNnNnnNnOoOo"
    "Oo??RrRrRrSsSsSs"
    "SsTtTtTtUuUuUuUu"
    "UuUuWwYyYZzZzZzs";

struct Decoded {
  char32_t cp;
  std::size_t len;
};

std::optional<Decoded> decode(std::string_view s, std::size_t i) {
  auto b0 = static_cast<unsigned char>(s[i]);
  auto cont = [&](std::size_t k) -> std::optional<unsigned> {
    if (i + k >= s.size()) return std::nullopt;
    auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) return std::nullopt;
    return b & 0x3Fu;
  };
  if (b0 < 0x80) return Decoded{b0, 1};
  if ((b0 & 0xE0) == 0xC0) {
    auto c1 = cont(1);
    if (!c1) return std::nullopt;
    return Decoded{static_cast<char32_t>(((b0 & 0x1Fu) << 6) | *c1), 2};
  }
  if ((b0 & 0xF0) == 0xE0) {
    auto c1 = cont(1), c2 = cont(2);
    if (!c1 || !c2) return std::nullopt;
    return Decoded{static_cast<char32_t>(((b0 & 0x0Fu) << 12) | (*c1 << 6) | *c2), 3};
  }
  if ((b0 & 0xF8) == 0xF0) {
    auto c1 = cont(1), c2 = cont(2), c3 = cont(3);
    if (!c1 || !c2 || !c3) return std::nullopt;
    return Decoded{static_cast<char32_t>(((b0 & 0x07u) << 18) | (*c1 << 12) | (*c2 << 6) | *c3),
                   4};
  }
  return std::nullopt;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_ascii_punct(char c) {
  auto u = static_cast<unsigned char>(c);
  return (u >= 0x21 && u <= 0x2F) || (u >= 0x3A && u <= 0x40) || (u >= 0x5B && u <= 0x60) ||
         (u >= 0x7B && u <= 0x7E);
}

}  // namespace

std::string strip_diacritics(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    auto d = decode(s, i);
    if (!d) {
      out.push_back(s[i]);
      ++i;
      continue;
    }
    char32_t cp = d->cp;
    if (cp >= 0xC0 && cp <= 0xFF && *kLatin1[cp - 0xC0] != '\0') {
      out += kLatin1[cp - 0xC0];
    } else if (cp >= 0x100 && cp <= 0x17F) {
      switch (cp) {
        case 0x132: out += "IJ"; break;
        case 0x133: out += "ij"; break;
        case 0x152: out += "OE"; break;
        case 0x153: out += "oe"; break;
        default: out.push_back(kLatinExtA[cp - 0x100]);
      }
    } else if (cp >= 0x300 && cp <= 0x36F) {
      // combining mark: dropped
    } else {
      out.append(s.substr(i, d->len));
    }
    i += d->len;
  }
  return out;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending = false;
  for (char c : s) {
    if (is_space(c)) {
      pending = !out.empty();
      continue;
    }
    if (pending) out.push_back(' ');
    pending = false;
    out.push_back(c);
  }
  return out;
}

std::string fold(std::string_view s) {
  return collapse_whitespace(ascii_lower(strip_diacritics(s)));
}

std::string fold_words(std::string_view s) {
  std::string t = ascii_lower(strip_diacritics(s));
  for (char& c : t) {
    if (is_ascii_punct(c)) c = ' ';
  }
  return collapse_whitespace(t);
}

std::string first_code_point(std::string_view s) {
  if (s.empty()) return {};
  auto d = decode(s, 0);
  return std::string(s.substr(0, d ? d->len : 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (is_space(c)) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace citemetrics::text
