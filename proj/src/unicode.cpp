// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "turkic/unicode.hpp"

#include <unicode/unorm2.h>
#include <unicode/ustring.h>

#include <vector>

#include "turkic/errors.hpp"

namespace turkic::uni {

namespace {

bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

[[noreturn]] void bad_utf8(std::size_t byte_offset) {
  throw ParseError("invalid UTF-8 sequence",
                   "byte " + std::to_string(byte_offset));
}

}  // namespace

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char b0 = static_cast<unsigned char>(text[i]);
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
      bad_utf8(i);
    }
    if (i + len > text.size()) bad_utf8(i);
    for (int k = 1; k < len; ++k) {
      unsigned char b = static_cast<unsigned char>(text[i + k]);
      if (!is_continuation(b)) bad_utf8(i);
      cp = (cp << 6) | (b & 0x3F);
    }
    // Overlongs, surrogates and out-of-range values are all invalid.
    static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      bad_utf8(i);
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(char32_t cp) {
  std::string out;
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
  return out;
}

std::string encode_utf8(std::u32string_view codepoints) {
  std::string out;
  out.reserve(codepoints.size());
  for (char32_t cp : codepoints) out += encode_utf8(cp);
  return out;
}

std::size_t length(std::string_view text) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < text.size(); ++i)
    if (!is_continuation(static_cast<unsigned char>(text[i]))) ++n;
  return n;
}

std::string nfc(std::string_view text) {
  if (text.empty()) return {};
  decode_utf8(text);  // reject invalid input with a byte offset
  UErrorCode status = U_ZERO_ERROR;
  const UNormalizer2* norm = unorm2_getNFCInstance(&status);
  if (U_FAILURE(status)) throw Error(ErrorCode::Generic, "ICU NFC unavailable");

  // UTF-8 -> UTF-16
  std::vector<UChar> u16(text.size() + 1);
  int32_t u16_len = 0;
  status = U_ZERO_ERROR;
  u_strFromUTF8(u16.data(), static_cast<int32_t>(u16.size()), &u16_len,
                text.data(), static_cast<int32_t>(text.size()), &status);
  if (U_FAILURE(status))
    throw ParseError("invalid UTF-8 sequence", "NFC input");

  std::vector<UChar> out16(u16_len * 3 + 32);
  status = U_ZERO_ERROR;
  int32_t out_len =
      unorm2_normalize(norm, u16.data(), u16_len, out16.data(),
                       static_cast<int32_t>(out16.size()), &status);
  if (U_FAILURE(status)) throw Error(ErrorCode::Generic, "NFC normalization failed");

  std::string out(out_len * 4 + 4, '\0');
  int32_t out8_len = 0;
  status = U_ZERO_ERROR;
  u_strToUTF8(out.data(), static_cast<int32_t>(out.size()), &out8_len,
              out16.data(), out_len, &status);
  if (U_FAILURE(status)) throw Error(ErrorCode::Generic, "NFC re-encoding failed");
  out.resize(out8_len);
  return out;
}

namespace {

// Case pairs outside the regular alternating ranges.
struct CasePair {
  char32_t upper, lower;
};
constexpr CasePair kIrregular[] = {
    {0x0178, 0x00FF},  // Ÿ ÿ
    {0x018F, 0x0259},  // Ə ə (Azerbaijani schwa)
    {0x01B7, 0x0292},  // Ʒ ʒ
    {0x04C0, 0x04CF},  // Ӏ ӏ
};

bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

// Ranges where uppercase letters sit on even codepoints and their lowercase
// partner follows at +1.
bool even_upper_range(char32_t cp) {
  return in(cp, 0x0100, 0x0137) || in(cp, 0x014A, 0x0177) ||
         in(cp, 0x01DE, 0x01EF) || in(cp, 0x01F4, 0x01F5) ||
         in(cp, 0x0460, 0x0481) || in(cp, 0x048A, 0x04BF) ||
         in(cp, 0x04D0, 0x04FF) || in(cp, 0x0500, 0x052F) ||
         in(cp, 0x1E00, 0x1E95) || in(cp, 0x1EA0, 0x1EFF);
}

// Ranges where uppercase letters sit on odd codepoints.
bool odd_upper_range(char32_t cp) {
  return in(cp, 0x0139, 0x0148) || in(cp, 0x0179, 0x017E) ||
         in(cp, 0x01CD, 0x01DC) || in(cp, 0x04C1, 0x04CE);
}

}  // namespace

char32_t to_lower(char32_t cp, bool turkic_i) {
  if (cp == U'I') return turkic_i ? U'ı' : U'i';  // I -> ı
  if (cp == U'İ') return U'i';                    // İ -> i
  if (in(cp, U'A', U'Z')) return cp + 32;
  if (in(cp, 0x00C0, 0x00DE) && cp != 0x00D7) return cp + 32;
  if (in(cp, 0x0400, 0x040F)) return cp + 0x50;  // Ѐ..Џ
  if (in(cp, 0x0410, 0x042F)) return cp + 0x20;  // А..Я
  for (const auto& p : kIrregular)
    if (cp == p.upper) return p.lower;
  if (even_upper_range(cp)) return (cp % 2 == 0) ? cp + 1 : cp;
  if (odd_upper_range(cp)) return (cp % 2 == 1) ? cp + 1 : cp;
  return cp;
}

char32_t to_upper(char32_t cp, bool turkic_i) {
  if (cp == U'i') return turkic_i ? char32_t{0x0130} : U'I';  // i -> İ
  if (cp == U'ı') return U'I';                           // ı -> I
  if (in(cp, U'a', U'z')) return cp - 32;
  if (in(cp, 0x00E0, 0x00FE) && cp != 0x00F7) return cp - 32;
  if (in(cp, 0x0450, 0x045F)) return cp - 0x50;
  if (in(cp, 0x0430, 0x044F)) return cp - 0x20;
  for (const auto& p : kIrregular)
    if (cp == p.lower) return p.upper;
  if (even_upper_range(cp)) return (cp % 2 == 1) ? cp - 1 : cp;
  if (odd_upper_range(cp)) return (cp % 2 == 0) ? cp - 1 : cp;
  return cp;
}

bool is_upper(char32_t cp) { return to_lower(cp) != cp; }
bool is_lower(char32_t cp) { return to_upper(cp) != cp; }

std::u32string to_lower(std::u32string_view s, bool turkic_i) {
  std::u32string out;
  out.reserve(s.size());
  for (char32_t cp : s) out.push_back(to_lower(cp, turkic_i));
  return out;
}

std::u32string to_upper(std::u32string_view s, bool turkic_i) {
  std::u32string out;
  out.reserve(s.size());
  for (char32_t cp : s) out.push_back(to_upper(cp, turkic_i));
  return out;
}

bool is_combining_mark(char32_t cp) {
  return in(cp, 0x0300, 0x036F) || in(cp, 0x0483, 0x0489) ||
         in(cp, 0x0610, 0x061A) || in(cp, 0x064B, 0x065F) || cp == 0x0670 ||
         in(cp, 0x06D6, 0x06DC) || in(cp, 0x06DF, 0x06E4) ||
         in(cp, 0x06E7, 0x06E8) || in(cp, 0x06EA, 0x06ED) ||
         in(cp, 0x08D4, 0x08FF) || in(cp, 0x1AB0, 0x1AFF) ||
         in(cp, 0x1DC0, 0x1DFF) || in(cp, 0x20D0, 0x20FF) ||
         in(cp, 0xFE00, 0xFE0F) || in(cp, 0xFE20, 0xFE2F);
}

bool is_digit(char32_t cp) {
  return in(cp, U'0', U'9') || in(cp, 0x0660, 0x0669) || in(cp, 0x06F0, 0x06F9);
}

bool is_format_control(char32_t cp) {
  return in(cp, 0x200B, 0x200F) || in(cp, 0x202A, 0x202E) ||
         in(cp, 0x2060, 0x2064) || cp == 0x061C || cp == 0xFEFF;
}

}  // namespace turkic::uni
