// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace turkic::uni {

/// Decodes UTF-8 into Unicode scalar values. Throws ParseError carrying the
/// byte offset of the first invalid sequence.
std::u32string decode_utf8(std::string_view text);

/// Encodes scalar values back to UTF-8. Input must be valid scalar values.
std::string encode_utf8(std::u32string_view codepoints);

std::string encode_utf8(char32_t cp);

/// Number of Unicode scalar values in a UTF-8 string.
std::size_t length(std::string_view text);

/// NFC normalization (ICU-backed). Total and idempotent.
std::string nfc(std::string_view text);

// Case mapping for the Latin, Cyrillic and common punctuation ranges used by
// Turkic orthographies. These are simple one-to-one mappings; when
// `turkic_i` is set the dotted/dotless I rule applies: lower('I') = 'ı',
// lower('İ') = 'i', upper('i') = 'İ', upper('ı') = 'I'.
char32_t to_lower(char32_t cp, bool turkic_i = false);
char32_t to_upper(char32_t cp, bool turkic_i = false);
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);

std::u32string to_lower(std::u32string_view s, bool turkic_i = false);
std::u32string to_upper(std::u32string_view s, bool turkic_i = false);

/// Combining marks (Mn ranges relevant to the supported scripts: general
/// diacriticals, Cyrillic and Arabic marks). They inherit the script of
/// their base character during detection.
bool is_combining_mark(char32_t cp);

bool is_digit(char32_t cp);

/// Format controls that carry no script of their own (ZWNJ, ZWJ, direction
/// marks).
bool is_format_control(char32_t cp);

constexpr char32_t kZwnj = U'‌';
constexpr char32_t kZwj = U'‍';

}  // namespace turkic::uni
