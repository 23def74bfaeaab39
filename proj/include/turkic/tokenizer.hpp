// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "turkic/script.hpp"

namespace turkic {

/// Rule set for the whitespace/punctuation tokenizer. One shared rule set
/// per script family; Arabic adds ZWNJ splitting and RTL punctuation.
struct TokenizerRules {
  enum class Family { LatinCyrillic, Arabic };

  Family family = Family::LatinCyrillic;
  /// Characters detached from word edges even if otherwise word-like.
  std::set<char32_t> punctuation_attach;
  /// Apostrophe characters kept word-internal between two letters
  /// ("Ankara'ya" stays one token).
  std::set<char32_t> apostrophe_chars;
  /// Opt-in clitic suffixes (with leading apostrophe) split into their own
  /// token. Off by default for every bundled language.
  std::vector<std::u32string> clitic_patterns;
  bool split_on_zwnj = false;  // Arabic family only

  static TokenizerRules latin_cyrillic();
  static TokenizerRules arabic();
  static TokenizerRules for_script(Script script);
};

/// A surface token with scalar-value offsets into the tokenized text.
struct RawToken {
  std::string text;
  std::size_t start_char = 0;
  std::size_t end_char = 0;  // exclusive

  bool operator==(const RawToken&) const = default;
};

/// Splits NFC text into tokens. Whitespace never appears inside a token;
/// punctuation detaches from word edges; word-internal apostrophes and
/// hyphens between letters do not split. With Arabic rules, ZWNJ is a
/// silent split point (part of no token).
std::vector<RawToken> tokenize(std::string_view text,
                               const TokenizerRules& rules);

/// Sentence spans (scalar-value offsets, end exclusive) covering all
/// non-whitespace. Splits after . ! ? ؟ … followed by whitespace and an
/// upper-case/opening/caseless-letter character; words in `abbreviations`
/// (stored with their trailing period, e.g. "Dr.") never end a sentence.
std::vector<std::pair<std::size_t, std::size_t>> split_sentences(
    std::string_view text, const TokenizerRules& rules,
    const std::set<std::string>& abbreviations = {});

/// Loads one abbreviation per line from data/abbrev/<lang>.txt; empty set
/// when no file is bundled for the language.
std::set<std::string> load_abbreviations(std::string_view lang);

}  // namespace turkic
