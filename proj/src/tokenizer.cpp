// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "turkic/tokenizer.hpp"

#include <fstream>

#include "turkic/data_paths.hpp"
#include "turkic/unicode.hpp"

namespace turkic {

namespace {

bool is_space(char32_t cp) {
  return (cp >= 0x09 && cp <= 0x0D) || cp == 0x20 || cp == 0x85 ||
         cp == 0xA0 || cp == 0x1680 || (cp >= 0x2000 && cp <= 0x200A) ||
         cp == 0x2028 || cp == 0x2029 || cp == 0x202F || cp == 0x205F ||
         cp == 0x3000;
}

bool is_letter(char32_t cp) {
  return ScriptTables::instance().is_alphabetic(cp);
}

bool is_sentence_terminator(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'?' || cp == U'؟' /* ؟ */ ||
         cp == U'…' /* … */;
}

bool is_opening(char32_t cp) {
  switch (cp) {
    case U'"':
    case U'\'':
    case U'(':
    case U'[':
    case U'{':
    case U'«':  // «
    case U'‘':
    case U'“':
    case U'‹':
      return true;
    default:
      return false;
  }
}

/// A letter with no case distinction (Arabic, Old Turkic) counts as
/// sentence-initial; cased scripts require an actual capital.
bool starts_sentence(char32_t cp) {
  if (uni::is_upper(cp)) return true;
  if (is_opening(cp) || uni::is_digit(cp)) return true;
  return is_letter(cp) && !uni::is_upper(cp) && !uni::is_lower(cp);
}

std::set<char32_t> default_punctuation() {
  // Detached from word edges. Anything else non-word-like detaches too;
  // this set only pins the common cases explicitly.
  return {U'.', U',', U';', U':', U'!', U'?', U'"', U'(', U')', U'[', U']',
          U'{', U'}', U'«', U'»', U'…', U'‘', U'’',
          U'“', U'”', U'–', U'—', U'،', U'؛',
          U'؟'};
}

struct Cursor {
  const std::u32string& cps;
  const TokenizerRules& rules;

  bool word_char(std::size_t i) const {
    char32_t cp = cps[i];
    if (is_space(cp)) return false;
    if (cp == uni::kZwnj && rules.split_on_zwnj) return false;
    if (is_letter(cp) || uni::is_digit(cp) || uni::is_combining_mark(cp))
      return true;
    if (uni::is_format_control(cp)) return true;
    // Apostrophes and hyphens join two letters, never start or end a word.
    if (rules.apostrophe_chars.count(cp) || cp == U'-') {
      bool prev_alpha = i > 0 && is_letter(cps[i - 1]);
      bool next_alpha = i + 1 < cps.size() && is_letter(cps[i + 1]);
      return prev_alpha && next_alpha;
    }
    return false;
  }
};

}  // namespace

TokenizerRules TokenizerRules::latin_cyrillic() {
  TokenizerRules rules;
  rules.family = Family::LatinCyrillic;
  rules.punctuation_attach = default_punctuation();
  rules.apostrophe_chars = {U'\'', U'’'};
  return rules;
}

TokenizerRules TokenizerRules::arabic() {
  TokenizerRules rules = latin_cyrillic();
  rules.family = Family::Arabic;
  rules.split_on_zwnj = true;
  return rules;
}

TokenizerRules TokenizerRules::for_script(Script script) {
  return script == Script::Arabic ? arabic() : latin_cyrillic();
}

std::vector<RawToken> tokenize(std::string_view text,
                               const TokenizerRules& rules) {
  std::u32string cps = uni::decode_utf8(text);
  Cursor cursor{cps, rules};
  std::vector<RawToken> tokens;

  auto emit = [&](std::size_t from, std::size_t to) {
    if (from >= to) return;
    tokens.push_back(
        {uni::encode_utf8(std::u32string_view(cps).substr(from, to - from)),
         from, to});
  };

  std::size_t i = 0;
  const std::size_t n = cps.size();
  while (i < n) {
    if (is_space(cps[i]) || (cps[i] == uni::kZwnj && rules.split_on_zwnj)) {
      ++i;
      continue;
    }
    if (cursor.word_char(i)) {
      std::size_t start = i;
      while (i < n && cursor.word_char(i)) ++i;
      // Opt-in clitic splitting: break before a matching apostrophe suffix.
      std::size_t end = i;
      for (const auto& clitic : rules.clitic_patterns) {
        if (end - start > clitic.size() &&
            std::u32string_view(cps).substr(end - clitic.size(),
                                            clitic.size()) == clitic) {
          emit(start, end - clitic.size());
          start = end - clitic.size();
          break;
        }
      }
      emit(start, end);
      continue;
    }
    // Punctuation: identical consecutive characters form one token ("...").
    std::size_t start = i;
    char32_t mark = cps[i];
    while (i < n && cps[i] == mark && !is_space(cps[i]) &&
           !cursor.word_char(i))
      ++i;
    emit(start, i);
  }
  return tokens;
}

std::vector<std::pair<std::size_t, std::size_t>> split_sentences(
    std::string_view text, const TokenizerRules& /*rules*/,
    const std::set<std::string>& abbreviations) {
  std::u32string cps = uni::decode_utf8(text);
  const std::size_t n = cps.size();
  std::vector<std::pair<std::size_t, std::size_t>> spans;

  auto word_before = [&](std::size_t dot) {
    // The whitespace-delimited chunk ending at (and including) cps[dot].
    std::size_t begin = dot;
    while (begin > 0 && !is_space(cps[begin - 1])) --begin;
    return uni::encode_utf8(
        std::u32string_view(cps).substr(begin, dot - begin + 1));
  };

  std::size_t start = 0;
  while (start < n && is_space(cps[start])) ++start;
  std::size_t i = start;
  while (i < n) {
    if (is_sentence_terminator(cps[i])) {
      std::size_t term_end = i;
      while (term_end + 1 < n && is_sentence_terminator(cps[term_end + 1]))
        ++term_end;
      bool abbreviation =
          cps[i] == U'.' && abbreviations.count(word_before(i)) > 0;
      std::size_t j = term_end + 1;
      bool saw_space = false;
      while (j < n && is_space(cps[j])) {
        saw_space = true;
        ++j;
      }
      if (!abbreviation && saw_space && j < n && starts_sentence(cps[j])) {
        spans.emplace_back(start, term_end + 1);
        start = j;
        i = j;
        continue;
      }
      i = term_end + 1;
      continue;
    }
    ++i;
  }
  if (start < n) {
    std::size_t end = n;
    while (end > start && is_space(cps[end - 1])) --end;
    if (end > start) spans.emplace_back(start, end);
  }
  return spans;
}

std::set<std::string> load_abbreviations(std::string_view lang) {
  std::set<std::string> out;
  std::ifstream in(data_dir() / "abbrev" / (std::string(lang) + ".txt"));
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.insert(line);
  }
  return out;
}

}  // namespace turkic
