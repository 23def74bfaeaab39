// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "turkic/script.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "turkic/data_paths.hpp"
#include "turkic/errors.hpp"
#include "turkic/unicode.hpp"

namespace turkic {

namespace {

constexpr std::array<std::string_view, kScriptCount> kCodes = {"Latn", "Cyrl",
                                                               "Arab", "Orkh"};
constexpr std::array<std::string_view, kScriptCount> kNames = {
    "Latin", "Cyrillic", "Arabic", "OldTurkic"};

std::vector<std::string> split_tsv(const std::string& line) {
  std::vector<std::string> cols;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      cols.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  cols.push_back(std::move(cur));
  return cols;
}

}  // namespace

std::string_view script_code(Script s) { return kCodes[static_cast<int>(s)]; }
std::string_view script_name(Script s) { return kNames[static_cast<int>(s)]; }

std::optional<Script> script_from_code(std::string_view c) {
  for (std::size_t i = 0; i < kCodes.size(); ++i)
    if (kCodes[i] == c) return static_cast<Script>(i);
  return std::nullopt;
}

bool LanguageInfo::allows(Script s) const {
  return std::find(allowed_scripts.begin(), allowed_scripts.end(), s) !=
         allowed_scripts.end();
}

ScriptTables::ScriptTables(const std::filesystem::path& ranges_tsv,
                           const std::filesystem::path& languages_tsv) {
  std::ifstream rf(ranges_tsv);
  if (!rf) throw Error(ErrorCode::Generic, "cannot open " + ranges_tsv.string());
  std::string line;
  int lineno = 0;
  while (std::getline(rf, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tsv(line);
    if (cols.size() != 3)
      throw ParseError("expected 3 columns in script range table",
                       ranges_tsv.string() + ":" + std::to_string(lineno));
    auto script = script_from_code(cols[0]);
    if (!script)
      throw ParseError("unknown script code '" + cols[0] + "'",
                       ranges_tsv.string() + ":" + std::to_string(lineno));
    Range r{static_cast<char32_t>(std::stoul(cols[1], nullptr, 16)),
            static_cast<char32_t>(std::stoul(cols[2], nullptr, 16)), *script};
    if (r.lo > r.hi)
      throw ParseError("range start exceeds end",
                       ranges_tsv.string() + ":" + std::to_string(lineno));
    ranges_.push_back(r);
  }
  std::sort(ranges_.begin(), ranges_.end(),
            [](const Range& a, const Range& b) { return a.lo < b.lo; });

  std::ifstream lf(languages_tsv);
  if (!lf)
    throw Error(ErrorCode::Generic, "cannot open " + languages_tsv.string());
  lineno = 0;
  while (std::getline(lf, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tsv(line);
    if (cols.size() != 5)
      throw ParseError("expected 5 columns in language table",
                       languages_tsv.string() + ":" + std::to_string(lineno));
    LanguageInfo info;
    info.iso = cols[0];
    info.name = cols[1];
    info.branch = cols[2];
    auto def = script_from_code(cols[3]);
    if (!def)
      throw ParseError("unknown default script '" + cols[3] + "'",
                       languages_tsv.string() + ":" + std::to_string(lineno));
    info.default_script = *def;
    std::stringstream ss(cols[4]);
    std::string code;
    while (std::getline(ss, code, ',')) {
      auto s = script_from_code(code);
      if (!s)
        throw ParseError("unknown allowed script '" + code + "'",
                         languages_tsv.string() + ":" + std::to_string(lineno));
      info.allowed_scripts.push_back(*s);
    }
    if (!info.allows(info.default_script))
      throw ParseError("default script not in allowed set for " + info.iso,
                       languages_tsv.string() + ":" + std::to_string(lineno));
    languages_.push_back(std::move(info));
  }
}

const ScriptTables& ScriptTables::instance() {
  static ScriptTables tables(data_dir() / "script_ranges.tsv",
                             data_dir() / "languages.tsv");
  return tables;
}

std::optional<Script> ScriptTables::classify(char32_t cp) const {
  // Binary search over sorted, non-overlapping ranges.
  auto it = std::upper_bound(
      ranges_.begin(), ranges_.end(), cp,
      [](char32_t v, const Range& r) { return v < r.lo; });
  if (it == ranges_.begin()) return std::nullopt;
  --it;
  if (cp >= it->lo && cp <= it->hi) return it->script;
  return std::nullopt;
}

const LanguageInfo* ScriptTables::find_language(std::string_view iso) const {
  for (const auto& l : languages_)
    if (l.iso == iso) return &l;
  return nullptr;
}

std::string normalize(std::string_view text) { return uni::nfc(text); }

DetectionResult detect_script_result(std::string_view text,
                                     const ScriptTables& tables) {
  std::array<std::size_t, kScriptCount> counts{};
  std::optional<Script> base;  // script of the last alphabetic character
  for (char32_t cp : uni::decode_utf8(text)) {
    if (auto s = tables.classify(cp)) {
      ++counts[static_cast<int>(*s)];
      base = *s;
    } else if (uni::is_combining_mark(cp) && base) {
      ++counts[static_cast<int>(*base)];
    }
  }
  std::size_t total = 0;
  for (auto c : counts) total += c;
  if (total == 0) throw NoAlphabeticContent();

  // argmax; ties resolved by enum order (Latin first).
  int best = 0;
  for (int i = 1; i < static_cast<int>(kScriptCount); ++i)
    if (counts[i] > counts[best]) best = i;

  DetectionResult result;
  result.script = static_cast<Script>(best);
  result.confidence = static_cast<double>(counts[best]) / total;
  result.counts = counts;
  return result;
}

Script detect_script(std::string_view text, const ScriptTables& tables) {
  return detect_script_result(text, tables).script;
}

std::vector<ScriptSegment> detect_segments(std::string_view text,
                                           const ScriptTables& tables) {
  std::vector<ScriptSegment> segments;
  std::u32string cps = uni::decode_utf8(text);
  std::u32string pending;  // chars seen before the first run opens
  std::size_t pending_start = 0;
  std::u32string current;
  std::size_t current_start = 0;
  std::optional<Script> current_script;

  auto flush = [&]() {
    if (!current_script) return;
    segments.push_back({*current_script, current_start,
                        current_start + current.size(),
                        uni::encode_utf8(current)});
    current.clear();
    current_script.reset();
  };

  for (std::size_t i = 0; i < cps.size(); ++i) {
    char32_t cp = cps[i];
    std::optional<Script> s = tables.classify(cp);
    if (!s) {
      // Combining marks and other non-letters ride along with the open run.
      if (current_script) {
        current.push_back(cp);
      } else {
        if (pending.empty()) pending_start = i;
        pending.push_back(cp);
      }
      continue;
    }
    if (current_script && *current_script != *s) flush();
    if (!current_script) {
      current_script = *s;
      if (!pending.empty()) {
        current = pending;
        current_start = pending_start;
        pending.clear();
      } else {
        current_start = i;
      }
    }
    current.push_back(cp);
  }
  flush();
  return segments;
}

ScriptValidation validate_language_script(std::string_view iso, Script script,
                                          const ScriptTables& tables) {
  const LanguageInfo* lang = tables.find_language(iso);
  if (!lang)
    throw UnknownLanguage("unknown language code '" + std::string(iso) + "'");
  return ScriptValidation{lang->allows(script), lang->iso,
                          lang->default_script, script};
}

}  // namespace turkic
