// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace turkic {

/// The four script families. Order fixes the tie-break priority used by
/// detection (earlier wins on equal counts).
enum class Script : std::uint8_t { Latin = 0, Cyrillic, Arabic, OldTurkic };

constexpr std::size_t kScriptCount = 4;

std::string_view script_code(Script s);                     // "Latn", ...
std::string_view script_name(Script s);                     // "Latin", ...
std::optional<Script> script_from_code(std::string_view c); // case-sensitive

/// One contiguous single-script run of a mixed-script text. Offsets are
/// Unicode scalar-value indices into the original string.
struct ScriptSegment {
  Script script;
  std::size_t start_char = 0;
  std::size_t end_char = 0;  // exclusive
  std::string text;

  bool operator==(const ScriptSegment&) const = default;
};

struct DetectionResult {
  Script script;
  double confidence = 0.0;  // dominant count / total classified
  std::array<std::size_t, kScriptCount> counts{};
};

struct LanguageInfo {
  std::string iso;   // ISO 639-3
  std::string name;
  std::string branch;
  Script default_script;
  std::vector<Script> allowed_scripts;

  bool allows(Script s) const;
};

struct ScriptValidation {
  bool ok;
  std::string iso;
  Script declared_default;
  Script detected;
};

/// Letter-range classifier and language registry, both loaded from the
/// bundled data tables (data/script_ranges.tsv, data/languages.tsv).
class ScriptTables {
 public:
  static const ScriptTables& instance();  // bundled tables, loaded once
  ScriptTables(const std::filesystem::path& ranges_tsv,
               const std::filesystem::path& languages_tsv);

  /// Script of an alphabetic codepoint; nullopt for anything that is not a
  /// letter of one of the four families.
  std::optional<Script> classify(char32_t cp) const;
  bool is_alphabetic(char32_t cp) const { return classify(cp).has_value(); }

  const LanguageInfo* find_language(std::string_view iso) const;
  const std::vector<LanguageInfo>& languages() const { return languages_; }

 private:
  struct Range {
    char32_t lo, hi;
    Script script;
  };
  std::vector<Range> ranges_;
  std::vector<LanguageInfo> languages_;
};

/// NFC normalization (idempotent, total).
std::string normalize(std::string_view text);

/// Dominant script by majority over classified alphabetic codepoints.
/// Digits, punctuation and whitespace are ignored; combining marks inherit
/// the script of their base character. Throws NoAlphabeticContent when
/// nothing is classifiable.
DetectionResult detect_script_result(std::string_view text,
                                     const ScriptTables& tables = ScriptTables::instance());
Script detect_script(std::string_view text,
                     const ScriptTables& tables = ScriptTables::instance());

/// Maximal single-script runs. Non-alphabetic characters attach to the open
/// run; characters before the first alphabetic one attach to the first run.
/// Empty result when the text has no classifiable character.
std::vector<ScriptSegment> detect_segments(
    std::string_view text, const ScriptTables& tables = ScriptTables::instance());

/// Ok when `script` is one of the language's allowed scripts; Mismatch
/// otherwise. Throws UnknownLanguage for codes outside the language table.
ScriptValidation validate_language_script(
    std::string_view iso, Script script,
    const ScriptTables& tables = ScriptTables::instance());

}  // namespace turkic
