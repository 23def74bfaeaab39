// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "turkic/document.hpp"

namespace turkic {

/// Anchored pattern over Unicode scalar values. Supported syntax: literals,
/// capture groups (...), alternation |, classes [a-z] / [^...], dot, \w \d,
/// and the ? * + quantifiers. Codepoint-level, so non-ASCII classes and
/// literals behave correctly.
class MwtPattern {
 public:
  explicit MwtPattern(const std::string& pattern);
  MwtPattern(const MwtPattern&);
  MwtPattern& operator=(const MwtPattern&);
  MwtPattern(MwtPattern&&) noexcept;
  MwtPattern& operator=(MwtPattern&&) noexcept;
  ~MwtPattern();

  /// Full match; on success returns the capture groups ($1..$9).
  std::optional<std::vector<std::string>> match(const std::string& text) const;

  const std::string& pattern() const { return pattern_; }

 private:
  std::string pattern_;
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One generated syntactic word of an expansion rule.
struct MwtPiece {
  std::string text_template;  // may reference $1..$9
  std::optional<std::string> lemma_template;
  std::optional<std::string> upos;
};

struct MwtRule {
  MwtPattern pattern;
  std::vector<MwtPiece> pieces;
  /// When set, the substituted piece texts must concatenate back to the
  /// matched surface (validated at expansion time).
  bool require_concat = false;
};

class MwtRuleTable {
 public:
  MwtRuleTable(std::string lang, std::vector<MwtRule> rules)
      : lang_(std::move(lang)), rules_(std::move(rules)) {}

  /// TSV: pattern<TAB>piece + piece + ...[<TAB>concat]; each piece is
  /// template[/lemma[/upos]].
  static MwtRuleTable load(const std::filesystem::path& path,
                           std::string lang);

  /// Bundled table from data/mwt/<lang>.tsv; empty table when the language
  /// has none.
  static MwtRuleTable bundled(std::string_view lang);

  const std::string& lang() const { return lang_; }
  const std::vector<MwtRule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

 private:
  std::string lang_;
  std::vector<MwtRule> rules_;
};

/// Rewrites single-word tokens that match a rule into multi-word tokens and
/// renumbers word ids consecutively. Idempotent: tokens that already span
/// several words never re-match.
Sentence expand_mwt(const Sentence& sentence, const MwtRuleTable& table);

}  // namespace turkic
