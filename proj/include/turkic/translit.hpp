// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "turkic/script.hpp"

namespace turkic {

/// One mapping rule. Sources are stored lowercase; matching is case-folded
/// and casing is re-applied to the target.
struct TranslitEntry {
  std::u32string source;  // 1..4 scalar values
  std::u32string target;
  /// Not invertible (shares a target with another entry, or maps to
  /// nothing). Skipped when generating the reverse table and excluded from
  /// the round-trip alphabet.
  bool forward_only = false;
  /// Invertible in isolation but unsafe under concatenation (its target can
  /// collide with a target boundary of other entries). Kept in the reverse
  /// table, excluded from the round-trip alphabet.
  bool no_round_trip = false;
};

/// An ordered mapping table for one language and direction.
class TranslitTable {
 public:
  TranslitTable(std::string lang, Script source, Script target,
                std::string standard, std::vector<TranslitEntry> entries,
                bool reversible, bool dotted_i = true);

  /// Parses a table file: UTF-8 TSV, '#' comments,
  /// columns src<TAB>tgt[<TAB>flags] with flags in {fwdonly, noround}.
  static TranslitTable load(const std::filesystem::path& path,
                            std::string lang, Script source, Script target,
                            std::string standard, bool reversible,
                            bool dotted_i = true);

  /// Flag-aware inversion: forward-only entries are dropped, the rest must
  /// have pairwise distinct targets. Throws when a hand-authored reverse
  /// file would be required instead.
  TranslitTable reversed() const;

  const std::string& lang() const { return lang_; }
  Script source_script() const { return source_; }
  Script target_script() const { return target_; }
  const std::string& standard() const { return standard_; }
  bool reversible() const { return reversible_; }
  bool dotted_i() const { return dotted_i_; }
  const std::vector<TranslitEntry>& entries() const { return entries_; }
  std::size_t max_source_len() const { return max_source_len_; }

  const TranslitEntry* find(const std::u32string& folded_source) const;

  /// Sources safe for exact round-tripping (neither forward_only nor
  /// no_round_trip). The excluded ones are the table's exception list.
  std::vector<std::u32string> round_trip_alphabet() const;
  std::vector<std::u32string> exceptions() const;

 private:
  std::string lang_;
  Script source_;
  Script target_;
  std::string standard_;
  std::vector<TranslitEntry> entries_;
  bool reversible_;
  bool dotted_i_;  // dotted/dotless I casing applies to the Latin side
  std::size_t max_source_len_ = 0;
  std::unordered_map<std::u32string, std::size_t> index_;
};

/// A directed conversion supported by the bundled tables.
struct TranslitPair {
  std::string lang;
  Script source;
  Script target;
  std::string standard;
  bool reversible;  // part of a two-way pair
};

/// All supported directed conversions (both directions of every two-way
/// pair, plus the one-way ones).
const std::vector<TranslitPair>& supported_pairs();

const TranslitPair* find_pair(std::string_view lang, Script source,
                              Script target);

/// Greedy longest-match transliterator. At each position source sequences
/// of decreasing length (4 -> 1) are tried; capitalization is preserved
/// (title case for a capitalized source, all-caps inside uppercase runs).
class Transliterator {
 public:
  /// Loads the bundled table for a supported pair; throws UnsupportedPair
  /// for combinations outside the pair registry.
  Transliterator(std::string_view lang, Script source, Script target,
                 bool preserve_unknown = true);

  /// Wraps an explicit table (synthetic tables, tests, external files).
  explicit Transliterator(TranslitTable table, bool preserve_unknown = true);

  /// NFC-normalizes defensively, then converts. Unmatched characters pass
  /// through unchanged unless preserve_unknown is off, in which case
  /// UnmappableCharacter (with character offset) is thrown.
  std::string transliterate(std::string_view text) const;
  std::string operator()(std::string_view text) const {
    return transliterate(text);
  }

  const TranslitTable& table() const { return table_; }
  bool preserve_unknown() const { return preserve_unknown_; }

 private:
  TranslitTable table_;
  bool preserve_unknown_;
};

/// Directory holding the bundled mapping tables
/// (data/translit/<lang>_<src>_<tgt>.tsv).
std::filesystem::path translit_table_dir();

/// Loads the bundled table for a directed pair, generating it from the
/// opposite file via reversed() when only that one is shipped.
TranslitTable load_bundled_table(std::string_view lang, Script source,
                                 Script target);

}  // namespace turkic
