// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace turkic {

/// Subword-efficiency statistics for one (language, tokenizer) pair.
struct FertilityReport {
  std::string lang;
  std::string tokenizer_name;
  std::size_t n_words = 0;
  double mean_fertility = 0.0;       // subword tokens per word
  double p95_tokens_per_word = 0.0;  // nearest-rank percentile
  std::size_t max_tokens_per_word = 0;
};

/// Word -> subword-token-count contract. Implementations must be
/// deterministic and return >= 1 for non-empty words.
class SubwordTokenizerAdapter {
 public:
  virtual ~SubwordTokenizerAdapter() = default;
  virtual const std::string& name() const = 0;
  virtual std::size_t count_tokens(const std::string& word) const = 0;
};

/// Every word is one token. Baseline with mean fertility exactly 1.
class IdentityAdapter : public SubwordTokenizerAdapter {
 public:
  const std::string& name() const override;
  std::size_t count_tokens(const std::string& word) const override;
};

/// Codepoint-level byte-pair-encoding tokenizer, trainable on a word list
/// and loadable from a standard merges file ("left right" per line).
class BpeAdapter : public SubwordTokenizerAdapter {
 public:
  static BpeAdapter train(const std::vector<std::string>& words,
                          std::size_t max_merges,
                          std::string name = "toy-bpe");
  static BpeAdapter from_merges_file(const std::filesystem::path& path,
                                     std::string name = "bpe");
  void save_merges(const std::filesystem::path& path) const;

  const std::string& name() const override { return name_; }
  std::size_t count_tokens(const std::string& word) const override;
  std::vector<std::string> segment(const std::string& word) const;

  std::size_t merge_count() const { return ranks_.size(); }

 private:
  std::string name_;
  std::vector<std::pair<std::string, std::string>> merges_;  // rank order
  std::map<std::pair<std::string, std::string>, std::size_t> ranks_;
};

/// Greedy longest-prefix segmenter over a fixed subword vocabulary (one
/// entry per line); characters outside the vocabulary count as single
/// tokens.
class VocabAdapter : public SubwordTokenizerAdapter {
 public:
  static VocabAdapter from_vocab_file(const std::filesystem::path& path,
                                      std::string name = "vocab");
  static VocabAdapter from_entries(std::vector<std::string> entries,
                                   std::string name = "vocab");

  const std::string& name() const override { return name_; }
  std::size_t count_tokens(const std::string& word) const override;
  std::vector<std::string> segment(const std::string& word) const;

  std::size_t vocab_size() const { return vocab_.size(); }

 private:
  std::string name_;
  std::set<std::u32string> vocab_;
  std::size_t max_entry_len_ = 0;
};

/// Mean and nearest-rank 95th-percentile tokens per word. Throws EmptyInput
/// when `words` is empty or contains an empty word.
FertilityReport fertility(const std::vector<std::string>& words,
                          const SubwordTokenizerAdapter& adapter,
                          std::string lang = "");

/// Word extraction for fertility: tokens with at least one alphabetic
/// character (punctuation and number tokens excluded), script-appropriate
/// tokenizer rules chosen per sentence.
std::vector<std::string> extract_words(const std::vector<std::string>& sentences);

struct CompareCell {
  std::string lang;
  std::string tokenizer_name;
  std::optional<FertilityReport> report;
  std::string error;  // per-cell failure, table keeps going
};

/// One cell per (language, adapter) over a parallel corpus.
std::vector<CompareCell> compare(
    const std::map<std::string, std::vector<std::string>>& corpus,
    const std::vector<const SubwordTokenizerAdapter*>& adapters);

/// TSV with columns lang, tokenizer, n_words, mean_fertility, p95, max.
std::string reports_to_tsv(const std::vector<CompareCell>& cells);

}  // namespace turkic
