// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "turkic/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "turkic/errors.hpp"
#include "turkic/tokenizer.hpp"
#include "turkic/unicode.hpp"

namespace turkic {

namespace {

std::vector<std::string> to_symbols(const std::string& word) {
  std::vector<std::string> symbols;
  for (char32_t cp : uni::decode_utf8(word))
    symbols.push_back(uni::encode_utf8(cp));
  return symbols;
}

}  // namespace

const std::string& IdentityAdapter::name() const {
  static const std::string n = "identity";
  return n;
}

std::size_t IdentityAdapter::count_tokens(const std::string& word) const {
  return word.empty() ? 0 : 1;
}

BpeAdapter BpeAdapter::train(const std::vector<std::string>& words,
                             std::size_t max_merges, std::string name) {
  BpeAdapter adapter;
  adapter.name_ = std::move(name);

  std::vector<std::vector<std::string>> sequences;
  for (const auto& w : words)
    if (!w.empty()) sequences.push_back(to_symbols(w));

  for (std::size_t round = 0; round < max_merges; ++round) {
    std::map<std::pair<std::string, std::string>, std::size_t> freq;
    for (const auto& seq : sequences)
      for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        ++freq[{seq[i], seq[i + 1]}];
    if (freq.empty()) break;
    // Most frequent pair; map order breaks ties deterministically.
    auto best = freq.begin();
    for (auto it = freq.begin(); it != freq.end(); ++it)
      if (it->second > best->second) best = it;
    if (best->second < 2) break;

    const auto [left, right] = best->first;
    adapter.ranks_[best->first] = adapter.merges_.size();
    adapter.merges_.push_back(best->first);
    for (auto& seq : sequences) {
      std::vector<std::string> merged;
      for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i + 1 < seq.size() && seq[i] == left && seq[i + 1] == right) {
          merged.push_back(left + right);
          ++i;
        } else {
          merged.push_back(seq[i]);
        }
      }
      seq = std::move(merged);
    }
  }
  return adapter;
}

BpeAdapter BpeAdapter::from_merges_file(const std::filesystem::path& path,
                                        std::string name) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::Generic, "cannot open merges file " + path.string());
  BpeAdapter adapter;
  adapter.name_ = std::move(name);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto space = line.find(' ');
    if (space == std::string::npos || space == 0 || space + 1 == line.size())
      throw ParseError("expected 'left right'",
                       path.string() + ":" + std::to_string(lineno));
    std::pair<std::string, std::string> merge{line.substr(0, space),
                                              line.substr(space + 1)};
    adapter.ranks_[merge] = adapter.merges_.size();
    adapter.merges_.push_back(std::move(merge));
  }
  return adapter;
}

void BpeAdapter::save_merges(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::Generic, "cannot write merges file " + path.string());
  out << "# bpe merges\n";
  for (const auto& [l, r] : merges_) out << l << ' ' << r << '\n';
}

std::vector<std::string> BpeAdapter::segment(const std::string& word) const {
  std::vector<std::string> symbols = to_symbols(word);
  while (symbols.size() > 1) {
    std::size_t best_rank = ranks_.size();
    std::size_t best_pos = symbols.size();
    for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
      auto it = ranks_.find({symbols[i], symbols[i + 1]});
      if (it != ranks_.end() && it->second < best_rank) {
        best_rank = it->second;
        best_pos = i;
      }
    }
    if (best_pos == symbols.size()) break;
    symbols[best_pos] += symbols[best_pos + 1];
    symbols.erase(symbols.begin() + best_pos + 1);
  }
  return symbols;
}

std::size_t BpeAdapter::count_tokens(const std::string& word) const {
  return segment(word).size();
}

VocabAdapter VocabAdapter::from_entries(std::vector<std::string> entries,
                                        std::string name) {
  VocabAdapter adapter;
  adapter.name_ = std::move(name);
  for (const auto& e : entries) {
    if (e.empty()) continue;
    std::u32string cps = uni::decode_utf8(e);
    adapter.max_entry_len_ = std::max(adapter.max_entry_len_, cps.size());
    adapter.vocab_.insert(std::move(cps));
  }
  return adapter;
}

VocabAdapter VocabAdapter::from_vocab_file(const std::filesystem::path& path,
                                           std::string name) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::Generic, "cannot open vocab file " + path.string());
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    // Standard vocab files may carry an index or score column after a tab.
    auto tab = line.find('\t');
    entries.push_back(tab == std::string::npos ? line : line.substr(0, tab));
  }
  return from_entries(std::move(entries), std::move(name));
}

std::vector<std::string> VocabAdapter::segment(const std::string& word) const {
  std::u32string cps = uni::decode_utf8(word);
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < cps.size()) {
    std::size_t len = std::min(max_entry_len_, cps.size() - i);
    for (; len > 1; --len)
      if (vocab_.count(cps.substr(i, len))) break;
    if (len == 0) len = 1;
    out.push_back(uni::encode_utf8(cps.substr(i, len)));
    i += len;
  }
  return out;
}

std::size_t VocabAdapter::count_tokens(const std::string& word) const {
  return segment(word).size();
}

FertilityReport fertility(const std::vector<std::string>& words,
                          const SubwordTokenizerAdapter& adapter,
                          std::string lang) {
  if (words.empty()) throw EmptyInput("fertility needs at least one word");
  std::vector<std::size_t> counts;
  counts.reserve(words.size());
  std::size_t total = 0;
  for (const auto& w : words) {
    if (w.empty()) throw EmptyInput("fertility got an empty word");
    std::size_t c = adapter.count_tokens(w);
    if (c < 1)
      throw Error(ErrorCode::Generic,
                  "adapter '" + adapter.name() + "' returned 0 tokens");
    counts.push_back(c);
    total += c;
  }
  std::sort(counts.begin(), counts.end());

  FertilityReport report;
  report.lang = std::move(lang);
  report.tokenizer_name = adapter.name();
  report.n_words = words.size();
  report.mean_fertility = static_cast<double>(total) / words.size();
  // Nearest-rank percentile: rank = ceil(p * N), 1-indexed.
  std::size_t rank = static_cast<std::size_t>(
      std::ceil(0.95 * static_cast<double>(counts.size())));
  rank = std::max<std::size_t>(rank, 1);
  report.p95_tokens_per_word = static_cast<double>(counts[rank - 1]);
  report.max_tokens_per_word = counts.back();
  return report;
}

std::vector<std::string> extract_words(
    const std::vector<std::string>& sentences) {
  const auto& tables = ScriptTables::instance();
  std::vector<std::string> words;
  for (const auto& sentence : sentences) {
    std::string nfc = normalize(sentence);
    TokenizerRules rules = TokenizerRules::latin_cyrillic();
    try {
      rules = TokenizerRules::for_script(detect_script(nfc, tables));
    } catch (const NoAlphabeticContent&) {
      continue;
    }
    for (const RawToken& token : tokenize(nfc, rules)) {
      bool alphabetic = false;
      for (char32_t cp : uni::decode_utf8(token.text))
        if (tables.is_alphabetic(cp)) {
          alphabetic = true;
          break;
        }
      if (alphabetic) words.push_back(token.text);
    }
  }
  return words;
}

std::vector<CompareCell> compare(
    const std::map<std::string, std::vector<std::string>>& corpus,
    const std::vector<const SubwordTokenizerAdapter*>& adapters) {
  if (corpus.empty()) throw EmptyInput("compare needs a non-empty corpus");
  std::vector<CompareCell> cells;
  for (const auto& [lang, sentences] : corpus) {
    if (sentences.empty())
      throw EmptyInput("language '" + lang + "' has no sentences");
    std::vector<std::string> words = extract_words(sentences);
    for (const SubwordTokenizerAdapter* adapter : adapters) {
      CompareCell cell;
      cell.lang = lang;
      cell.tokenizer_name = adapter->name();
      try {
        cell.report = fertility(words, *adapter, lang);
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::string reports_to_tsv(const std::vector<CompareCell>& cells) {
  std::ostringstream out;
  out << "lang\ttokenizer\tn_words\tmean_fertility\tp95\tmax\n";
  for (const auto& cell : cells) {
    out << cell.lang << '\t' << cell.tokenizer_name << '\t';
    if (cell.report) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%zu\t%.4f\t%.0f\t%zu",
                    cell.report->n_words, cell.report->mean_fertility,
                    cell.report->p95_tokens_per_word,
                    cell.report->max_tokens_per_word);
      out << buf << '\n';
    } else {
      out << "error: " << cell.error << '\n';
    }
  }
  return out.str();
}

}  // namespace turkic
