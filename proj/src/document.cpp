// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "turkic/document.hpp"

#include <algorithm>
#include <cctype>

#include "turkic/errors.hpp"

namespace turkic {

namespace {

std::string ascii_lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> Word::sorted_feats() const {
  auto out = feats;
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return ascii_lower(a.first) < ascii_lower(b.first);
  });
  return out;
}

bool Word::operator==(const Word& other) const {
  return id == other.id && text == other.text && lemma == other.lemma &&
         upos == other.upos && xpos == other.xpos &&
         sorted_feats() == other.sorted_feats() && head == other.head &&
         deprel == other.deprel && deps == other.deps &&
         start_char == other.start_char && end_char == other.end_char &&
         ner == other.ner && misc == other.misc;
}

std::size_t Sentence::word_count() const {
  std::size_t n = 0;
  for (const auto& t : tokens) n += t.words.size();
  return n;
}

std::vector<const Word*> Sentence::words() const {
  std::vector<const Word*> out;
  out.reserve(word_count());
  for (const auto& t : tokens)
    for (const auto& w : t.words) out.push_back(&w);
  return out;
}

std::string ProcessorRecord::formatted() const {
  std::string out = processor + "(" + language;
  if (!detail.empty()) out += "," + detail;
  out += ")";
  return out;
}

std::size_t Document::word_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.word_count();
  return n;
}

std::size_t Document::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.tokens.size();
  return n;
}

std::vector<const Word*> Document::words() const {
  std::vector<const Word*> out;
  out.reserve(word_count());
  for (const auto& s : sentences)
    for (const auto& t : s.tokens)
      for (const auto& w : t.words) out.push_back(&w);
  return out;
}

void validate(const Sentence& sentence) {
  int expected_id = 1;
  for (const auto& token : sentence.tokens) {
    if (token.start_id != expected_id)
      throw Error(ErrorCode::Generic,
                  "token id range starts at " + std::to_string(token.start_id) +
                      ", expected " + std::to_string(expected_id));
    if (token.end_id < token.start_id)
      throw Error(ErrorCode::Generic, "token id range end precedes start");
    if (static_cast<int>(token.words.size()) !=
        token.end_id - token.start_id + 1)
      throw Error(ErrorCode::Generic,
                  "token id range disagrees with word count");
    if (!token.is_mwt() && token.words.size() == 1 &&
        token.words[0].text != token.text)
      throw Error(ErrorCode::Generic,
                  "single-word token text differs from its word");
    for (const auto& word : token.words) {
      if (word.id != expected_id)
        throw Error(ErrorCode::Generic,
                    "word ids not consecutive at id " + std::to_string(word.id));
      ++expected_id;
    }
  }
  int n_words = expected_id - 1;
  for (const Word* w : sentence.words()) {
    if (w->id < 1) throw Error(ErrorCode::Generic, "word id must be >= 1");
    if (w->head) {
      if (*w->head < 0 || *w->head > n_words)
        throw Error(ErrorCode::Generic,
                    "head " + std::to_string(*w->head) + " out of range");
      if (*w->head == w->id)
        throw Error(ErrorCode::Generic,
                    "word " + std::to_string(w->id) + " heads itself");
    }
    if (w->start_char && w->end_char && *w->start_char >= *w->end_char)
      throw Error(ErrorCode::Generic, "word character span is empty");
    std::vector<std::string> keys;
    for (const auto& [k, v] : w->feats) keys.push_back(ascii_lower(k));
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
      throw Error(ErrorCode::Generic, "duplicate feature key on word " +
                                          std::to_string(w->id));
  }
}

void validate(const Document& doc) {
  for (const auto& s : doc.sentences) validate(s);
  for (const auto& e : doc.entities)
    if (e.start_char >= e.end_char)
      throw Error(ErrorCode::Generic, "entity span is empty");
}

}  // namespace turkic
