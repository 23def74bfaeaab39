// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "turkic/script.hpp"

namespace turkic {

/// One syntactic word (one CoNLL-U row). Ids are 1-based within the
/// sentence. Character offsets are Unicode scalar-value indices into the
/// document text (not bytes).
struct Word {
  int id = 0;
  std::string text;
  std::optional<std::string> lemma;
  std::optional<std::string> upos;
  std::optional<std::string> xpos;
  std::vector<std::pair<std::string, std::string>> feats;  // unique keys
  std::optional<int> head;  // 0 = root
  std::optional<std::string> deprel;
  std::optional<std::string> deps;
  std::optional<std::size_t> start_char;
  std::optional<std::size_t> end_char;
  std::optional<std::string> ner;  // BIO label
  std::string misc;                // opaque MISC column, re-emitted verbatim

  /// Feats sorted case-insensitively by key (the serialization order).
  std::vector<std::pair<std::string, std::string>> sorted_feats() const;

  bool operator==(const Word& other) const;
};

/// Surface token. A multi-word token covers the id range
/// [start_id, end_id] and owns one Word per id.
struct Token {
  int start_id = 0;
  int end_id = 0;
  std::string text;
  std::vector<Word> words;
  std::optional<std::size_t> start_char;
  std::optional<std::size_t> end_char;
  std::string misc;

  bool is_mwt() const { return end_id > start_id; }

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::vector<Token> tokens;
  std::string text;
  std::vector<std::string> comments;  // verbatim CoNLL-U '#' lines

  std::size_t word_count() const;
  std::vector<const Word*> words() const;

  bool operator==(const Sentence&) const = default;
};

/// A labelled character span (named entities).
struct Span {
  std::string label;
  std::size_t start_char = 0;
  std::size_t end_char = 0;
  std::string text;

  bool operator==(const Span&) const = default;
};

/// One executed pipeline step.
struct ProcessorRecord {
  std::string processor;
  std::string backend;
  std::string language;
  std::optional<Script> script;
  std::string detail;  // e.g. "Cyrl->Latn" for transliteration steps

  /// Human-readable form, e.g. "translit(kaz,Cyrl->Latn)".
  std::string formatted() const;

  bool operator==(const ProcessorRecord&) const = default;
};

struct Document {
  std::string text;  // original input, immutable once processed
  std::vector<Sentence> sentences;
  std::vector<Span> entities;
  std::optional<Script> script;
  bool script_declared = false;  // true when user-declared rather than detected
  std::optional<std::vector<double>> embedding;   // plug-in backends only
  std::optional<std::string> translation;         // plug-in backends only
  std::vector<ProcessorRecord> processor_log;
  std::map<std::string, std::string> annotations;  // free-form per-document

  std::size_t word_count() const;
  std::size_t token_count() const;
  std::vector<const Word*> words() const;

  bool operator==(const Document&) const = default;
};

/// Structural well-formedness: consecutive word ids, head in range,
/// feats keys unique, offset ordering. Throws Error on violation.
void validate(const Sentence& sentence);
void validate(const Document& doc);

// CoNLL-U (10-column UD format, UTF-8, LF).
std::string to_conllu(const Document& doc);
Document from_conllu(const std::string& input);

// JSON (schema shipped as schemas/document.v1.json).
std::string to_json(const Document& doc, int indent = -1);
Document from_json(const std::string& input);

}  // namespace turkic
