// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <charconv>
#include <sstream>
#include <string_view>

#include "turkic/document.hpp"
#include "turkic/errors.hpp"

namespace turkic {

namespace {

constexpr std::string_view kAbsent = "_";

std::string field(const std::optional<std::string>& v) {
  return v && !v->empty() ? *v : std::string(kAbsent);
}

std::string feats_column(const Word& w) {
  auto sorted = w.sorted_feats();
  if (sorted.empty()) return std::string(kAbsent);
  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += '|';
    out += sorted[i].first + "=" + sorted[i].second;
  }
  return out;
}

std::string misc_column(const std::string& misc) {
  return misc.empty() ? std::string(kAbsent) : misc;
}

[[noreturn]] void fail(int lineno, const std::string& msg) {
  throw ParseError(msg, "line " + std::to_string(lineno));
}

int parse_int(std::string_view s, int lineno, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail(lineno, std::string("non-integer ") + what + " '" + std::string(s) + "'");
  return value;
}

std::vector<std::string_view> split_cols(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(start));
      break;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cols;
}

std::optional<std::string> opt_field(std::string_view col) {
  if (col == kAbsent) return std::nullopt;
  return std::string(col);
}

void parse_feats(std::string_view col, Word& word, int lineno) {
  if (col == kAbsent) return;
  std::size_t start = 0;
  while (start <= col.size()) {
    std::size_t bar = col.find('|', start);
    std::string_view item = col.substr(
        start, bar == std::string_view::npos ? std::string_view::npos
                                             : bar - start);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      fail(lineno, "malformed feature '" + std::string(item) + "'");
    std::string key(item.substr(0, eq));
    for (const auto& [k, v] : word.feats)
      if (k == key) fail(lineno, "duplicate feature key '" + key + "'");
    word.feats.emplace_back(std::move(key), std::string(item.substr(eq + 1)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
}

struct SentenceBuilder {
  Sentence sentence;
  int next_id = 1;
  int open_range_end = 0;  // >0 while inside an MWT range

  bool empty() const {
    return sentence.tokens.empty() && sentence.comments.empty();
  }
};

void finish_sentence(SentenceBuilder& b, Document& doc, int lineno) {
  if (b.open_range_end >= b.next_id)
    fail(lineno, "multi-word token range extends past the last word");
  if (!b.sentence.tokens.empty() || !b.sentence.comments.empty()) {
    // Sentence text: the "# text = " comment when present, else the token
    // forms joined with single spaces.
    std::string text;
    for (const auto& c : b.sentence.comments) {
      static constexpr std::string_view kPrefix = "# text = ";
      if (c.rfind(kPrefix, 0) == 0) {
        text = c.substr(kPrefix.size());
        break;
      }
    }
    if (text.empty()) {
      for (const auto& t : b.sentence.tokens) {
        if (!text.empty()) text += ' ';
        text += t.text;
      }
    }
    b.sentence.text = std::move(text);
    try {
      validate(b.sentence);
    } catch (const Error& e) {
      fail(lineno, e.what());
    }
    doc.sentences.push_back(std::move(b.sentence));
  }
  b = SentenceBuilder{};
}

}  // namespace

std::string to_conllu(const Document& doc) {
  validate(doc);
  std::string out;
  for (const auto& sentence : doc.sentences) {
    for (const auto& comment : sentence.comments) {
      out += comment;
      out += '\n';
    }
    for (const auto& token : sentence.tokens) {
      if (token.is_mwt()) {
        out += std::to_string(token.start_id) + "-" +
               std::to_string(token.end_id) + "\t" + token.text +
               "\t_\t_\t_\t_\t_\t_\t_\t" + misc_column(token.misc) + "\n";
      }
      for (const auto& w : token.words) {
        out += std::to_string(w.id);
        out += '\t';
        out += w.text.empty() ? std::string(kAbsent) : w.text;
        out += '\t';
        out += field(w.lemma);
        out += '\t';
        out += field(w.upos);
        out += '\t';
        out += field(w.xpos);
        out += '\t';
        out += feats_column(w);
        out += '\t';
        out += w.head ? std::to_string(*w.head) : std::string(kAbsent);
        out += '\t';
        out += field(w.deprel);
        out += '\t';
        out += field(w.deps);
        out += '\t';
        out += misc_column(w.misc);
        out += '\n';
      }
    }
    out += '\n';
  }
  return out;
}

Document from_conllu(const std::string& input) {
  Document doc;
  SentenceBuilder builder;
  std::istringstream stream(input);
  std::string line;
  int lineno = 0;

  while (std::getline(stream, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    if (line.empty()) {
      finish_sentence(builder, doc, lineno);
      continue;
    }
    if (line[0] == '#') {
      builder.sentence.comments.push_back(line);
      continue;
    }

    auto cols = split_cols(line);
    if (cols.size() != 10)
      fail(lineno, "expected 10 columns, got " + std::to_string(cols.size()));

    std::string_view id_col = cols[0];
    if (id_col.find('.') != std::string_view::npos)
      fail(lineno, "empty nodes (decimal ids) are not supported");

    std::size_t dash = id_col.find('-');
    if (dash != std::string_view::npos) {
      // Multi-word token range line.
      int start = parse_int(id_col.substr(0, dash), lineno, "range start");
      int end = parse_int(id_col.substr(dash + 1), lineno, "range end");
      if (start > end) fail(lineno, "inverted multi-word token range");
      if (builder.open_range_end >= builder.next_id)
        fail(lineno, "overlapping multi-word token ranges");
      if (start != builder.next_id)
        fail(lineno, "multi-word token range must start at the next word id");
      Token token;
      token.start_id = start;
      token.end_id = end;
      token.text = cols[1];
      if (cols[9] != kAbsent) token.misc = std::string(cols[9]);
      builder.open_range_end = end;
      builder.sentence.tokens.push_back(std::move(token));
      continue;
    }

    int id = parse_int(id_col, lineno, "word id");
    if (id != builder.next_id)
      fail(lineno, "word id " + std::to_string(id) + " out of sequence");

    Word word;
    word.id = id;
    word.text = cols[1] == kAbsent ? "" : std::string(cols[1]);
    word.lemma = opt_field(cols[2]);
    word.upos = opt_field(cols[3]);
    word.xpos = opt_field(cols[4]);
    parse_feats(cols[5], word, lineno);
    if (cols[6] != kAbsent) word.head = parse_int(cols[6], lineno, "head");
    word.deprel = opt_field(cols[7]);
    word.deps = opt_field(cols[8]);
    if (cols[9] != kAbsent) word.misc = std::string(cols[9]);

    if (builder.open_range_end >= builder.next_id) {
      builder.sentence.tokens.back().words.push_back(std::move(word));
    } else {
      Token token;
      token.start_id = id;
      token.end_id = id;
      token.text = word.text;
      token.words.push_back(std::move(word));
      builder.sentence.tokens.push_back(std::move(token));
    }
    ++builder.next_id;
  }
  finish_sentence(builder, doc, lineno + 1);

  for (const auto& s : doc.sentences) {
    if (!doc.text.empty()) doc.text += ' ';
    doc.text += s.text;
  }
  return doc;
}

}  // namespace turkic
