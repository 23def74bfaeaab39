// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "turkic/mwt.hpp"

#include <fstream>
#include <functional>
#include <map>

#include "turkic/data_paths.hpp"
#include "turkic/errors.hpp"
#include "turkic/script.hpp"
#include "turkic/unicode.hpp"

namespace turkic {

namespace {

// --- pattern engine -------------------------------------------------------

enum class NodeKind { Literal, Dot, Class, WordChar, Digit, Group };

struct ClassRange {
  char32_t lo, hi;
};

struct Node;
using Alternative = std::vector<Node>;

struct Node {
  NodeKind kind = NodeKind::Literal;
  char32_t literal = 0;
  std::vector<ClassRange> ranges;  // Class
  bool negated = false;            // Class
  std::vector<Alternative> alts;   // Group
  int group_index = 0;             // Group, 1-based
  // Quantifier: {min, max} with max = -1 for unbounded.
  int min_repeat = 1;
  int max_repeat = 1;
};

bool is_word_char(char32_t cp) {
  return ScriptTables::instance().is_alphabetic(cp) || uni::is_digit(cp) ||
         cp == U'_';
}

class Parser {
 public:
  explicit Parser(const std::u32string& src) : src_(src) {}

  std::vector<Alternative> parse_top() {
    auto alts = parse_alternatives();
    if (pos_ != src_.size())
      throw ParseError("unexpected ')' in pattern", "pattern");
    return alts;
  }

  int group_count() const { return group_count_; }

 private:
  std::vector<Alternative> parse_alternatives() {
    std::vector<Alternative> alts;
    alts.push_back(parse_sequence());
    while (pos_ < src_.size() && src_[pos_] == U'|') {
      ++pos_;
      alts.push_back(parse_sequence());
    }
    return alts;
  }

  Alternative parse_sequence() {
    Alternative seq;
    while (pos_ < src_.size() && src_[pos_] != U'|' && src_[pos_] != U')') {
      Node node = parse_atom();
      parse_quantifier(node);
      seq.push_back(std::move(node));
    }
    return seq;
  }

  Node parse_atom() {
    Node node;
    char32_t c = src_[pos_];
    if (c == U'(') {
      ++pos_;
      node.kind = NodeKind::Group;
      node.group_index = ++group_count_;
      node.alts = parse_alternatives();
      if (pos_ >= src_.size() || src_[pos_] != U')')
        throw ParseError("unbalanced '(' in pattern", "pattern");
      ++pos_;
      return node;
    }
    if (c == U'[') {
      ++pos_;
      node.kind = NodeKind::Class;
      if (pos_ < src_.size() && src_[pos_] == U'^') {
        node.negated = true;
        ++pos_;
      }
      bool first = true;
      while (pos_ < src_.size() && (src_[pos_] != U']' || first)) {
        first = false;
        char32_t lo = src_[pos_++];
        if (lo == U'\\' && pos_ < src_.size()) lo = src_[pos_++];
        char32_t hi = lo;
        if (pos_ + 1 < src_.size() && src_[pos_] == U'-' &&
            src_[pos_ + 1] != U']') {
          ++pos_;
          hi = src_[pos_++];
        }
        node.ranges.push_back({lo, hi});
      }
      if (pos_ >= src_.size())
        throw ParseError("unterminated class in pattern", "pattern");
      ++pos_;  // ']'
      return node;
    }
    if (c == U'\\') {
      ++pos_;
      if (pos_ >= src_.size())
        throw ParseError("dangling escape in pattern", "pattern");
      char32_t esc = src_[pos_++];
      if (esc == U'w') {
        node.kind = NodeKind::WordChar;
      } else if (esc == U'd') {
        node.kind = NodeKind::Digit;
      } else {
        node.kind = NodeKind::Literal;
        node.literal = esc;
      }
      return node;
    }
    if (c == U'.') {
      ++pos_;
      node.kind = NodeKind::Dot;
      return node;
    }
    if (c == U'*' || c == U'+' || c == U'?')
      throw ParseError("quantifier with nothing to repeat", "pattern");
    ++pos_;
    node.kind = NodeKind::Literal;
    node.literal = c;
    return node;
  }

  void parse_quantifier(Node& node) {
    if (pos_ >= src_.size()) return;
    switch (src_[pos_]) {
      case U'*':
        node.min_repeat = 0;
        node.max_repeat = -1;
        ++pos_;
        break;
      case U'+':
        node.min_repeat = 1;
        node.max_repeat = -1;
        ++pos_;
        break;
      case U'?':
        node.min_repeat = 0;
        node.max_repeat = 1;
        ++pos_;
        break;
      default:
        break;
    }
  }

  const std::u32string& src_;
  std::size_t pos_ = 0;
  int group_count_ = 0;
};

struct Captures {
  std::vector<std::pair<std::size_t, std::size_t>> spans;  // per group
};

class Matcher {
 public:
  Matcher(const std::u32string& text, int groups)
      : text_(text) {
    captures_.spans.assign(groups, {0, 0});
  }

  bool match(const std::vector<Alternative>& alts) {
    return match_alts(alts, 0,
                      [&](std::size_t end) { return end == text_.size(); });
  }

  const Captures& captures() const { return captures_; }

 private:
  using Cont = std::function<bool(std::size_t)>;

  bool match_alts(const std::vector<Alternative>& alts, std::size_t pos,
                  const Cont& next) {
    for (const auto& alt : alts)
      if (match_seq(alt, 0, pos, next)) return true;
    return false;
  }

  bool match_seq(const Alternative& seq, std::size_t index, std::size_t pos,
                 const Cont& next) {
    if (index == seq.size()) return next(pos);
    const Node& node = seq[index];
    Cont rest = [&, index](std::size_t p) {
      return match_seq(seq, index + 1, p, next);
    };
    return match_repeat(node, 0, pos, rest);
  }

  // Greedy with backtracking: consume as many repeats as allowed, then give
  // back one at a time.
  bool match_repeat(const Node& node, int taken, std::size_t pos,
                    const Cont& rest) {
    bool may_take =
        node.max_repeat < 0 || taken < node.max_repeat;
    if (may_take) {
      Cont after_one = [&, taken](std::size_t p) {
        return match_repeat(node, taken + 1, p, rest);
      };
      if (match_once(node, pos, after_one)) return true;
    }
    if (taken >= node.min_repeat) return rest(pos);
    return false;
  }

  bool match_once(const Node& node, std::size_t pos, const Cont& next) {
    if (node.kind == NodeKind::Group) {
      auto saved = captures_.spans[node.group_index - 1];
      Cont close = [&, pos](std::size_t end) {
        captures_.spans[node.group_index - 1] = {pos, end};
        if (next(end)) return true;
        return false;
      };
      if (match_alts(node.alts, pos, close)) return true;
      captures_.spans[node.group_index - 1] = saved;
      return false;
    }
    if (pos >= text_.size()) return false;
    char32_t cp = text_[pos];
    bool ok = false;
    switch (node.kind) {
      case NodeKind::Literal:
        ok = cp == node.literal;
        break;
      case NodeKind::Dot:
        ok = true;
        break;
      case NodeKind::WordChar:
        ok = is_word_char(cp);
        break;
      case NodeKind::Digit:
        ok = uni::is_digit(cp);
        break;
      case NodeKind::Class: {
        bool in_class = false;
        for (const auto& r : node.ranges)
          if (cp >= r.lo && cp <= r.hi) {
            in_class = true;
            break;
          }
        ok = in_class != node.negated;
        break;
      }
      case NodeKind::Group:
        break;  // handled above
    }
    return ok && next(pos + 1);
  }

  const std::u32string& text_;
  Captures captures_;
};

std::string substitute(const std::string& tmpl,
                       const std::vector<std::string>& groups) {
  std::string out;
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] == '$' && i + 1 < tmpl.size() && tmpl[i + 1] >= '1' &&
        tmpl[i + 1] <= '9') {
      std::size_t g = tmpl[i + 1] - '1';
      if (g < groups.size()) out += groups[g];
      ++i;
      continue;
    }
    out += tmpl[i];
  }
  return out;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

MwtPiece parse_piece(const std::string& spec, const std::string& where) {
  std::string s = strip(spec);
  if (s.empty()) throw ParseError("empty piece template", where);
  MwtPiece piece;
  std::size_t first = s.find('/');
  if (first == std::string::npos) {
    piece.text_template = s;
    return piece;
  }
  piece.text_template = s.substr(0, first);
  std::size_t second = s.find('/', first + 1);
  if (second == std::string::npos) {
    piece.lemma_template = s.substr(first + 1);
  } else {
    piece.lemma_template = s.substr(first + 1, second - first - 1);
    piece.upos = s.substr(second + 1);
  }
  return piece;
}

}  // namespace

struct MwtPattern::Impl {
  std::vector<Alternative> alts;
  int groups = 0;
};

MwtPattern::MwtPattern(const std::string& pattern)
    : pattern_(pattern), impl_(std::make_unique<Impl>()) {
  std::u32string src = uni::decode_utf8(pattern);
  Parser parser(src);
  impl_->alts = parser.parse_top();
  impl_->groups = parser.group_count();
}

MwtPattern::MwtPattern(const MwtPattern& other)
    : pattern_(other.pattern_), impl_(std::make_unique<Impl>(*other.impl_)) {}

MwtPattern& MwtPattern::operator=(const MwtPattern& other) {
  pattern_ = other.pattern_;
  impl_ = std::make_unique<Impl>(*other.impl_);
  return *this;
}

MwtPattern::MwtPattern(MwtPattern&&) noexcept = default;
MwtPattern& MwtPattern::operator=(MwtPattern&&) noexcept = default;
MwtPattern::~MwtPattern() = default;

std::optional<std::vector<std::string>> MwtPattern::match(
    const std::string& text) const {
  std::u32string cps = uni::decode_utf8(text);
  Matcher matcher(cps, impl_->groups);
  if (!matcher.match(impl_->alts)) return std::nullopt;
  std::vector<std::string> groups;
  for (const auto& [b, e] : matcher.captures().spans)
    groups.push_back(
        uni::encode_utf8(std::u32string_view(cps).substr(b, e - b)));
  return groups;
}

MwtRuleTable MwtRuleTable::load(const std::filesystem::path& path,
                                std::string lang) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::Generic, "cannot open MWT table " + path.string());
  std::vector<MwtRule> rules;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::string where = path.string() + ":" + std::to_string(lineno);
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        cols.push_back(line.substr(start));
        break;
      }
      cols.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (cols.size() < 2 || cols.size() > 3)
      throw ParseError("expected pattern<TAB>pieces[<TAB>flags]", where);
    MwtRule rule{MwtPattern(cols[0]), {}, false};
    if (cols.size() == 3) {
      if (cols[2] == "concat")
        rule.require_concat = true;
      else if (!cols[2].empty())
        throw ParseError("unknown flag '" + cols[2] + "'", where);
    }
    std::size_t piece_start = 0;
    const std::string& spec = cols[1];
    while (piece_start <= spec.size()) {
      std::size_t plus = spec.find(" + ", piece_start);
      std::string piece = plus == std::string::npos
                              ? spec.substr(piece_start)
                              : spec.substr(piece_start, plus - piece_start);
      rule.pieces.push_back(parse_piece(piece, where));
      if (plus == std::string::npos) break;
      piece_start = plus + 3;
    }
    if (rule.pieces.size() < 2)
      throw ParseError("an expansion needs at least two pieces", where);
    rules.push_back(std::move(rule));
  }
  return MwtRuleTable(std::move(lang), std::move(rules));
}

MwtRuleTable MwtRuleTable::bundled(std::string_view lang) {
  auto path = data_dir() / "mwt" / (std::string(lang) + ".tsv");
  if (!std::filesystem::exists(path))
    return MwtRuleTable(std::string(lang), {});
  return load(path, std::string(lang));
}

Sentence expand_mwt(const Sentence& sentence, const MwtRuleTable& table) {
  Sentence out;
  out.text = sentence.text;
  out.comments = sentence.comments;

  // Old word id -> new word id, for remapping heads afterwards.
  std::map<int, int> id_map;
  int next_id = 1;

  for (const auto& token : sentence.tokens) {
    Token copy = token;
    bool expanded = false;
    if (!token.is_mwt() && token.words.size() == 1 && !table.empty()) {
      for (const auto& rule : table.rules()) {
        auto groups = rule.pattern.match(token.text);
        if (!groups) continue;
        std::vector<Word> words;
        std::string concat;
        for (const auto& piece : rule.pieces) {
          Word w;
          w.text = substitute(piece.text_template, *groups);
          if (piece.lemma_template)
            w.lemma = substitute(*piece.lemma_template, *groups);
          if (piece.upos) w.upos = piece.upos;
          concat += w.text;
          words.push_back(std::move(w));
        }
        if (rule.require_concat && concat != token.text)
          throw Error(ErrorCode::Generic,
                      "MWT rule pieces do not concatenate to surface '" +
                          token.text + "'");
        copy.words = std::move(words);
        expanded = true;
        break;
      }
    }

    if (!expanded)
      for (std::size_t k = 0; k < token.words.size(); ++k)
        id_map[token.words[k].id] = next_id + static_cast<int>(k);
    copy.start_id = next_id;
    for (auto& w : copy.words) w.id = next_id++;
    copy.end_id = next_id - 1;
    out.tokens.push_back(std::move(copy));
  }

  // Heads referencing unexpanded words follow them to their new ids; heads
  // into expanded tokens cannot be preserved and are cleared.
  for (auto& token : out.tokens)
    for (auto& w : token.words)
      if (w.head && *w.head != 0) {
        auto it = id_map.find(*w.head);
        if (it != id_map.end())
          w.head = it->second;
        else
          w.head.reset();
      }
  return out;
}

}  // namespace turkic
