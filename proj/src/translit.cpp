// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "turkic/translit.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "turkic/data_paths.hpp"
#include "turkic/errors.hpp"
#include "turkic/unicode.hpp"

namespace turkic {

namespace {

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c += 32;
  return out;
}

std::string table_filename(std::string_view lang, Script src, Script tgt) {
  return std::string(lang) + "_" + ascii_lower(script_code(src)) + "_" +
         ascii_lower(script_code(tgt)) + ".tsv";
}

}  // namespace

TranslitTable::TranslitTable(std::string lang, Script source, Script target,
                             std::string standard,
                             std::vector<TranslitEntry> entries,
                             bool reversible, bool dotted_i)
    : lang_(std::move(lang)),
      source_(source),
      target_(target),
      standard_(std::move(standard)),
      entries_(std::move(entries)),
      reversible_(reversible),
      dotted_i_(dotted_i) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    auto& e = entries_[i];
    if (e.source.empty())
      throw ParseError("empty source sequence", lang_ + " table");
    if (e.source.size() > 4)
      throw ParseError("source sequence longer than 4 characters",
                       lang_ + " table");
    if (e.target.size() > 4 * e.source.size())
      throw ParseError("target expansion exceeds the 4x bound",
                       lang_ + " table");
    if (e.target.empty()) e.forward_only = true;
    if (!index_.emplace(e.source, i).second)
      throw ParseError("duplicate source sequence '" +
                           uni::encode_utf8(e.source) + "'",
                       lang_ + " table");
    max_source_len_ = std::max(max_source_len_, e.source.size());
  }
}

TranslitTable TranslitTable::load(const std::filesystem::path& path,
                                  std::string lang, Script source,
                                  Script target, std::string standard,
                                  bool reversible, bool dotted_i) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::Generic, "cannot open table " + path.string());
  std::vector<TranslitEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
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
      throw ParseError("expected src<TAB>tgt[<TAB>flags]",
                       path.string() + ":" + std::to_string(lineno));
    TranslitEntry e;
    e.source = uni::decode_utf8(uni::nfc(cols[0]));
    e.target = uni::decode_utf8(uni::nfc(cols[1]));
    if (cols.size() == 3 && !cols[2].empty()) {
      std::stringstream flags(cols[2]);
      std::string flag;
      while (std::getline(flags, flag, ',')) {
        if (flag == "fwdonly")
          e.forward_only = true;
        else if (flag == "noround")
          e.no_round_trip = true;
        else
          throw ParseError("unknown flag '" + flag + "'",
                           path.string() + ":" + std::to_string(lineno));
      }
    }
    entries.push_back(std::move(e));
  }
  if (entries.empty())
    throw ParseError("table has no entries", path.string());
  return TranslitTable(std::move(lang), source, target, std::move(standard),
                       std::move(entries), reversible, dotted_i);
}

TranslitTable TranslitTable::reversed() const {
  std::vector<TranslitEntry> rev;
  std::set<std::u32string> seen;
  for (const auto& e : entries_) {
    if (e.forward_only) continue;
    if (!seen.insert(e.target).second)
      throw Error(ErrorCode::Generic,
                  "table " + lang_ + " " + std::string(script_code(source_)) +
                      "->" + std::string(script_code(target_)) +
                      " is not invertible (duplicate target '" +
                      uni::encode_utf8(e.target) +
                      "'); a hand-authored reverse file is required");
    rev.push_back(TranslitEntry{e.target, e.source, false, e.no_round_trip});
  }
  return TranslitTable(lang_, target_, source_, standard_, std::move(rev),
                       reversible_, dotted_i_);
}

const TranslitEntry* TranslitTable::find(
    const std::u32string& folded_source) const {
  auto it = index_.find(folded_source);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::vector<std::u32string> TranslitTable::round_trip_alphabet() const {
  std::vector<std::u32string> out;
  for (const auto& e : entries_)
    if (!e.forward_only && !e.no_round_trip) out.push_back(e.source);
  return out;
}

std::vector<std::u32string> TranslitTable::exceptions() const {
  std::vector<std::u32string> out;
  for (const auto& e : entries_)
    if (e.forward_only || e.no_round_trip) out.push_back(e.source);
  return out;
}

const std::vector<TranslitPair>& supported_pairs() {
  static const std::vector<TranslitPair> pairs = [] {
    struct Row {
      const char* lang;
      Script src, tgt;
      const char* standard;
      bool two_way;
    };
    // One row per conversion; two-way rows expand to both directions.
    static constexpr Script L = Script::Latin, C = Script::Cyrillic,
                            A = Script::Arabic, O = Script::OldTurkic;
    const Row rows[] = {
        {"kaz", C, L, "Official 2021", true},
        {"uzb", C, L, "Official 1995", true},
        {"aze", C, L, "Official 1991", true},
        {"tat", C, L, "Zamanälif", true},
        {"tuk", C, L, "Official 1993", true},
        {"kaa", C, L, "Official 2016", true},
        {"crh", C, L, "Latin std.", true},
        {"uig", A, L, "ULY", true},
        {"ota", L, A, "Academic", false},
        {"otk", O, L, "Turkological", false},
    };
    std::vector<TranslitPair> out;
    for (const auto& r : rows) {
      out.push_back({r.lang, r.src, r.tgt, r.standard, r.two_way});
      if (r.two_way)
        out.push_back({r.lang, r.tgt, r.src, r.standard, r.two_way});
    }
    return out;
  }();
  return pairs;
}

const TranslitPair* find_pair(std::string_view lang, Script source,
                              Script target) {
  for (const auto& p : supported_pairs())
    if (p.lang == lang && p.source == source && p.target == target) return &p;
  return nullptr;
}

std::filesystem::path translit_table_dir() { return data_dir() / "translit"; }

TranslitTable load_bundled_table(std::string_view lang, Script source,
                                 Script target) {
  const TranslitPair* pair = find_pair(lang, source, target);
  if (!pair)
    throw UnsupportedPair("unsupported transliteration pair " +
                          std::string(lang) + " " +
                          std::string(script_code(source)) + "->" +
                          std::string(script_code(target)));
  // Orthographies without the dotted/dotless I distinction keep plain
  // I <-> i casing on the Latin side.
  static const std::set<std::string, std::less<>> kPlainI = {"uzb", "tuk",
                                                             "uig", "ota",
                                                             "otk"};
  bool dotted_i = !kPlainI.count(std::string(lang));
  auto dir = translit_table_dir();
  auto forward = dir / table_filename(lang, source, target);
  if (std::filesystem::exists(forward))
    return TranslitTable::load(forward, std::string(lang), source, target,
                               pair->standard, pair->reversible, dotted_i);
  auto opposite = dir / table_filename(lang, target, source);
  if (pair->reversible && std::filesystem::exists(opposite))
    return TranslitTable::load(opposite, std::string(lang), target, source,
                               pair->standard, pair->reversible, dotted_i)
        .reversed();
  throw Error(ErrorCode::Generic, "no bundled table for " + std::string(lang) +
                                      " " + std::string(script_code(source)) +
                                      "->" + std::string(script_code(target)));
}

Transliterator::Transliterator(std::string_view lang, Script source,
                               Script target, bool preserve_unknown)
    : table_(load_bundled_table(lang, source, target)),
      preserve_unknown_(preserve_unknown) {}

Transliterator::Transliterator(TranslitTable table, bool preserve_unknown)
    : table_(std::move(table)), preserve_unknown_(preserve_unknown) {}

std::string Transliterator::transliterate(std::string_view text) const {
  const bool dotted = table_.dotted_i();
  std::u32string cps = uni::decode_utf8(uni::nfc(text));
  std::u32string folded = uni::to_lower(cps, dotted);
  std::u32string out;
  out.reserve(cps.size());

  const std::size_t n = cps.size();
  std::size_t i = 0;
  while (i < n) {
    const TranslitEntry* entry = nullptr;
    std::size_t len = std::min(table_.max_source_len(), n - i);
    for (; len >= 1; --len) {
      entry = table_.find(folded.substr(i, len));
      if (entry) break;
    }
    if (!entry) {
      if (!preserve_unknown_)
        throw UnmappableCharacter(
            "unmappable character '" + uni::encode_utf8(cps[i]) +
                "' at offset " + std::to_string(i),
            i);
      out.push_back(cps[i]);
      ++i;
      continue;
    }

    bool any_upper = false;
    bool all_upper = true;
    for (std::size_t k = 0; k < len; ++k) {
      if (uni::is_upper(cps[i + k]))
        any_upper = true;
      else if (uni::is_lower(cps[i + k]))
        all_upper = false;
    }
    if (!any_upper || entry->target.empty()) {
      out += entry->target;
    } else {
      bool caps_run = len > 1 && all_upper;
      if (len == 1 && all_upper) {
        // Single uppercase letter: all-caps only inside an uppercase run.
        bool prev_upper = i > 0 && uni::is_upper(cps[i - 1]);
        bool next_upper = i + 1 < n && uni::is_upper(cps[i + 1]);
        caps_run = prev_upper || next_upper;
      }
      if (caps_run) {
        out += uni::to_upper(entry->target, dotted);
      } else {
        std::u32string t = entry->target;
        t[0] = uni::to_upper(t[0], dotted);
        out += t;
      }
    }
    i += len;
  }
  return uni::encode_utf8(out);
}

}  // namespace turkic
