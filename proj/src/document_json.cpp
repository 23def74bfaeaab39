// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <json.hpp>

#include "turkic/document.hpp"
#include "turkic/errors.hpp"

namespace turkic {

namespace {

using nlohmann::json;

json opt_str(const std::optional<std::string>& v) {
  return v ? json(*v) : json(nullptr);
}

json opt_size(const std::optional<std::size_t>& v) {
  return v ? json(*v) : json(nullptr);
}

json word_to_json(const Word& w) {
  json feats = json::object();
  for (const auto& [k, v] : w.sorted_feats()) feats[k] = v;
  return json{{"id", w.id},
              {"text", w.text},
              {"lemma", opt_str(w.lemma)},
              {"upos", opt_str(w.upos)},
              {"xpos", opt_str(w.xpos)},
              {"feats", feats},
              {"head", w.head ? json(*w.head) : json(nullptr)},
              {"deprel", opt_str(w.deprel)},
              {"deps", opt_str(w.deps)},
              {"start_char", opt_size(w.start_char)},
              {"end_char", opt_size(w.end_char)},
              {"ner", opt_str(w.ner)},
              {"misc", w.misc}};
}

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError(msg, path);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing key '") + key + "'");
  return *it;
}

std::string require_string(const json& obj, const char* key,
                           const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_string()) fail(path + "/" + key, "expected string");
  return v.get<std::string>();
}

std::optional<std::string> optional_string(const json& obj, const char* key,
                                           const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) fail(path + "/" + key, "expected string or null");
  return it->get<std::string>();
}

std::optional<std::size_t> optional_size(const json& obj, const char* key,
                                         const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_unsigned())
    fail(path + "/" + key, "expected non-negative integer or null");
  return it->get<std::size_t>();
}

Word word_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected word object");
  Word w;
  const json& id = require(j, "id", path);
  if (!id.is_number_integer()) fail(path + "/id", "expected integer");
  w.id = id.get<int>();
  w.text = require_string(j, "text", path);
  w.lemma = optional_string(j, "lemma", path);
  w.upos = optional_string(j, "upos", path);
  w.xpos = optional_string(j, "xpos", path);
  if (auto it = j.find("feats"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) fail(path + "/feats", "expected object");
    for (auto& [k, v] : it->items()) {
      if (!v.is_string()) fail(path + "/feats/" + k, "expected string");
      w.feats.emplace_back(k, v.get<std::string>());
    }
  }
  if (auto it = j.find("head"); it != j.end() && !it->is_null()) {
    if (!it->is_number_integer()) fail(path + "/head", "expected integer");
    w.head = it->get<int>();
  }
  w.deprel = optional_string(j, "deprel", path);
  w.deps = optional_string(j, "deps", path);
  w.start_char = optional_size(j, "start_char", path);
  w.end_char = optional_size(j, "end_char", path);
  w.ner = optional_string(j, "ner", path);
  if (auto it = j.find("misc"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) fail(path + "/misc", "expected string");
    w.misc = it->get<std::string>();
  }
  return w;
}

}  // namespace

std::string to_json(const Document& doc, int indent) {
  validate(doc);
  json sentences = json::array();
  for (const auto& s : doc.sentences) {
    json tokens = json::array();
    for (const auto& t : s.tokens) {
      json words = json::array();
      for (const auto& w : t.words) words.push_back(word_to_json(w));
      tokens.push_back(json{{"id", {t.start_id, t.end_id}},
                            {"text", t.text},
                            {"start_char", opt_size(t.start_char)},
                            {"end_char", opt_size(t.end_char)},
                            {"misc", t.misc},
                            {"words", std::move(words)}});
    }
    sentences.push_back(json{{"text", s.text},
                             {"comments", s.comments},
                             {"tokens", std::move(tokens)}});
  }

  json entities = json::array();
  for (const auto& e : doc.entities)
    entities.push_back(json{{"label", e.label},
                            {"start_char", e.start_char},
                            {"end_char", e.end_char},
                            {"text", e.text}});

  json log = json::array();
  for (const auto& r : doc.processor_log)
    log.push_back(json{{"processor", r.processor},
                       {"backend", r.backend},
                       {"language", r.language},
                       {"script", r.script ? json(std::string(script_code(*r.script)))
                                           : json(nullptr)},
                       {"detail", r.detail}});

  json out{{"version", 1},
           {"text", doc.text},
           {"sentences", std::move(sentences)},
           {"entities", std::move(entities)},
           {"script", doc.script ? json(std::string(script_code(*doc.script)))
                                 : json(nullptr)},
           {"script_declared", doc.script_declared},
           {"embedding", doc.embedding ? json(*doc.embedding) : json(nullptr)},
           {"translation", opt_str(doc.translation)},
           {"processor_log", std::move(log)},
           {"annotations", doc.annotations}};
  return out.dump(indent);
}

Document from_json(const std::string& input) {
  json j;
  try {
    j = json::parse(input);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), "json");
  }
  const std::string root = "$";
  if (!j.is_object()) fail(root, "expected top-level object");

  Document doc;
  doc.text = require_string(j, "text", root);

  const json& sentences = require(j, "sentences", root);
  if (!sentences.is_array()) fail(root + "/sentences", "expected array");
  for (std::size_t si = 0; si < sentences.size(); ++si) {
    const std::string spath = root + "/sentences/" + std::to_string(si);
    const json& sj = sentences[si];
    if (!sj.is_object()) fail(spath, "expected sentence object");
    Sentence sentence;
    sentence.text = require_string(sj, "text", spath);
    if (auto it = sj.find("comments"); it != sj.end() && !it->is_null()) {
      if (!it->is_array()) fail(spath + "/comments", "expected array");
      for (const auto& c : *it) {
        if (!c.is_string()) fail(spath + "/comments", "expected strings");
        sentence.comments.push_back(c.get<std::string>());
      }
    }
    const json& tokens = require(sj, "tokens", spath);
    if (!tokens.is_array()) fail(spath + "/tokens", "expected array");
    for (std::size_t ti = 0; ti < tokens.size(); ++ti) {
      const std::string tpath = spath + "/tokens/" + std::to_string(ti);
      const json& tj = tokens[ti];
      if (!tj.is_object()) fail(tpath, "expected token object");
      Token token;
      const json& id = require(tj, "id", tpath);
      if (!id.is_array() || id.size() != 2 || !id[0].is_number_integer() ||
          !id[1].is_number_integer())
        fail(tpath + "/id", "expected [start_id, end_id]");
      token.start_id = id[0].get<int>();
      token.end_id = id[1].get<int>();
      token.text = require_string(tj, "text", tpath);
      token.start_char = optional_size(tj, "start_char", tpath);
      token.end_char = optional_size(tj, "end_char", tpath);
      if (auto it = tj.find("misc"); it != tj.end() && !it->is_null()) {
        if (!it->is_string()) fail(tpath + "/misc", "expected string");
        token.misc = it->get<std::string>();
      }
      const json& words = require(tj, "words", tpath);
      if (!words.is_array()) fail(tpath + "/words", "expected array");
      for (std::size_t wi = 0; wi < words.size(); ++wi)
        token.words.push_back(
            word_from_json(words[wi], tpath + "/words/" + std::to_string(wi)));
      sentence.tokens.push_back(std::move(token));
    }
    doc.sentences.push_back(std::move(sentence));
  }

  const json& entities = require(j, "entities", root);
  if (!entities.is_array()) fail(root + "/entities", "expected array");
  for (std::size_t ei = 0; ei < entities.size(); ++ei) {
    const std::string epath = root + "/entities/" + std::to_string(ei);
    const json& ej = entities[ei];
    if (!ej.is_object()) fail(epath, "expected entity object");
    Span span;
    span.label = require_string(ej, "label", epath);
    auto sc = optional_size(ej, "start_char", epath);
    auto ec = optional_size(ej, "end_char", epath);
    if (!sc || !ec) fail(epath, "entity spans need start_char and end_char");
    span.start_char = *sc;
    span.end_char = *ec;
    span.text = require_string(ej, "text", epath);
    doc.entities.push_back(std::move(span));
  }

  if (auto it = j.find("script"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) fail(root + "/script", "expected script code or null");
    auto s = script_from_code(it->get<std::string>());
    if (!s) fail(root + "/script", "unknown script code");
    doc.script = *s;
  }
  if (auto it = j.find("script_declared"); it != j.end() && !it->is_null()) {
    if (!it->is_boolean()) fail(root + "/script_declared", "expected boolean");
    doc.script_declared = it->get<bool>();
  }
  if (auto it = j.find("embedding"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) fail(root + "/embedding", "expected array or null");
    std::vector<double> vec;
    for (const auto& v : *it) {
      if (!v.is_number()) fail(root + "/embedding", "expected numbers");
      vec.push_back(v.get<double>());
    }
    doc.embedding = std::move(vec);
  }
  doc.translation = optional_string(j, "translation", root);
  if (auto it = j.find("processor_log"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) fail(root + "/processor_log", "expected array");
    for (std::size_t ri = 0; ri < it->size(); ++ri) {
      const std::string rpath = root + "/processor_log/" + std::to_string(ri);
      const json& rj = (*it)[ri];
      if (!rj.is_object()) fail(rpath, "expected record object");
      ProcessorRecord rec;
      rec.processor = require_string(rj, "processor", rpath);
      rec.backend = require_string(rj, "backend", rpath);
      rec.language = require_string(rj, "language", rpath);
      if (auto s = optional_string(rj, "script", rpath)) {
        auto sc = script_from_code(*s);
        if (!sc) fail(rpath + "/script", "unknown script code");
        rec.script = *sc;
      }
      if (auto d = optional_string(rj, "detail", rpath)) rec.detail = *d;
      doc.processor_log.push_back(std::move(rec));
    }
  }
  if (auto it = j.find("annotations"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) fail(root + "/annotations", "expected object");
    for (auto& [k, v] : it->items()) {
      if (!v.is_string()) fail(root + "/annotations/" + k, "expected string");
      doc.annotations[k] = v.get<std::string>();
    }
  }

  try {
    validate(doc);
  } catch (const Error& e) {
    fail(root, e.what());
  }
  return doc;
}

}  // namespace turkic
