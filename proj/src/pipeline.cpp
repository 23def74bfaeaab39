// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "turkic/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <random>
#include <sstream>

#include "turkic/errors.hpp"
#include "turkic/mwt.hpp"
#include "turkic/tokenizer.hpp"
#include "turkic/translit.hpp"
#include "turkic/unicode.hpp"

namespace turkic {

namespace fs = std::filesystem;

const std::vector<std::string>& canonical_processor_order() {
  static const std::vector<std::string> order = {
      "tokenize", "mwt",        "morph",     "pos",       "lemma",
      "depparse", "ner",        "embeddings", "sentiment", "translate"};
  return order;
}

const std::map<std::string, std::set<std::string>>& default_requires() {
  static const std::map<std::string, std::set<std::string>> table = {
      {"tokenize", {}},
      {"mwt", {"tokenize"}},
      {"morph", {"tokenize"}},
      {"pos", {"tokenize"}},
      {"lemma", {"tokenize", "pos"}},
      {"depparse", {"tokenize", "pos"}},
      {"ner", {"tokenize"}},
      {"embeddings", {}},
      {"sentiment", {"tokenize"}},
      {"translate", {}},
  };
  return table;
}

namespace {

int canonical_index(const std::string& name) {
  const auto& order = canonical_processor_order();
  auto it = std::find(order.begin(), order.end(), name);
  return it == order.end() ? -1 : static_cast<int>(it - order.begin());
}

bool is_known_processor(const std::string& name) {
  return name == "translit" || canonical_index(name) >= 0;
}

// --- built-in processors ---------------------------------------------------

class TokenizeProcessor : public Processor {
 public:
  explicit TokenizeProcessor(const std::string& lang)
      : abbreviations_(load_abbreviations(lang)) {
    spec_.name = "tokenize";
    spec_.backend = "builtin";
    spec_.provides = {"tokens", "sentences"};
  }

  const ProcessorSpec& spec() const override { return spec_; }

  void process(Document& doc, const PipelineContext& ctx) const override {
    TokenizerRules rules =
        ctx.working_script ? TokenizerRules::for_script(*ctx.working_script)
                           : TokenizerRules::latin_cyrillic();
    std::u32string cps = uni::decode_utf8(ctx.working_text);
    doc.sentences.clear();
    for (auto [begin, end] :
         split_sentences(ctx.working_text, rules, abbreviations_)) {
      std::string sentence_text = uni::encode_utf8(
          std::u32string_view(cps).substr(begin, end - begin));
      Sentence sentence;
      sentence.text = sentence_text;
      int id = 1;
      for (const RawToken& raw : tokenize(sentence_text, rules)) {
        Token token;
        token.start_id = id;
        token.end_id = id;
        token.text = raw.text;
        token.start_char = begin + raw.start_char;
        token.end_char = begin + raw.end_char;
        Word word;
        word.id = id;
        word.text = raw.text;
        word.start_char = token.start_char;
        word.end_char = token.end_char;
        token.words.push_back(std::move(word));
        sentence.tokens.push_back(std::move(token));
        ++id;
      }
      doc.sentences.push_back(std::move(sentence));
    }
  }

 private:
  ProcessorSpec spec_;
  std::set<std::string> abbreviations_;
};

class MwtProcessor : public Processor {
 public:
  explicit MwtProcessor(const std::string& lang)
      : table_(MwtRuleTable::bundled(lang)) {
    spec_.name = "mwt";
    spec_.backend = "builtin";
    spec_.requires_ = {"tokenize"};
    spec_.provides = {"mwt"};
  }

  const ProcessorSpec& spec() const override { return spec_; }

  void process(Document& doc, const PipelineContext&) const override {
    for (auto& sentence : doc.sentences)
      sentence = expand_mwt(sentence, table_);
  }

 private:
  ProcessorSpec spec_;
  MwtRuleTable table_;
};

std::string route_detail(Script from, Script to) {
  return std::string(script_code(from)) + "->" + std::string(script_code(to));
}

}  // namespace

// --- registry ----------------------------------------------------------------

ProcessorRegistry ProcessorRegistry::with_builtins() {
  ProcessorRegistry registry;
  {
    ProcessorSpec spec;
    spec.name = "tokenize";
    spec.backend = "builtin";
    spec.provides = {"tokens", "sentences"};
    registry.backends_["tokenize"].push_back(
        {spec, [](const std::string& lang) {
           return std::make_unique<TokenizeProcessor>(lang);
         }});
  }
  {
    ProcessorSpec spec;
    spec.name = "mwt";
    spec.backend = "builtin";
    spec.requires_ = {"tokenize"};
    spec.provides = {"mwt"};
    registry.backends_["mwt"].push_back(
        {spec, [](const std::string& lang) {
           return std::make_unique<MwtProcessor>(lang);
         }});
  }
  return registry;
}

void ProcessorRegistry::check_acyclic(const ProcessorSpec& candidate) const {
  // DFS from the candidate through the requires graph formed by the default
  // table overlaid with registered specs.
  std::set<std::string> visiting, done;
  std::function<void(const std::string&)> visit = [&](const std::string& name) {
    if (done.count(name)) return;
    if (!visiting.insert(name).second)
      throw Error(ErrorCode::Generic,
                  "requires cycle involving processor '" + name + "'");
    const std::set<std::string>* reqs = nullptr;
    if (name == candidate.name) {
      reqs = &candidate.requires_;
    } else if (auto it = backends_.find(name); it != backends_.end()) {
      reqs = &it->second.front().spec.requires_;
    } else if (auto it = default_requires().find(name);
               it != default_requires().end()) {
      reqs = &it->second;
    }
    if (reqs)
      for (const auto& r : *reqs) visit(r);
    visiting.erase(name);
    done.insert(name);
  };
  visit(candidate.name);
}

void ProcessorRegistry::register_processor(ProcessorSpec spec,
                                           ProcessorFactory factory,
                                           bool override_existing) {
  if (!is_known_processor(spec.name))
    throw UnknownProcessor("unknown processor name '" + spec.name + "'");
  if (spec.provides.empty())
    throw Error(ErrorCode::Generic, "processor must provide at least one layer");
  check_acyclic(spec);
  auto it = backends_.find(spec.name);
  if (it != backends_.end() && !override_existing)
    throw Error(ErrorCode::Generic,
                "processor '" + spec.name +
                    "' already has a backend; pass override to shadow it");
  backends_[spec.name].push_back({std::move(spec), std::move(factory)});
}

bool ProcessorRegistry::has(const std::string& name) const {
  return backends_.count(name) > 0;
}

const std::set<std::string>& ProcessorRegistry::requires_of(
    const std::string& name) const {
  if (auto it = backends_.find(name); it != backends_.end())
    return it->second.back().spec.requires_;
  auto it = default_requires().find(name);
  if (it != default_requires().end()) return it->second;
  static const std::set<std::string> empty;
  return empty;
}

const ProcessorRegistry::Backend* ProcessorRegistry::select(
    const std::string& name, const std::optional<std::string>& override_backend,
    const std::optional<std::string>& catalog_default) const {
  auto it = backends_.find(name);
  if (it == backends_.end()) return nullptr;
  const auto& candidates = it->second;
  auto by_name = [&](const std::string& backend) -> const Backend* {
    for (const auto& b : candidates)
      if (b.spec.backend == backend) return &b;
    return nullptr;
  };
  if (override_backend) return by_name(*override_backend);
  if (catalog_default)
    if (const Backend* b = by_name(*catalog_default)) return b;
  if (const Backend* b = by_name("builtin")) return b;
  return &candidates.back();
}

// --- plan resolution ----------------------------------------------------------

PipelinePlan resolve_plan(const PipelineConfig& config,
                          const ProcessorRegistry& registry,
                          const CatalogManifest* catalog) {
  if (!ScriptTables::instance().find_language(config.lang))
    throw UnknownLanguage("unsupported language '" + config.lang + "'");

  // Transitive closure of requires over the requested set. "translit" is
  // routing, inserted automatically, so explicit requests for it are moot.
  std::set<std::string> closure;
  std::vector<std::string> todo;
  for (const auto& name : config.processors) {
    if (!is_known_processor(name))
      throw UnknownProcessor("unknown processor '" + name + "'");
    if (name == "translit") continue;
    todo.push_back(name);
  }
  while (!todo.empty()) {
    std::string name = todo.back();
    todo.pop_back();
    if (!closure.insert(name).second) continue;
    for (const auto& r : registry.requires_of(name)) todo.push_back(r);
  }

  PipelinePlan plan;
  plan.lang = config.lang;
  plan.declared_script = config.script;

  std::vector<std::string> ordered(closure.begin(), closure.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    return canonical_index(a) < canonical_index(b);
  });

  std::set<Script> model_scripts;
  for (const auto& name : ordered) {
    std::optional<std::string> override_backend;
    if (auto it = config.backend_overrides.find(name);
        it != config.backend_overrides.end())
      override_backend = it->second;
    std::optional<std::string> catalog_default =
        catalog ? catalog->default_backend(config.lang, name) : std::nullopt;
    const ProcessorRegistry::Backend* backend =
        registry.select(name, override_backend, catalog_default);
    if (!backend)
      throw MissingBackend("no backend available for processor '" + name +
                           "' (language " + config.lang + ")");
    plan.ordered_processors.push_back(backend->spec);
    if (catalog && backend->spec.backend != "builtin") {
      if (const CatalogEntry* entry = catalog->find(
              config.lang, name, backend->spec.backend))
        model_scripts.insert(entry->script);
    }
  }

  if (model_scripts.size() > 1)
    throw Error(ErrorCode::Generic,
                "catalog pins conflicting model scripts for this plan");
  if (!model_scripts.empty()) plan.model_script = *model_scripts.begin();

  if (plan.declared_script && plan.model_script &&
      *plan.declared_script != *plan.model_script) {
    if (!find_pair(config.lang, *plan.declared_script, *plan.model_script))
      throw NoTranslitRoute(
          "no transliteration route " + config.lang + " " +
          std::string(script_code(*plan.declared_script)) + "->" +
          std::string(script_code(*plan.model_script)));
    plan.pre_translit = {*plan.declared_script, *plan.model_script};
    plan.post_translit =
        find_pair(config.lang, *plan.model_script, *plan.declared_script) !=
        nullptr;
  } else if (plan.model_script && !plan.declared_script) {
    // Routing is decided per document at run time (auto-detected script);
    // back-transliteration applies whenever a reverse pair exists.
    plan.post_translit = true;
  }
  return plan;
}

// --- pipeline -----------------------------------------------------------------

Pipeline::Pipeline(PipelineConfig config, const ProcessorRegistry& registry,
                   const CatalogManifest* catalog)
    : plan_(resolve_plan(config, registry, catalog)) {
  for (const auto& spec : plan_.ordered_processors) {
    std::optional<std::string> override_backend;
    if (auto it = config.backend_overrides.find(spec.name);
        it != config.backend_overrides.end())
      override_backend = it->second;
    const ProcessorRegistry::Backend* backend =
        registry.select(spec.name, override_backend,
                        catalog ? catalog->default_backend(config.lang, spec.name)
                                : std::nullopt);
    processors_.push_back(backend->factory(plan_.lang));
  }
}

Document Pipeline::run(const std::string& text) const {
  Document doc;
  doc.text = text;

  PipelineContext ctx;
  ctx.lang = plan_.lang;
  ctx.working_text = normalize(text);

  if (plan_.declared_script) {
    doc.script = plan_.declared_script;
    doc.script_declared = true;
  } else {
    try {
      doc.script = detect_script(ctx.working_text);
    } catch (const NoAlphabeticContent&) {
      // Nothing classifiable (empty input, digits only): no routing.
    }
  }
  ctx.original_script = doc.script;
  ctx.working_script = doc.script;

  std::optional<std::pair<Script, Script>> route;
  if (plan_.model_script && ctx.working_script &&
      *ctx.working_script != *plan_.model_script)
    route = {*ctx.working_script, *plan_.model_script};

  if (route) {
    if (!find_pair(plan_.lang, route->first, route->second))
      throw NoTranslitRoute("no transliteration route " + plan_.lang + " " +
                            route_detail(route->first, route->second));
    Transliterator forward(plan_.lang, route->first, route->second);
    ctx.working_text = forward(ctx.working_text);
    ctx.working_script = route->second;
    doc.processor_log.push_back({"translit", "builtin", plan_.lang,
                                 route->first,
                                 route_detail(route->first, route->second)});
  }

  for (const auto& processor : processors_) {
    const ProcessorSpec& spec = processor->spec();
    try {
      processor->process(doc, ctx);
    } catch (const std::exception& e) {
      throw ProcessorFailure(spec.name, e.what());
    }
    doc.processor_log.push_back(
        {spec.name, spec.backend, plan_.lang, ctx.working_script, ""});
  }

  bool back = route && plan_.post_translit &&
              find_pair(plan_.lang, route->second, route->first) != nullptr;
  if (back) {
    Transliterator backward(plan_.lang, route->second, route->first);
    for (auto& sentence : doc.sentences)
      for (auto& token : sentence.tokens)
        for (auto& word : token.words)
          if (word.lemma) word.lemma = backward(*word.lemma);
    doc.processor_log.push_back({"translit-back", "builtin", plan_.lang,
                                 route->second, "lemmas"});
  }
  return doc;
}

std::vector<BatchResult> Pipeline::batch(const std::vector<std::string>& texts,
                                         unsigned jobs) const {
  std::vector<BatchResult> results(texts.size());
  auto work = [&](std::size_t i) {
    try {
      results[i].doc = run(texts[i]);
    } catch (const std::exception& e) {
      results[i].error = e.what();
    }
  };
  if (jobs <= 1 || texts.size() <= 1) {
    for (std::size_t i = 0; i < texts.size(); ++i) work(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> workers;
  unsigned n = std::min<std::size_t>(jobs, texts.size());
  for (unsigned w = 0; w < n; ++w)
    workers.push_back(std::async(std::launch::async, [&]() {
      for (std::size_t i = next++; i < texts.size(); i = next++) work(i);
    }));
  for (auto& f : workers) f.get();
  return results;
}

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "conllu") return OutputFormat::Conllu;
  if (name == "json") return OutputFormat::Json;
  throw Error(ErrorCode::Generic,
              "unsupported output format '" + name + "' (conllu or json)");
}

std::string FileSummary::to_json() const {
  std::ostringstream out;
  out << "{\"documents\":" << documents << ",\"sentences\":" << sentences
      << ",\"tokens\":" << tokens << ",\"failures\":" << failures << "}";
  return out.str();
}

FileSummary Pipeline::process_file(const fs::path& input,
                                   const fs::path& output, OutputFormat format,
                                   bool per_line, unsigned jobs) const {
  std::ifstream in(input, std::ios::binary);
  if (!in) throw Error(ErrorCode::Generic, "cannot read " + input.string());
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  uni::decode_utf8(content);  // reject invalid UTF-8 with a byte offset

  std::vector<std::string> inputs;
  if (per_line) {
    std::istringstream lines(content);
    std::string line;
    while (std::getline(lines, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      inputs.push_back(line);
    }
  } else if (!content.empty()) {
    inputs.push_back(content);
  }

  FileSummary summary;
  std::string serialized;
  for (const auto& result : batch(inputs, jobs)) {
    if (!result.ok()) {
      ++summary.failures;
      continue;
    }
    const Document& doc = *result.doc;
    ++summary.documents;
    summary.sentences += doc.sentences.size();
    summary.tokens += doc.token_count();
    if (format == OutputFormat::Conllu) {
      serialized += to_conllu(doc);
    } else {
      serialized += to_json(doc);
      serialized += '\n';
    }
  }

  fs::path dir = output.parent_path().empty() ? fs::path(".")
                                              : output.parent_path();
  fs::create_directories(dir);
  static std::atomic<unsigned> counter{0};
  fs::path tmp = dir / (output.filename().string() + ".tmp" +
                        std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error(ErrorCode::Generic, "cannot write " + tmp.string());
    out.write(serialized.data(),
              static_cast<std::streamsize>(serialized.size()));
  }
  fs::rename(tmp, output);
  return summary;
}

}  // namespace turkic
