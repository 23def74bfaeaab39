// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "turkic/catalog.hpp"
#include "turkic/document.hpp"
#include "turkic/script.hpp"

namespace turkic {

/// The canonical processor order. Plans are always a subsequence of this.
const std::vector<std::string>& canonical_processor_order();

/// Default annotation-layer dependencies per processor. Registered backends
/// may declare their own requirements.
const std::map<std::string, std::set<std::string>>& default_requires();

struct ProcessorSpec {
  std::string name;                 // canonical processor name
  std::set<std::string> requires_;  // processor names that must run earlier
  std::set<std::string> provides;   // annotation layers produced
  std::string backend;

  bool operator==(const ProcessorSpec&) const = default;
};

/// Everything a processor sees besides the document: the language, the text
/// actually being processed (possibly transliterated) and its script.
struct PipelineContext {
  std::string lang;
  std::string working_text;  // NFC-normalized
  std::optional<Script> working_script;
  std::optional<Script> original_script;
};

/// One pipeline stage. Implementations must be safe for concurrent
/// process() calls on distinct documents.
class Processor {
 public:
  virtual ~Processor() = default;
  virtual const ProcessorSpec& spec() const = 0;
  virtual void process(Document& doc, const PipelineContext& ctx) const = 0;
};

using ProcessorFactory =
    std::function<std::unique_ptr<Processor>(const std::string& lang)>;

/// Backend registry. Built-in implementations exist for tokenize and mwt
/// only; everything else resolves via registered plug-ins or fails with
/// MissingBackend.
class ProcessorRegistry {
 public:
  static ProcessorRegistry with_builtins();

  /// Registers a backend. Shadowing an existing name (built-in or already
  /// registered) demands override = true; a requires cycle is rejected.
  void register_processor(ProcessorSpec spec, ProcessorFactory factory,
                          bool override_existing = false);

  bool has(const std::string& name) const;
  const std::set<std::string>& requires_of(const std::string& name) const;

  struct Backend {
    ProcessorSpec spec;
    ProcessorFactory factory;
  };
  /// Selection order: explicit override, catalog default, built-in, the
  /// single registered backend.
  const Backend* select(const std::string& name,
                        const std::optional<std::string>& override_backend,
                        const std::optional<std::string>& catalog_default) const;

 private:
  void check_acyclic(const ProcessorSpec& candidate) const;
  std::map<std::string, std::vector<Backend>> backends_;
};

struct PipelineConfig {
  std::string lang;
  std::vector<std::string> processors;
  std::optional<Script> script;  // declared override
  std::map<std::string, std::string> backend_overrides;
};

struct PipelinePlan {
  std::string lang;
  std::optional<Script> declared_script;
  std::vector<ProcessorSpec> ordered_processors;
  /// Script the selected models expect, when the catalog pins one.
  std::optional<Script> model_script;
  /// Routing decided at plan time (declared script != model script):
  /// (source script, model script).
  std::optional<std::pair<Script, Script>> pre_translit;
  bool post_translit = false;  // back-transliterate lemmas after the run
};

/// Dependency closure of the requested processors, sorted into canonical
/// order, with backends chosen from overrides, catalog defaults and
/// built-ins. Throws UnknownProcessor, UnknownLanguage, MissingBackend,
/// NoTranslitRoute.
PipelinePlan resolve_plan(const PipelineConfig& config,
                          const ProcessorRegistry& registry,
                          const CatalogManifest* catalog = nullptr);

struct BatchResult {
  std::optional<Document> doc;
  std::string error;
  bool ok() const { return doc.has_value(); }
};

struct FileSummary {
  std::size_t documents = 0;
  std::size_t sentences = 0;
  std::size_t tokens = 0;
  std::size_t failures = 0;

  std::string to_json() const;
};

enum class OutputFormat { Conllu, Json };
OutputFormat output_format_from_string(const std::string& name);

/// A resolved, immutable pipeline. Safe to share across threads; run() may
/// be called concurrently.
class Pipeline {
 public:
  Pipeline(PipelineConfig config, const ProcessorRegistry& registry,
           const CatalogManifest* catalog = nullptr);

  const PipelinePlan& plan() const { return plan_; }

  /// Runs every step on one text. The document keeps the original text and
  /// the script of the original input; token offsets refer to the text
  /// variant actually tokenized (the transliterated one under routing).
  Document run(const std::string& text) const;

  /// Element-wise run(); one input's failure is reported in its slot
  /// without aborting the others. `jobs` > 1 processes items in parallel
  /// while preserving order.
  std::vector<BatchResult> batch(const std::vector<std::string>& texts,
                                 unsigned jobs = 1) const;

  /// Whole file (default) or one document per line. Output is written
  /// atomically (temp file + rename).
  FileSummary process_file(const std::filesystem::path& input,
                           const std::filesystem::path& output,
                           OutputFormat format, bool per_line = false,
                           unsigned jobs = 1) const;

 private:
  PipelinePlan plan_;
  std::vector<std::unique_ptr<Processor>> processors_;
};

}  // namespace turkic
