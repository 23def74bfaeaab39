// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line surface. Subcommands map onto the library modules; exit
// codes are stable and documented in docs/cli.md:
//   0 ok, 1 generic error, 2 no alphabetic content, 3 unsupported pair,
//   4 unmappable character, 5 missing backend, 6 checksum mismatch,
//   7 parse error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "turkic/catalog.hpp"
#include "turkic/data_paths.hpp"
#include "turkic/document.hpp"
#include "turkic/errors.hpp"
#include "turkic/metrics.hpp"
#include "turkic/pipeline.hpp"
#include "turkic/script.hpp"
#include "turkic/tokenizer.hpp"
#include "turkic/translit.hpp"
#include "turkic/unicode.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw turkic::Error(turkic::ErrorCode::Generic,
                               "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw turkic::Error(turkic::ErrorCode::Generic,
                                "cannot write " + path);
  out << data;
}

std::string chomp(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

turkic::Script parse_script(const std::string& code) {
  auto s = turkic::script_from_code(code);
  if (!s)
    throw turkic::Error(turkic::ErrorCode::Generic,
                        "unknown script code '" + code +
                            "' (Latn, Cyrl, Arab, Orkh)");
  return *s;
}

struct CommonIo {
  std::string input;   // path or "-"
  std::string output;  // path or "-"
  bool porcelain = false;
};

void add_io(CLI::App* cmd, CommonIo& io) {
  cmd->add_option("-i,--input", io.input, "Input file (default: stdin)");
  cmd->add_option("-o,--output", io.output, "Output file (default: stdout)");
  cmd->add_flag("--porcelain", io.porcelain,
                "Stable tab-separated output for scripting");
}

int run_detect(const CommonIo& io, bool segments) {
  std::string text = turkic::normalize(read_input(io.input));
  std::ostringstream out;
  if (segments) {
    for (const auto& seg : turkic::detect_segments(text)) {
      out << turkic::script_code(seg.script) << '\t' << seg.start_char << '\t'
          << seg.end_char << '\t' << seg.text << '\n';
    }
  } else {
    auto result = turkic::detect_script_result(text);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", result.confidence);
    out << turkic::script_code(result.script) << ' ' << buf << '\n';
  }
  write_output(io.output, out.str());
  return 0;
}

int run_translit(const CommonIo& io, const std::string& lang,
                 const std::string& from, const std::string& to, bool strict,
                 bool list_pairs) {
  if (list_pairs) {
    std::ostringstream out;
    for (const auto& p : turkic::supported_pairs())
      out << p.lang << '\t' << turkic::script_code(p.source) << '\t'
          << turkic::script_code(p.target) << '\t' << p.standard << '\n';
    write_output(io.output, out.str());
    return 0;
  }
  turkic::Transliterator translit(lang, parse_script(from), parse_script(to),
                                  /*preserve_unknown=*/!strict);
  std::string text = read_input(io.input);
  bool had_newline = !text.empty() && text.back() == '\n';
  std::string converted = translit(chomp(text));
  write_output(io.output, converted + (had_newline ? "\n" : ""));
  return 0;
}

int run_tokenize(const CommonIo& io, const std::string& script_code_str) {
  std::string text = turkic::normalize(read_input(io.input));
  turkic::Script script;
  if (!script_code_str.empty()) {
    script = parse_script(script_code_str);
  } else {
    try {
      script = turkic::detect_script(text);
    } catch (const turkic::NoAlphabeticContent&) {
      script = turkic::Script::Latin;
    }
  }
  auto tokens = turkic::tokenize(chomp(text),
                                 turkic::TokenizerRules::for_script(script));
  std::ostringstream out;
  for (const auto& t : tokens) {
    if (io.porcelain)
      out << t.start_char << '\t' << t.end_char << '\t' << t.text << '\n';
    else
      out << t.text << '\n';
  }
  write_output(io.output, out.str());
  return 0;
}

int run_pipeline_cmd(const CommonIo& io, const std::string& lang,
                     const std::vector<std::string>& processors,
                     const std::string& script_str, const std::string& format,
                     const std::string& catalog_path, bool per_line,
                     unsigned jobs) {
  turkic::PipelineConfig config;
  config.lang = lang;
  config.processors = processors;
  if (!script_str.empty()) config.script = parse_script(script_str);

  turkic::CatalogManifest catalog;
  const turkic::CatalogManifest* catalog_ptr = nullptr;
  if (!catalog_path.empty()) {
    catalog = turkic::CatalogManifest::load(catalog_path);
    catalog_ptr = &catalog;
  }

  turkic::ProcessorRegistry registry =
      turkic::ProcessorRegistry::with_builtins();
  turkic::Pipeline pipeline(config, registry, catalog_ptr);
  turkic::OutputFormat out_format = turkic::output_format_from_string(format);

  if (!io.input.empty() && io.input != "-" && !io.output.empty() &&
      io.output != "-") {
    auto summary = pipeline.process_file(io.input, io.output, out_format,
                                         per_line, jobs);
    std::cout << summary.to_json() << '\n';
    return summary.failures == 0 ? 0 : 1;
  }

  std::string text = read_input(io.input);
  turkic::uni::decode_utf8(text);  // fail fast on broken encodings
  std::vector<std::string> inputs;
  if (per_line) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) inputs.push_back(line);
  } else if (!text.empty()) {
    inputs.push_back(chomp(text));
  }
  std::ostringstream out;
  std::size_t failures = 0;
  for (const auto& result : pipeline.batch(inputs, jobs)) {
    if (!result.ok()) {
      ++failures;
      std::cerr << "error: " << result.error << '\n';
      continue;
    }
    if (out_format == turkic::OutputFormat::Conllu)
      out << turkic::to_conllu(*result.doc);
    else
      out << turkic::to_json(*result.doc) << '\n';
  }
  write_output(io.output, out.str());
  return failures == 0 ? 0 : 1;
}

int run_convert(const CommonIo& io, const std::string& from,
                const std::string& to) {
  auto from_format = turkic::output_format_from_string(from);
  auto to_format = turkic::output_format_from_string(to);
  std::string text = read_input(io.input);
  turkic::Document doc = from_format == turkic::OutputFormat::Conllu
                             ? turkic::from_conllu(text)
                             : turkic::from_json(text);
  std::string out = to_format == turkic::OutputFormat::Conllu
                        ? turkic::to_conllu(doc)
                        : turkic::to_json(doc) + "\n";
  write_output(io.output, out);
  return 0;
}

int run_catalog(const std::string& action, const std::string& catalog_path,
                const std::string& lang,
                const std::vector<std::string>& processors,
                const std::string& quality, const std::string& cache_dir) {
  turkic::CatalogManifest manifest = turkic::CatalogManifest::load(
      catalog_path.empty() ? (turkic::data_dir() / "catalog.json").string()
                           : catalog_path);
  turkic::CacheLayout cache{cache_dir.empty()
                                ? turkic::default_cache_dir()
                                : std::filesystem::path(cache_dir)};
  turkic::Downloader downloader(cache);

  if (action == "list") {
    turkic::CatalogFilter filter;
    if (!lang.empty()) filter.lang = lang;
    if (!quality.empty()) {
      auto q = turkic::quality_from_string(quality);
      if (!q)
        throw turkic::Error(turkic::ErrorCode::Generic,
                            "unknown quality tier '" + quality + "'");
      filter.quality = q;
    }
    for (const auto& e : manifest.discover(filter))
      std::cout << e.lang << '\t' << turkic::script_code(e.script) << '\t'
                << e.processor << '\t' << e.backend << '\t'
                << turkic::quality_name(e.quality) << '\t' << e.license
                << '\t' << e.version << '\n';
    return 0;
  }
  if (action == "download") {
    if (lang.empty())
      throw turkic::Error(turkic::ErrorCode::Generic,
                          "catalog download needs --lang");
    for (const auto& processor : processors.empty()
                                     ? std::vector<std::string>{"tokenize"}
                                     : processors) {
      auto before = downloader.transfer_count();
      auto paths = downloader.download(lang, {processor}, manifest);
      for (const auto& p : paths)
        std::cout << (downloader.transfer_count() > before ? "fetched"
                                                           : "cached")
                  << '\t' << p.string() << '\n';
    }
    return 0;
  }
  if (action == "verify") {
    auto report = downloader.verify_cache(manifest);
    for (const auto& p : report.ok) std::cout << "ok\t" << p.string() << '\n';
    for (const auto& p : report.corrupt)
      std::cout << "corrupt\t" << p.string() << '\n';
    for (const auto& p : report.orphaned)
      std::cout << "orphaned\t" << p.string() << '\n';
    return report.clean() ? 0 : 6;
  }
  throw turkic::Error(turkic::ErrorCode::Generic,
                      "unknown catalog action '" + action +
                          "' (list, download, verify)");
}

int run_fertility(const CommonIo& io, const std::string& lang,
                  const std::string& merges_path,
                  const std::string& vocab_path) {
  std::string text = read_input(io.input);
  std::vector<std::string> sentences;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty()) sentences.push_back(line);

  std::map<std::string, std::vector<std::string>> corpus;
  corpus[lang.empty() ? "und" : lang] = sentences;

  turkic::IdentityAdapter identity;
  std::vector<const turkic::SubwordTokenizerAdapter*> adapters = {&identity};
  std::optional<turkic::BpeAdapter> bpe;
  if (!merges_path.empty()) {
    bpe = turkic::BpeAdapter::from_merges_file(merges_path);
    adapters.push_back(&*bpe);
  }
  std::optional<turkic::VocabAdapter> vocab;
  if (!vocab_path.empty()) {
    vocab = turkic::VocabAdapter::from_vocab_file(vocab_path);
    adapters.push_back(&*vocab);
  }
  write_output(io.output, turkic::reports_to_tsv(compare(corpus, adapters)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Script-aware text processing for Turkic languages"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // detect
  CommonIo detect_io;
  bool detect_segments_flag = false;
  CLI::App* detect = app.add_subcommand("detect", "Detect the dominant script");
  add_io(detect, detect_io);
  detect->add_flag("--segments", detect_segments_flag,
                   "One line per single-script segment");

  // segment
  CommonIo segment_io;
  CLI::App* segment =
      app.add_subcommand("segment", "Split text into single-script segments");
  add_io(segment, segment_io);

  // translit
  CommonIo translit_io;
  std::string tl_lang, tl_from, tl_to;
  bool tl_strict = false, tl_list = false;
  CLI::App* translit =
      app.add_subcommand("translit", "Transliterate between scripts");
  add_io(translit, translit_io);
  translit->add_option("--lang", tl_lang, "ISO 639-3 language code");
  translit->add_option("--from", tl_from, "Source script code");
  translit->add_option("--to", tl_to, "Target script code");
  translit->add_flag("--strict", tl_strict,
                     "Fail on unmappable characters instead of copying them");
  translit->add_flag("--list-pairs", tl_list, "List supported pairs and exit");

  // tokenize
  CommonIo tokenize_io;
  std::string tok_script;
  CLI::App* tokenize_cmd = app.add_subcommand("tokenize", "Rule-based tokenizer");
  add_io(tokenize_cmd, tokenize_io);
  tokenize_cmd->add_option("--script", tok_script,
                           "Script override (default: detected)");

  // run
  CommonIo run_io;
  std::string run_lang, run_script, run_format = "conllu", run_catalog_path;
  std::vector<std::string> run_processors = {"tokenize"};
  bool run_per_line = false;
  unsigned run_jobs = 1;
  CLI::App* run = app.add_subcommand("run", "Run a processing pipeline");
  add_io(run, run_io);
  run->add_option("--lang", run_lang, "ISO 639-3 language code")->required();
  run->add_option("--processors", run_processors,
                  "Processor names (default: tokenize)")
      ->delimiter(',');
  run->add_option("--script", run_script, "Declared script override");
  run->add_option("--format", run_format, "Output format: conllu or json");
  run->add_option("--catalog", run_catalog_path, "catalog.json path");
  run->add_flag("--per-line", run_per_line, "One document per input line");
  run->add_option("--jobs", run_jobs, "Parallel batch workers");

  // convert
  CommonIo convert_io;
  std::string conv_from = "conllu", conv_to = "json";
  CLI::App* convert =
      app.add_subcommand("convert", "Convert between conllu and json");
  add_io(convert, convert_io);
  convert->add_option("--from", conv_from, "Input format");
  convert->add_option("--to", conv_to, "Output format");

  // catalog
  std::string cat_action, cat_path, cat_lang, cat_quality, cat_cache;
  std::vector<std::string> cat_processors;
  CLI::App* catalog =
      app.add_subcommand("catalog", "Model catalog: list, download, verify");
  catalog->add_option("action", cat_action, "list | download | verify")
      ->required();
  catalog->add_option("--catalog", cat_path, "catalog.json path");
  catalog->add_option("--lang", cat_lang, "Filter / download language");
  catalog->add_option("--processors", cat_processors, "Processors to download")
      ->delimiter(',');
  catalog->add_option("--quality", cat_quality, "Quality tier filter");
  catalog->add_option("--cache", cat_cache,
                      "Cache root (default: $TURKIC_CACHE_DIR)");

  // fertility
  CommonIo fert_io;
  std::string fert_lang, fert_merges, fert_vocab;
  CLI::App* fert = app.add_subcommand(
      "fertility", "Tokenizer fertility metrics over one sentence per line");
  add_io(fert, fert_io);
  fert->add_option("--lang", fert_lang, "Language label for the report");
  fert->add_option("--merges", fert_merges,
                   "BPE merges file for a subword adapter");
  fert->add_option("--vocab", fert_vocab,
                   "Subword vocabulary file for a longest-prefix adapter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (detect->parsed()) return run_detect(detect_io, detect_segments_flag);
    if (segment->parsed()) return run_detect(segment_io, true);
    if (translit->parsed()) {
      if (!tl_list && (tl_lang.empty() || tl_from.empty() || tl_to.empty()))
        throw turkic::Error(turkic::ErrorCode::Generic,
                            "translit needs --lang, --from and --to");
      return run_translit(translit_io, tl_lang, tl_from, tl_to, tl_strict,
                          tl_list);
    }
    if (tokenize_cmd->parsed()) return run_tokenize(tokenize_io, tok_script);
    if (run->parsed())
      return run_pipeline_cmd(run_io, run_lang, run_processors, run_script,
                              run_format, run_catalog_path, run_per_line,
                              run_jobs);
    if (convert->parsed()) return run_convert(convert_io, conv_from, conv_to);
    if (catalog->parsed())
      return run_catalog(cat_action, cat_path, cat_lang, cat_processors,
                         cat_quality, cat_cache);
    if (fert->parsed())
      return run_fertility(fert_io, fert_lang, fert_merges, fert_vocab);
  } catch (const turkic::UnsupportedPair& e) {
    std::cerr << "error: " << e.what() << "\nsupported pairs:\n";
    for (const auto& p : turkic::supported_pairs())
      std::cerr << "  " << p.lang << ' ' << turkic::script_code(p.source)
                << "->" << turkic::script_code(p.target) << " (" << p.standard
                << ")\n";
    return static_cast<int>(e.code());
  } catch (const turkic::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
