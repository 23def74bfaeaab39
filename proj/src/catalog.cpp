// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "turkic/catalog.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include "turkic/errors.hpp"

namespace turkic {

namespace {

using nlohmann::json;

constexpr int kSupportedSchemaVersion = 1;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError(msg, path);
}

bool valid_checksum(const std::string& s) {
  if (s.size() != 64) return false;
  for (char c : s)
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
  return true;
}

}  // namespace

std::string_view quality_name(QualityTier q) {
  switch (q) {
    case QualityTier::Production: return "production";
    case QualityTier::Stable: return "stable";
    case QualityTier::Beta: return "beta";
    case QualityTier::Prototype: return "prototype";
  }
  return "prototype";
}

std::optional<QualityTier> quality_from_string(std::string_view s) {
  if (s == "production") return QualityTier::Production;
  if (s == "stable") return QualityTier::Stable;
  if (s == "beta") return QualityTier::Beta;
  if (s == "prototype") return QualityTier::Prototype;
  return std::nullopt;
}

CatalogManifest::CatalogManifest(int schema_version,
                                 std::vector<CatalogEntry> entries,
                                 std::map<std::string, std::string> defaults)
    : schema_version_(schema_version),
      entries_(std::move(entries)),
      defaults_(std::move(defaults)) {
  std::set<std::string> seen;
  for (const auto& e : entries_) {
    std::string key = e.lang + "/" + std::string(script_code(e.script)) + "/" +
                      e.processor + "/" + e.backend + "/" + e.version;
    if (!seen.insert(key).second)
      throw ParseError("duplicate catalog entry " + key, "catalog");
  }
}

CatalogManifest CatalogManifest::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::Generic, "cannot open catalog " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

CatalogManifest CatalogManifest::parse(const std::string& json_text,
                                       const std::string& source) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), source);
  }
  const std::string root = source;
  if (!j.is_object()) fail(root, "expected top-level object");

  auto sv = j.find("schema_version");
  if (sv == j.end()) fail(root + "/schema_version", "missing schema_version");
  if (!sv->is_number_integer())
    fail(root + "/schema_version", "expected integer");
  int version = sv->get<int>();
  if (version != kSupportedSchemaVersion)
    throw Error(ErrorCode::Generic,
                "unsupported catalog schema_version " + std::to_string(version));

  auto ej = j.find("entries");
  if (ej == j.end()) fail(root + "/entries", "missing entries");
  if (!ej->is_array()) fail(root + "/entries", "expected array");

  std::vector<CatalogEntry> entries;
  for (std::size_t i = 0; i < ej->size(); ++i) {
    const std::string path = root + "/entries/" + std::to_string(i);
    const json& item = (*ej)[i];
    if (!item.is_object()) fail(path, "expected entry object");
    CatalogEntry entry;
    auto str = [&](const char* key) -> std::string {
      auto it = item.find(key);
      if (it == item.end() || !it->is_string())
        fail(path + "/" + key, "expected string");
      return it->get<std::string>();
    };
    entry.lang = str("lang");
    auto script = script_from_code(str("script"));
    if (!script) fail(path + "/script", "unknown script code");
    entry.script = *script;
    entry.processor = str("processor");
    entry.backend = str("backend");
    entry.url = str("url");
    entry.checksum = str("checksum");
    if (!valid_checksum(entry.checksum))
      fail(path + "/checksum", "expected 64 lowercase hex characters");
    entry.license = str("license");
    auto quality = quality_from_string(str("quality"));
    if (!quality)
      fail(path + "/quality",
           "expected production|stable|beta|prototype");
    entry.quality = *quality;
    entry.version = str("version");
    entries.push_back(std::move(entry));
  }

  std::map<std::string, std::string> defaults;
  if (auto dj = j.find("defaults"); dj != j.end() && !dj->is_null()) {
    if (!dj->is_object()) fail(root + "/defaults", "expected object");
    for (auto& [lang, procs] : dj->items()) {
      if (!procs.is_object())
        fail(root + "/defaults/" + lang, "expected object");
      for (auto& [proc, backend] : procs.items()) {
        if (!backend.is_string())
          fail(root + "/defaults/" + lang + "/" + proc, "expected string");
        defaults[lang + "/" + proc] = backend.get<std::string>();
      }
    }
  }

  // Every default must point at a catalog entry or a built-in backend.
  for (const auto& [key, backend] : defaults) {
    if (backend == "builtin") continue;
    auto slash = key.find('/');
    std::string lang = key.substr(0, slash);
    std::string proc = key.substr(slash + 1);
    bool found = false;
    for (const auto& e : entries)
      if (e.lang == lang && e.processor == proc && e.backend == backend) {
        found = true;
        break;
      }
    if (!found)
      fail(root + "/defaults/" + lang + "/" + proc,
           "default backend '" + backend + "' has no catalog entry");
  }

  try {
    return CatalogManifest(version, std::move(entries), std::move(defaults));
  } catch (const ParseError& e) {
    fail(root, e.what());
  }
}

std::optional<std::string> CatalogManifest::default_backend(
    const std::string& lang, const std::string& processor) const {
  auto it = defaults_.find(lang + "/" + processor);
  if (it == defaults_.end()) return std::nullopt;
  return it->second;
}

std::vector<CatalogEntry> CatalogManifest::discover(
    const CatalogFilter& filter) const {
  std::vector<CatalogEntry> out;
  for (const auto& e : entries_) {
    if (filter.lang && e.lang != *filter.lang) continue;
    if (filter.script && e.script != *filter.script) continue;
    if (filter.processor && e.processor != *filter.processor) continue;
    if (filter.quality && e.quality != *filter.quality) continue;
    out.push_back(e);
  }
  return out;
}

const CatalogEntry* CatalogManifest::find(const std::string& lang,
                                          const std::string& processor,
                                          const std::string& backend) const {
  for (const auto& e : entries_)
    if (e.lang == lang && e.processor == processor && e.backend == backend)
      return &e;
  return nullptr;
}

std::filesystem::path CacheLayout::entry_dir(const CatalogEntry& entry) const {
  return root / entry.license / entry.lang /
         std::string(script_code(entry.script)) / entry.processor /
         (entry.backend + "-" + entry.version);
}

std::filesystem::path CacheLayout::entry_path(const CatalogEntry& entry) const {
  std::string name = entry.url;
  auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  if (name.empty()) name = "model.bin";
  return entry_dir(entry) / name;
}

}  // namespace turkic
