// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "turkic/script.hpp"

namespace turkic {

enum class QualityTier { Production, Stable, Beta, Prototype };

std::string_view quality_name(QualityTier q);
std::optional<QualityTier> quality_from_string(std::string_view s);

/// One downloadable model artifact.
struct CatalogEntry {
  std::string lang;
  Script script;
  std::string processor;
  std::string backend;
  std::string url;       // https://, http:// or file://
  std::string checksum;  // SHA-256, 64 lowercase hex chars
  std::string license;   // SPDX-style identifier
  QualityTier quality;
  std::string version;

  bool operator==(const CatalogEntry&) const = default;
};

struct CatalogFilter {
  std::optional<std::string> lang;
  std::optional<Script> script;
  std::optional<std::string> processor;
  std::optional<QualityTier> quality;
};

class CatalogManifest {
 public:
  CatalogManifest() = default;
  CatalogManifest(int schema_version, std::vector<CatalogEntry> entries,
                  std::map<std::string, std::string> defaults);

  /// Parses and validates catalog.json. Violations carry the JSON path.
  static CatalogManifest load(const std::filesystem::path& path);
  static CatalogManifest parse(const std::string& json_text,
                               const std::string& source = "catalog");

  int schema_version() const { return schema_version_; }
  const std::vector<CatalogEntry>& entries() const { return entries_; }

  /// Default backend for (lang, processor), when configured.
  std::optional<std::string> default_backend(const std::string& lang,
                                             const std::string& processor) const;

  std::vector<CatalogEntry> discover(const CatalogFilter& filter) const;

  const CatalogEntry* find(const std::string& lang,
                           const std::string& processor,
                           const std::string& backend) const;

 private:
  int schema_version_ = 1;
  std::vector<CatalogEntry> entries_;
  std::map<std::string, std::string> defaults_;  // "lang/processor" -> backend
};

/// License-segregated cache layout:
/// <root>/<license>/<lang>/<script>/<processor>/<backend>-<version>/<file>.
struct CacheLayout {
  std::filesystem::path root;

  std::filesystem::path entry_dir(const CatalogEntry& entry) const;
  std::filesystem::path entry_path(const CatalogEntry& entry) const;
};

struct CacheReport {
  std::vector<std::filesystem::path> ok;
  std::vector<std::filesystem::path> corrupt;
  std::vector<std::filesystem::path> orphaned;

  bool clean() const { return corrupt.empty() && orphaned.empty(); }
};

/// Checksum-verified, cache-aware fetcher. Supports file:// for offline
/// use and http(s):// for real catalogs. A transfer counter makes cache
/// behaviour observable in tests.
class Downloader {
 public:
  explicit Downloader(CacheLayout cache) : cache_(std::move(cache)) {}

  /// Fetches the entries needed for (lang, processors): the default backend
  /// when one is configured, every matching entry otherwise. Files are
  /// hashed before they are moved into place; a mismatch discards the
  /// download and throws ChecksumMismatch. Cached entries cost no transfer.
  std::vector<std::filesystem::path> download(
      const std::string& lang, const std::vector<std::string>& processors,
      const CatalogManifest& manifest);

  std::filesystem::path fetch(const CatalogEntry& entry);

  bool is_cached(const CatalogEntry& entry) const;

  /// Re-hashes every cached file against the manifest.
  CacheReport verify_cache(const CatalogManifest& manifest) const;

  std::size_t transfer_count() const { return transfers_; }
  const CacheLayout& cache() const { return cache_; }

 private:
  std::mutex& entry_lock(const std::string& key);

  CacheLayout cache_;
  std::atomic<std::size_t> transfers_{0};
  std::mutex locks_mutex_;
  std::map<std::string, std::unique_ptr<std::mutex>> locks_;
};

}  // namespace turkic
