// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#ifdef TURKIC_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include <fstream>
#include <random>

#include "turkic/catalog.hpp"
#include "turkic/errors.hpp"
#include "turkic/sha256.hpp"

namespace turkic {

namespace fs = std::filesystem;

namespace {

struct ParsedUrl {
  std::string scheme;
  std::string host_port;  // "host" or "host:port"
  std::string path;
};

ParsedUrl parse_url(const std::string& url) {
  auto sep = url.find("://");
  if (sep == std::string::npos)
    throw Error(ErrorCode::Generic, "URL without scheme: " + url);
  ParsedUrl out;
  out.scheme = url.substr(0, sep);
  std::string rest = url.substr(sep + 3);
  if (out.scheme == "file") {
    // file:///abs/path and file:/abs/path both resolve to /abs/path.
    out.path = rest.empty() || rest[0] == '/' ? rest : "/" + rest;
    return out;
  }
  auto slash = rest.find('/');
  if (slash == std::string::npos) {
    out.host_port = rest;
    out.path = "/";
  } else {
    out.host_port = rest.substr(0, slash);
    out.path = rest.substr(slash);
  }
  return out;
}

std::string fetch_url(const std::string& url) {
  ParsedUrl parsed = parse_url(url);
  if (parsed.scheme == "file") {
    std::ifstream in(parsed.path, std::ios::binary);
    if (!in)
      throw Error(ErrorCode::Generic, "cannot read " + parsed.path);
    std::string data((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return data;
  }
  if (parsed.scheme == "http"
#ifdef TURKIC_HAVE_OPENSSL
      || parsed.scheme == "https"
#endif
  ) {
    httplib::Client client((parsed.scheme + "://" + parsed.host_port).c_str());
    client.set_follow_location(true);
    auto res = client.Get(parsed.path.c_str());
    if (!res)
      throw Error(ErrorCode::Generic, "request failed for " + url);
    if (res->status != 200)
      throw Error(ErrorCode::Generic, "HTTP " + std::to_string(res->status) +
                                          " for " + url);
    return res->body;
  }
  throw Error(ErrorCode::Generic,
              "unsupported URL scheme '" + parsed.scheme + "'");
}

std::string temp_name() {
  static std::mt19937_64 rng(std::random_device{}());
  return "fetch-" + std::to_string(rng()) + ".part";
}

}  // namespace

std::mutex& Downloader::entry_lock(const std::string& key) {
  std::lock_guard<std::mutex> guard(locks_mutex_);
  auto& slot = locks_[key];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

bool Downloader::is_cached(const CatalogEntry& entry) const {
  return fs::exists(cache_.entry_path(entry));
}

std::filesystem::path Downloader::fetch(const CatalogEntry& entry) {
  fs::path final_path = cache_.entry_path(entry);
  std::lock_guard<std::mutex> guard(entry_lock(final_path.string()));
  if (fs::exists(final_path)) return final_path;

  std::string data = fetch_url(entry.url);
  ++transfers_;
  std::string digest = sha256_hex(data);
  if (digest != entry.checksum)
    throw ChecksumMismatch("checksum mismatch for " + entry.url +
                           ": expected " + entry.checksum + ", got " + digest);

  // Verify-then-rename: bytes only become visible at the final path after
  // the hash check.
  fs::path tmp_dir = cache_.root / "tmp";
  fs::create_directories(tmp_dir);
  fs::path tmp = tmp_dir / temp_name();
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out)
      throw Error(ErrorCode::Generic, "cannot write " + tmp.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out)
      throw Error(ErrorCode::Generic, "short write to " + tmp.string());
  }
  fs::create_directories(final_path.parent_path());
  fs::rename(tmp, final_path);
  return final_path;
}

std::vector<std::filesystem::path> Downloader::download(
    const std::string& lang, const std::vector<std::string>& processors,
    const CatalogManifest& manifest) {
  std::vector<fs::path> out;
  for (const auto& processor : processors) {
    std::vector<CatalogEntry> wanted;
    auto def = manifest.default_backend(lang, processor);
    for (const auto& e : manifest.entries()) {
      if (e.lang != lang || e.processor != processor) continue;
      if (def && e.backend != *def) continue;
      wanted.push_back(e);
    }
    if (wanted.empty())
      throw NotInCatalog("no catalog entry for " + lang + "/" + processor);
    for (const auto& e : wanted) out.push_back(fetch(e));
  }
  return out;
}

CacheReport Downloader::verify_cache(const CatalogManifest& manifest) const {
  CacheReport report;
  if (!fs::exists(cache_.root)) return report;

  std::map<std::string, const CatalogEntry*> by_path;
  for (const auto& e : manifest.entries())
    by_path[cache_.entry_path(e).string()] = &e;

  for (const auto& dirent : fs::recursive_directory_iterator(cache_.root)) {
    if (!dirent.is_regular_file()) continue;
    const fs::path& path = dirent.path();
    // The staging area never holds verified files.
    auto rel = fs::relative(path, cache_.root);
    if (!rel.empty() && rel.begin()->string() == "tmp") continue;
    auto it = by_path.find(path.string());
    if (it == by_path.end()) {
      report.orphaned.push_back(path);
      continue;
    }
    if (sha256_file(path) == it->second->checksum)
      report.ok.push_back(path);
    else
      report.corrupt.push_back(path);
  }
  return report;
}

}  // namespace turkic
