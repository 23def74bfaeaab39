// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <thread>
#include <unistd.h>

#include "turkic/catalog.hpp"
#include "turkic/data_paths.hpp"
#include "turkic/errors.hpp"
#include "turkic/sha256.hpp"

using namespace turkic;
namespace fs = std::filesystem;

namespace {

struct Fixture {
  fs::path root;        // temp dir
  fs::path model_dir;   // where fixture "model" files live
  CacheLayout cache;
  std::string manifest_json;

  Fixture() {
    root = fs::temp_directory_path() /
           ("turkic-registry-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()));
    model_dir = root / "models";
    fs::create_directories(model_dir);
    cache.root = root / "cache";
  }
  ~Fixture() { fs::remove_all(root); }

  static int counter() {
    static int n = 0;
    return ++n;
  }

  std::string write_model(const std::string& name, const std::string& body) {
    std::ofstream out(model_dir / name, std::ios::binary);
    out << body;
    return sha256_hex(body);
  }

  std::string entry_json(const std::string& lang, const std::string& script,
                         const std::string& processor,
                         const std::string& backend, const std::string& file,
                         const std::string& checksum,
                         const std::string& license = "Apache-2.0",
                         const std::string& quality = "stable") {
    return "{\"lang\":\"" + lang + "\",\"script\":\"" + script +
           "\",\"processor\":\"" + processor + "\",\"backend\":\"" + backend +
           "\",\"url\":\"file://" + (model_dir / file).string() +
           "\",\"checksum\":\"" + checksum + "\",\"license\":\"" + license +
           "\",\"quality\":\"" + quality + "\",\"version\":\"1.0\"}";
  }
};

// Quality tiers per language for the morphology analyzers, as shipped in
// the fixture catalog: production for tur/kaz/tat, stable for aze/kir/uzb.
CatalogManifest tier_fixture(Fixture& fx) {
  std::string tok = fx.write_model("tok.bin", "tokenizer rules v1\n");
  std::string json = "{\"schema_version\":1,\"defaults\":{},\"entries\":[";
  json += fx.entry_json("tur", "Latn", "morph", "fst", "tok.bin", tok,
                        "Apache-2.0", "production") + ",";
  json += fx.entry_json("kaz", "Cyrl", "morph", "fst", "tok.bin", tok,
                        "GPL-3.0", "production") + ",";
  json += fx.entry_json("tat", "Cyrl", "morph", "fst", "tok.bin", tok,
                        "GPL-3.0", "production") + ",";
  json += fx.entry_json("aze", "Latn", "morph", "fst", "tok.bin", tok,
                        "GPL-3.0", "stable") + ",";
  json += fx.entry_json("kir", "Cyrl", "morph", "fst", "tok.bin", tok,
                        "GPL-3.0", "stable") + ",";
  json += fx.entry_json("uzb", "Latn", "morph", "fst", "tok.bin", tok,
                        "GPL-3.0", "stable") + ",";
  json += fx.entry_json("kaz", "Cyrl", "tokenize", "neural", "tok.bin", tok);
  json += "]}";
  return CatalogManifest::parse(json);
}

}  // namespace

TEST_SUITE("registry") {

TEST_CASE("manifest loads and validates") {
  Fixture fx;
  std::string checksum = fx.write_model("a.bin", "model A\n");
  std::string json = "{\"schema_version\":1,\"defaults\":{\"kaz\":{"
                     "\"tokenize\":\"neural\"}},\"entries\":[" +
                     fx.entry_json("kaz", "Cyrl", "tokenize", "neural",
                                   "a.bin", checksum) + "," +
                     fx.entry_json("kaz", "Cyrl", "pos", "neural", "a.bin",
                                   checksum) + "," +
                     fx.entry_json("tur", "Latn", "ner", "stanza", "a.bin",
                                   checksum) +
                     "]}";
  fs::path path = fx.root / "catalog.json";
  {
    std::ofstream out(path);
    out << json;
  }
  CatalogManifest manifest = CatalogManifest::load(path);
  CHECK(manifest.entries().size() == 3);
  CHECK(manifest.schema_version() == 1);
  CHECK(manifest.default_backend("kaz", "tokenize") == "neural");
  CHECK_FALSE(manifest.default_backend("kaz", "ner").has_value());
}

TEST_CASE("manifest violations carry a field path") {
  auto message_of = [](const std::string& json) {
    try {
      CatalogManifest::parse(json, "catalog");
    } catch (const std::exception& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message_of("{}").find("schema_version") != std::string::npos);
  CHECK(message_of("{\"schema_version\":1}").find("entries") !=
        std::string::npos);
  CHECK(message_of("{\"schema_version\":99,\"entries\":[]}")
            .find("unsupported") != std::string::npos);
  CHECK(message_of("not json at all").find("catalog") != std::string::npos);

  // 63-character checksum.
  std::string bad_checksum =
      "{\"schema_version\":1,\"entries\":[{\"lang\":\"kaz\",\"script\":"
      "\"Cyrl\",\"processor\":\"pos\",\"backend\":\"x\",\"url\":\"file:///x\","
      "\"checksum\":\"" + std::string(63, 'a') +
      "\",\"license\":\"MIT\",\"quality\":\"beta\",\"version\":\"1\"}]}";
  CHECK(message_of(bad_checksum).find("/entries/0/checksum") !=
        std::string::npos);

  std::string bad_quality =
      "{\"schema_version\":1,\"entries\":[{\"lang\":\"kaz\",\"script\":"
      "\"Cyrl\",\"processor\":\"pos\",\"backend\":\"x\",\"url\":\"file:///x\","
      "\"checksum\":\"" + std::string(64, 'a') +
      "\",\"license\":\"MIT\",\"quality\":\"excellent\",\"version\":\"1\"}]}";
  CHECK(message_of(bad_quality).find("/entries/0/quality") !=
        std::string::npos);

  // Defaults must point somewhere real.
  std::string dangling =
      "{\"schema_version\":1,\"defaults\":{\"kaz\":{\"pos\":\"ghost\"}},"
      "\"entries\":[]}";
  CHECK(message_of(dangling).find("ghost") != std::string::npos);
}

TEST_CASE("download verifies, caches and skips the network on re-run") {
  Fixture fx;
  std::string checksum = fx.write_model("model.bin", "hello model\n");
  // Frozen value computed with an independent SHA-256 implementation.
  CHECK(checksum ==
        "762f891243fbf4ac23698261a10e9f49a0226bed54c2a985e90e2f5df35c835c");

  std::string json = "{\"schema_version\":1,\"defaults\":{},\"entries\":[" +
                     fx.entry_json("kaz", "Cyrl", "tokenize", "neural",
                                   "model.bin", checksum) +
                     "]}";
  CatalogManifest manifest = CatalogManifest::parse(json);
  Downloader downloader(fx.cache);

  auto paths = downloader.download("kaz", {"tokenize"}, manifest);
  REQUIRE(paths.size() == 1);
  CHECK(fs::exists(paths[0]));
  CHECK(downloader.transfer_count() == 1);
  CHECK(sha256_file(paths[0]) == checksum);

  // Second call: zero transfers.
  auto again = downloader.download("kaz", {"tokenize"}, manifest);
  CHECK(again == paths);
  CHECK(downloader.transfer_count() == 1);

  // Selective download never touches entries for other processors.
  CHECK_THROWS_AS(downloader.download("kaz", {"pos"}, manifest), NotInCatalog);
  CHECK(downloader.transfer_count() == 1);
}

TEST_CASE("tampered payload is rejected and leaves no cache entry") {
  Fixture fx;
  std::string checksum = fx.write_model("model.bin", "hello model\n");
  fx.write_model("model.bin", "hello model?\n");  // flip content afterwards

  std::string json = "{\"schema_version\":1,\"defaults\":{},\"entries\":[" +
                     fx.entry_json("kaz", "Cyrl", "tokenize", "neural",
                                   "model.bin", checksum) +
                     "]}";
  CatalogManifest manifest = CatalogManifest::parse(json);
  Downloader downloader(fx.cache);
  CHECK_THROWS_AS(downloader.download("kaz", {"tokenize"}, manifest),
                  ChecksumMismatch);
  const CatalogEntry& entry = manifest.entries()[0];
  CHECK_FALSE(fs::exists(fx.cache.entry_path(entry)));
  // Nothing unverified is left at any final path under the cache root.
  if (fs::exists(fx.cache.root))
    for (const auto& e : fs::recursive_directory_iterator(fx.cache.root))
      CHECK_FALSE(e.is_regular_file());
}

TEST_CASE("missing combination raises NotInCatalog") {
  Fixture fx;
  CatalogManifest manifest = tier_fixture(fx);
  Downloader downloader(fx.cache);
  CHECK_THROWS_AS(downloader.download("gag", {"ner"}, manifest), NotInCatalog);
}

TEST_CASE("download is selective across a populated catalog") {
  Fixture fx;
  CatalogManifest manifest = tier_fixture(fx);  // 7 entries, several langs
  Downloader downloader(fx.cache);
  auto paths = downloader.download("tur", {"morph"}, manifest);
  CHECK(paths.size() == 1);
  CHECK(downloader.transfer_count() == 1);  // nothing else was fetched
}

TEST_CASE("discover filters") {
  Fixture fx;
  CatalogManifest manifest = tier_fixture(fx);

  CatalogFilter all;
  CHECK(manifest.discover(all).size() == manifest.entries().size());

  CatalogFilter kaz;
  kaz.lang = "kaz";
  auto kaz_entries = manifest.discover(kaz);
  CHECK(kaz_entries.size() == 2);
  for (const auto& e : kaz_entries) CHECK(e.lang == "kaz");

  CatalogFilter production;
  production.quality = QualityTier::Production;
  production.processor = "morph";
  auto prod = manifest.discover(production);
  REQUIRE(prod.size() == 3);
  std::set<std::string> langs;
  for (const auto& e : prod) langs.insert(e.lang);
  CHECK(langs == std::set<std::string>{"tur", "kaz", "tat"});
}

TEST_CASE("manifest decoupling: new entries appear after reload") {
  Fixture fx;
  std::string checksum = fx.write_model("x.bin", "x\n");
  std::string base = "{\"schema_version\":1,\"defaults\":{},\"entries\":[" +
                     fx.entry_json("kaz", "Cyrl", "tokenize", "neural",
                                   "x.bin", checksum) +
                     "]}";
  fs::path path = fx.root / "catalog.json";
  {
    std::ofstream out(path);
    out << base;
  }
  CatalogManifest before = CatalogManifest::load(path);
  CatalogFilter tuk;
  tuk.lang = "tuk";
  CHECK(before.discover(tuk).empty());

  std::string extended =
      "{\"schema_version\":1,\"defaults\":{},\"entries\":[" +
      fx.entry_json("kaz", "Cyrl", "tokenize", "neural", "x.bin", checksum) +
      "," +
      fx.entry_json("tuk", "Latn", "tokenize", "neural", "x.bin", checksum) +
      "]}";
  {
    std::ofstream out(path);
    out << extended;
  }
  CatalogManifest after = CatalogManifest::load(path);
  CHECK(after.discover(tuk).size() == 1);
}

TEST_CASE("license isolation in the cache layout") {
  Fixture fx;
  std::string checksum = fx.write_model("m.bin", "m\n");
  std::string json = "{\"schema_version\":1,\"defaults\":{},\"entries\":[" +
                     fx.entry_json("kaz", "Cyrl", "tokenize", "neural",
                                   "m.bin", checksum, "Apache-2.0") + "," +
                     fx.entry_json("kaz", "Cyrl", "morph", "fst", "m.bin",
                                   checksum, "GPL-3.0") +
                     "]}";
  CatalogManifest manifest = CatalogManifest::parse(json);
  Downloader downloader(fx.cache);
  auto paths = downloader.download("kaz", {"tokenize", "morph"}, manifest);
  REQUIRE(paths.size() == 2);

  // Paths of entries with different licenses share no directory below the
  // cache root.
  auto rel0 = fs::relative(paths[0], fx.cache.root);
  auto rel1 = fs::relative(paths[1], fx.cache.root);
  CHECK(rel0.begin()->string() == "Apache-2.0");
  CHECK(rel1.begin()->string() == "GPL-3.0");
  CHECK(*rel0.begin() != *rel1.begin());
}

TEST_CASE("verify_cache reports ok, corrupt and orphaned files") {
  Fixture fx;
  std::string checksum = fx.write_model("m.bin", "sound model\n");
  std::string json = "{\"schema_version\":1,\"defaults\":{},\"entries\":[" +
                     fx.entry_json("kaz", "Cyrl", "tokenize", "neural",
                                   "m.bin", checksum) +
                     "]}";
  CatalogManifest manifest = CatalogManifest::parse(json);
  Downloader downloader(fx.cache);
  auto paths = downloader.download("kaz", {"tokenize"}, manifest);

  CacheReport fresh = downloader.verify_cache(manifest);
  CHECK(fresh.ok.size() == 1);
  CHECK(fresh.clean());

  // Corrupt the cached copy in place.
  {
    std::ofstream out(paths[0], std::ios::binary);
    out << "tampered";
  }
  // Plant an extra file nobody owns.
  fs::path orphan = fx.cache.root / "Apache-2.0" / "stray.bin";
  {
    std::ofstream out(orphan);
    out << "stray";
  }
  CacheReport report = downloader.verify_cache(manifest);
  CHECK(report.ok.empty());
  REQUIRE(report.corrupt.size() == 1);
  CHECK(report.corrupt[0] == paths[0]);
  REQUIRE(report.orphaned.size() == 1);
  CHECK(report.orphaned[0] == orphan);
  CHECK_FALSE(report.clean());
}

TEST_CASE("concurrent fetches of one entry transfer once") {
  Fixture fx;
  std::string checksum = fx.write_model("big.bin", std::string(1 << 18, 'q'));
  std::string json = "{\"schema_version\":1,\"defaults\":{},\"entries\":[" +
                     fx.entry_json("kaz", "Cyrl", "tokenize", "neural",
                                   "big.bin", checksum) +
                     "]}";
  CatalogManifest manifest = CatalogManifest::parse(json);
  Downloader downloader(fx.cache);

  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i)
    threads.emplace_back(
        [&] { downloader.download("kaz", {"tokenize"}, manifest); });
  for (auto& t : threads) t.join();
  CHECK(downloader.transfer_count() == 1);
}

TEST_CASE("environment variables override the default paths") {
  const char* saved_cache = std::getenv("TURKIC_CACHE_DIR");
  const char* saved_data = std::getenv("TURKIC_DATA_DIR");

  setenv("TURKIC_CACHE_DIR", "/tmp/turkic-env-cache", 1);
  CHECK(default_cache_dir() == fs::path("/tmp/turkic-env-cache"));
  setenv("TURKIC_DATA_DIR", "/tmp/turkic-env-data", 1);
  CHECK(data_dir() == fs::path("/tmp/turkic-env-data"));

  if (saved_cache)
    setenv("TURKIC_CACHE_DIR", saved_cache, 1);
  else
    unsetenv("TURKIC_CACHE_DIR");
  if (saved_data)
    setenv("TURKIC_DATA_DIR", saved_data, 1);
  else
    unsetenv("TURKIC_DATA_DIR");
  CHECK(fs::exists(data_dir() / "script_ranges.tsv"));
}

TEST_CASE("sha256 matches the reference vectors") {
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("The quick brown fox jumps over the lazy dog") ==
        "d7a8fbb307d7809469ca9abcb0082e4f8d5651e46d3cdb762d02d0bf37c9e592");
  // Multi-block input exercises the buffering path.
  std::string long_input(200000, 'a');
  Sha256 incremental;
  incremental.update(long_input.substr(0, 12345));
  incremental.update(long_input.substr(12345));
  CHECK(incremental.hex_digest() == sha256_hex(long_input));
}

}  // TEST_SUITE
