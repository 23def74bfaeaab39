// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "turkic/data_paths.hpp"

#include <cstdlib>

namespace turkic {

namespace fs = std::filesystem;

fs::path data_dir() {
  if (const char* env = std::getenv("TURKIC_DATA_DIR")) return fs::path(env);
#ifdef TURKIC_DEFAULT_DATA_DIR
  return fs::path(TURKIC_DEFAULT_DATA_DIR);
#else
  return fs::path("data");
#endif
}

fs::path default_cache_dir() {
  if (const char* env = std::getenv("TURKIC_CACHE_DIR")) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
    return fs::path(xdg) / "turkic";
  if (const char* home = std::getenv("HOME"))
    return fs::path(home) / ".cache" / "turkic";
  return fs::path("turkic-cache");
}

}  // namespace turkic
