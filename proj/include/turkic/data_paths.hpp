// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

namespace turkic {

/// Root of the bundled data tables (script ranges, language list,
/// transliteration tables, MWT rules, abbreviations).
/// Resolution order: $TURKIC_DATA_DIR, compiled-in default, "./data".
std::filesystem::path data_dir();

/// Model cache root. Resolution order: $TURKIC_CACHE_DIR,
/// $XDG_CACHE_HOME/turkic, $HOME/.cache/turkic, "./turkic-cache".
std::filesystem::path default_cache_dir();

}  // namespace turkic
