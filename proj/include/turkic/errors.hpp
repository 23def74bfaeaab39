// Copyright 2026 The turkic-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace turkic {

/// Stable error categories. The numeric values double as CLI exit codes
/// (documented in docs/cli.md) and must not be reordered.
enum class ErrorCode {
  Generic = 1,
  NoAlphabeticContent = 2,
  UnsupportedPair = 3,
  UnmappableCharacter = 4,
  MissingBackend = 5,
  ChecksumMismatch = 6,
  ParseError = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct NoAlphabeticContent : Error {
  explicit NoAlphabeticContent(std::string msg = "no alphabetic content")
      : Error(ErrorCode::NoAlphabeticContent, std::move(msg)) {}
};

struct UnsupportedPair : Error {
  explicit UnsupportedPair(std::string msg)
      : Error(ErrorCode::UnsupportedPair, std::move(msg)) {}
};

struct UnmappableCharacter : Error {
  UnmappableCharacter(std::string msg, std::size_t offset)
      : Error(ErrorCode::UnmappableCharacter, std::move(msg)), offset(offset) {}
  std::size_t offset;  // character offset into the input
};

struct MissingBackend : Error {
  explicit MissingBackend(std::string msg)
      : Error(ErrorCode::MissingBackend, std::move(msg)) {}
};

struct ChecksumMismatch : Error {
  explicit ChecksumMismatch(std::string msg)
      : Error(ErrorCode::ChecksumMismatch, std::move(msg)) {}
};

/// Malformed input (CoNLL-U, JSON, table files, invalid UTF-8). `where`
/// carries a line number, JSON path or byte offset depending on the source.
struct ParseError : Error {
  ParseError(std::string msg, std::string where = {})
      : Error(ErrorCode::ParseError, where.empty() ? msg : where + ": " + msg),
        where(std::move(where)) {}
  std::string where;
};

struct UnknownLanguage : Error {
  explicit UnknownLanguage(std::string msg)
      : Error(ErrorCode::Generic, std::move(msg)) {}
};

struct UnknownProcessor : Error {
  explicit UnknownProcessor(std::string msg)
      : Error(ErrorCode::Generic, std::move(msg)) {}
};

struct NoTranslitRoute : Error {
  explicit NoTranslitRoute(std::string msg)
      : Error(ErrorCode::UnsupportedPair, std::move(msg)) {}
};

struct NotInCatalog : Error {
  explicit NotInCatalog(std::string msg)
      : Error(ErrorCode::Generic, std::move(msg)) {}
};

struct EmptyInput : Error {
  explicit EmptyInput(std::string msg = "empty input")
      : Error(ErrorCode::Generic, std::move(msg)) {}
};

struct ProcessorFailure : Error {
  ProcessorFailure(const std::string& processor, const std::string& msg)
      : Error(ErrorCode::Generic, "processor '" + processor + "' failed: " + msg),
        processor(processor) {}
  std::string processor;
};

}  // namespace turkic
