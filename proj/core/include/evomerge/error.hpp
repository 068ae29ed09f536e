// Copyright (c) 2026 evomerge authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace evomerge {

/// Base class for all evomerge errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adapter/base site layouts disagree (ids, dims, rank).
struct LayoutError : Error {
  using Error::Error;
};

/// Empty or malformed input data (histories, metric inputs, selections).
struct DataError : Error {
  using Error::Error;
};

/// Token outside the vocabulary, or vocab/params dimension mismatch.
struct VocabError : Error {
  using Error::Error;
};

/// Unknown site or identifier.
struct LookupError : Error {
  using Error::Error;
};

/// API misuse (e.g. recommend() before any tell()).
struct UsageError : Error {
  using Error::Error;
};

/// Invalid or degenerate configuration.
struct ConfigError : Error {
  using Error::Error;
};

/// Malformed file content.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace evomerge
