#pragma once
// Error taxonomy shared across the library. The CLI maps kinds to exit
// codes: usage -> 1, data -> 2, numeric -> 3.

#include <stdexcept>
#include <string>

namespace bcgan {

enum class ErrorKind { usage, data, numeric };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Bad argument values (out-of-range scores, nonpositive counts, ...).
struct RangeError : Error {
  explicit RangeError(const std::string& m) : Error(ErrorKind::usage, m) {}
};

// Unsupported configuration (resolutions, ladders, missing options).
struct ConfigError : Error {
  explicit ConfigError(const std::string& m) : Error(ErrorKind::usage, m) {}
};

// Malformed CLI-level input (counts, deltas, refusals to overwrite).
struct InputError : Error {
  explicit InputError(const std::string& m) : Error(ErrorKind::usage, m) {}
};

// Tensor/image dimension mismatches between artifacts.
struct ShapeError : Error {
  explicit ShapeError(const std::string& m) : Error(ErrorKind::data, m) {}
};

// File ingestion failures (missing images, unreadable tables).
struct IngestError : Error {
  explicit IngestError(const std::string& m) : Error(ErrorKind::data, m) {}
};

// Structurally inconsistent tables (ragged rater sets, duplicate cells).
struct SchemaError : Error {
  explicit SchemaError(const std::string& m) : Error(ErrorKind::data, m) {}
};

// Training diverged or cannot start (empty corpus, NaN losses).
struct TrainingError : Error {
  explicit TrainingError(const std::string& m) : Error(ErrorKind::numeric, m) {}
};

// Latent recovery failed on every restart.
struct InversionError : Error {
  explicit InversionError(const std::string& m) : Error(ErrorKind::numeric, m) {}
};

}  // namespace bcgan
