#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace malcnn {

// Base of the error taxonomy. The CLI maps subtypes onto its exit-code
// contract: validation/config problems exit 1, runtime/numeric problems
// exit 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tensor extents do not satisfy an operation's precondition.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration value (bad hyperparameter, unbuildable input size,
// unknown architecture name, malformed config file).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed one-hot label or inconsistent label data.
class LabelError : public Error {
 public:
  using Error::Error;
};

// Dataset directory does not have the expected layout.
class LayoutError : public Error {
 public:
  using Error::Error;
};

// Corrupt or truncated serialized file; carries the byte offset at which
// parsing failed.
class FormatError : public Error {
 public:
  FormatError(const std::string& msg, std::uint64_t offset)
      : Error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::uint64_t offset() const noexcept { return offset_; }

 private:
  std::uint64_t offset_;
};

// Non-finite values where finite ones are required (training divergence,
// NaN loss).
class NumericError : public Error {
 public:
  using Error::Error;
};

// Metric undefined for the given input (e.g. ROC-AUC with one class).
class MetricError : public Error {
 public:
  using Error::Error;
};

// Empty or otherwise unusable argument to a pure function.
class ArgError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure (unwritable path, rename failure).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace malcnn
