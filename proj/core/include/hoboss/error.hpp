#pragma once

#include <stdexcept>
#include <string>

namespace hoboss {

// Position or index outside the valid domain of a query.
class RangeError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

// select past the last occurrence, missing edge, missing record.
class NotFound : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Invalid user configuration (K out of bounds, m > K, ...).
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Malformed FASTA/FASTQ input.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Bad magic, version, tag or truncated index container.
class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Broken internal invariant; indicates a bug or corrupted input structure.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace hoboss
