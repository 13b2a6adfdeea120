#pragma once

#include <stdexcept>
#include <string>

namespace acttok {

// Shape mismatches, domain violations, broken preconditions.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad keys, inconsistent dimensions, vocabulary gaps.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File and serialization failures, including checksum mismatches.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite training loss; message names the last-good checkpoint.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace acttok
