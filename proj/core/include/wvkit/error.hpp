#pragma once

#include <stdexcept>
#include <string>

namespace wvkit {

// Bad data or a violated precondition on data (empty vocabulary, label out of
// range, malformed record). The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable/unwritable files and malformed file syntax. Exit code 2.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wvkit
