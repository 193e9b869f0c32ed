#pragma once

#include <stdexcept>
#include <string>

namespace tqft {

// A computation produced a value that contradicts a claimed identity.
class RefutationError : public std::runtime_error {
 public:
  explicit RefutationError(const std::string& what) : std::runtime_error("refutation: " + what) {}
};

// A configured cap (crossings, cable width, iterations) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error("resource: " + what) {}
};

// Inputs outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Unreadable or malformed input files.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error("io: " + what) {}
};

}  // namespace tqft
