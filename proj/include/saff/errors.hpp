#pragma once

#include <stdexcept>
#include <string>

namespace saff {

/// A configured size cap (model dimension, tensor degree, search width) would
/// be exceeded. `cap` names the limit so callers can report it.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(std::string cap, const std::string& what)
      : std::runtime_error(what), cap_(std::move(cap)) {}
  const std::string& cap() const { return cap_; }

 private:
  std::string cap_;
};

/// Input data violates a structural precondition (failed bracket relation,
/// missing containment, etc.).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace saff
