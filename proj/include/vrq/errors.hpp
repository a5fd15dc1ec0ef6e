#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vrq {

/// A vertex label that does not belong to the complex or space it was used with.
class VertexOutOfRange : public std::out_of_range {
 public:
  explicit VertexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

/// Raised when an enumeration or matrix would exceed the configured size cap.
/// `partial_count` is the number of items produced before aborting.
class SizeBudgetExceeded : public std::runtime_error {
 public:
  SizeBudgetExceeded(const std::string& what, std::uint64_t partial_count)
      : std::runtime_error(what), partial_count_(partial_count) {}

  std::uint64_t partial_count() const noexcept { return partial_count_; }

 private:
  std::uint64_t partial_count_;
};

class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace vrq
