#pragma once

#include <stdexcept>

namespace dirinv {

/// A configured work ceiling (enumerated tuples, partitions) was exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact 64-bit count would have wrapped.
class CountOverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace dirinv
