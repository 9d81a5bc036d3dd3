#pragma once

#include <stdexcept>

namespace hardymin {

/// Raised when no computational route covers the given symbol.
class UnsupportedSymbol : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hardymin
