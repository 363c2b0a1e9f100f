#pragma once

#include <stdexcept>
#include <string>

namespace heis {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Signed 64-bit arithmetic left the representable range. Never silently wraps.
struct OverflowError : Error {
  OverflowError() : Error("integer overflow in exact arithmetic") {}
  explicit OverflowError(const std::string& what) : Error(what) {}
};

// Malformed or invalid generating-set configuration.
struct ConfigError : Error {
  using Error::Error;
};

// Query for an element outside the enumerated ball. Absence from a table
// built to radius R always means |g| > R.
struct OutOfRangeError : Error {
  using Error::Error;
};

// Estimated table size exceeds the configured memory cap.
struct ResourceCapError : Error {
  using Error::Error;
};

// A search cannot certify its answer with the table it was given.
struct InsufficientRadiusError : Error {
  using Error::Error;
};

}  // namespace heis
