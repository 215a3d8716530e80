#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kschur {

/// Base error for every failure raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a 64-bit count or coefficient would wrap.
struct OverflowError : Error {
  OverflowError() : Error("integer overflow") {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

}  // namespace kschur
