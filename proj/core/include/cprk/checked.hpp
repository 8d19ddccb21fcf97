#pragma once

#include <cstdint>
#include <stdexcept>

namespace cprk {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in multiplication");
  return r;
}

inline std::int64_t checked_narrow(__int128 v) {
  const auto r = static_cast<std::int64_t>(v);
  if (static_cast<__int128>(r) != v) throw std::overflow_error("value exceeds 64-bit range");
  return r;
}

}  // namespace cprk
