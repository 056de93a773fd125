#pragma once

// Small integer helpers shared by the engine implementations.

#include <cstdint>
#include <numeric>

#include "cgw/error.hpp"

namespace cgw::detail {

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

inline std::int64_t abs64(std::int64_t a) { return a < 0 ? -a : a; }

struct ExtendedGcd {
  std::int64_t g;
  std::int64_t x;
  std::int64_t y;  // a*x + b*y = g >= 0
};

inline ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    return {-old_r, -old_s, -old_t};
  }
  return {old_r, old_s, old_t};
}

// Inverse of a modulo m (m >= 1, gcd(a, m) = 1).
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) {
    return 0;
  }
  ExtendedGcd e = extended_gcd(floor_mod(a, m), m);
  return floor_mod(e.x, m);
}

inline std::int32_t narrow_coordinate(std::int64_t v) {
  if (v > INT32_MAX || v < INT32_MIN) {
    throw Error("coordinate overflow: value " + std::to_string(v) +
                " does not fit the 32-bit payload");
  }
  return static_cast<std::int32_t>(v);
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error("integer overflow in group arithmetic");
  }
  return out;
}

}  // namespace cgw::detail
