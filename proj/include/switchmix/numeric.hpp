#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace switchmix {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// 50 decimal digits; used for the logarithmic factors of the mixing bounds.
using Real = boost::multiprecision::cpp_bin_float_50;

inline BigInt choose2(const BigInt& k) { return k < 2 ? BigInt(0) : k * (k - 1) / 2; }

/// Narrow an exact integer to int64, throwing if it does not fit.
inline std::int64_t to_int64(const BigInt& value, const char* what) {
  if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

}  // namespace switchmix
