#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tdcount {

// Counters routinely outgrow machine words (a projected count can reach
// 2^|P|), so every count in the solver is a BigInt from the start.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned long exponent) {
  BigInt r = 1;
  return r << exponent;
}

}  // namespace tdcount
