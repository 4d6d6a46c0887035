#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>

namespace crs {

// All values that feed a decision anywhere in the solver are exact rationals.
// Floating point never appears in a comparison.
using Rat = mpq_class;

// Parses "a/b", an integer, or a plain decimal such as "0.25". Throws
// InvalidInput on malformed text or a zero denominator.
Rat rat_from_string(const std::string& text);

// Canonical "a/b" (or "a" when the denominator is 1).
std::string rat_to_string(const Rat& v);

// Truncated decimal rendering, for display next to the exact value.
std::string rat_to_decimal(const Rat& v, int digits = 9);

// base^exp for any integer exp, exact.
Rat pow_rat(const Rat& base, long exp);

// Least k with base^k >= p. Requires base > 1 and p > 0.
long ceil_log(const Rat& base, const Rat& p);

// Greatest e with base^e <= x. Requires base > 1 and x > 0.
long floor_log(const Rat& base, const Rat& x);

uint64_t fnv1a64(const void* data, size_t n,
                 uint64_t seed = 1469598103934665603ULL);
uint64_t fnv1a64(const std::string& s,
                 uint64_t seed = 1469598103934665603ULL);

}  // namespace crs
