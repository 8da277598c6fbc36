#pragma once

#include <cstdint>
#include <span>

#include <gmpxx.h>

namespace isoforest {

/// Arbitrary-precision natural number. GMP supplies the multiplication;
/// this library only decides how to batch it.
using BigNat = mpz_class;

/// Product of a list by balanced divide and conquer: split at ceil(len/2),
/// multiply directly at length <= 2. The empty product is 1, which is what
/// gives leaves their neutral fingerprint in the prime decider.
BigNat product(std::span<const BigNat> xs);

/// Same recursion over machine-word factors; avoids materialising a BigNat
/// per element on the hot path.
BigNat product(std::span<const std::uint64_t> xs);

}  // namespace isoforest
