#pragma once

#include <cstdint>
#include <vector>

namespace isoforest {

/// Growing prime table backed by a segmented sieve of Eratosthenes.
///
/// Invariant: primes holds every prime <= n_sieve in ascending order and
/// nothing else, and holds at least the six seed primes. The state is a
/// plain value; each isomorphism run owns its own copy, there is no global
/// sieve.
struct SieveState {
  std::uint64_t n_sieve = 16;
  std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};

  /// Skip multiples of 2 and 3 while sieving. Toggleable so tests can run
  /// both paths against the naive oracle.
  bool wheel6 = true;
};

SieveState initial_state(bool wheel6 = true);

struct PrimeBounds {
  std::uint64_t lower = 0;  // floor(n (ln n + ln ln n - 1))
  std::uint64_t upper = 0;  // ceil(n (ln n + ln ln n))
};

/// Strict enclosure of the n-th prime, valid for n >= 6:
/// lower < p_n < upper. Throws domain_error for n < 6.
PrimeBounds prime_bounds(std::uint64_t n);

/// Resumes the sieve over the next segment. With n = primes.size() + 1,
/// the segment runs from max(n_sieve + 1, prime_bounds(n).lower) to
/// prime_bounds(n).upper, so consecutive segments never overlap and at
/// least one prime (p_n) is always appended.
void extend_sieve(SieveState& state);

/// Successor of p in the state's prime list, extending the sieve first
/// when p is the last entry. Throws not_a_prime_in_state if p is not in
/// the list.
std::uint64_t next_prime(SieveState& state, std::uint64_t p);

/// Plain one-shot sieve of Eratosthenes; the test oracle for the
/// segmented version. Returns all primes <= n.
std::vector<std::uint64_t> naive_sieve(std::uint64_t n);

}  // namespace isoforest
