#include "isoforest/primes.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "isoforest/error.hpp"

namespace isoforest {

SieveState initial_state(bool wheel6) {
  SieveState st;
  st.wheel6 = wheel6;
  return st;
}

PrimeBounds prime_bounds(std::uint64_t n) {
  if (n < 6)
    raise(errc::domain_error, "prime bounds require n >= 6, got " + std::to_string(n));
  const double ln_n = std::log(static_cast<double>(n));
  const double lnln_n = std::log(ln_n);
  PrimeBounds b;
  b.lower = static_cast<std::uint64_t>(
      std::floor(static_cast<double>(n) * (ln_n + lnln_n - 1.0)));
  b.upper = static_cast<std::uint64_t>(
      std::ceil(static_cast<double>(n) * (ln_n + lnln_n)));
  return b;
}

namespace {

// Sieves [lo, hi] against the base primes already in the state and appends
// the primes found. Base primes always suffice: segments extend coverage
// contiguously, so n_sieve^2 >= hi holds from the seed state onwards.
void sieve_segment(SieveState& st, std::uint64_t lo, std::uint64_t hi) {
  assert(lo > st.n_sieve);
  assert(st.n_sieve * st.n_sieve >= hi);
  std::vector<char> composite(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const std::uint64_t p : st.primes) {
    if (p * p > hi) break;
    if (st.wheel6 && (p == 2 || p == 3)) continue;
    std::uint64_t start = ((lo + p - 1) / p) * p;
    start = std::max(start, p * p);
    for (std::uint64_t m = start; m <= hi; m += p)
      composite[static_cast<std::size_t>(m - lo)] = 1;
  }
  if (st.wheel6) {
    // Only residues 1 and 5 mod 6 are prime candidates past 3; any
    // composite among them has a prime factor >= 5, so skipping the
    // multiples of 2 and 3 above loses nothing.
    for (std::uint64_t m = lo; m <= hi; ++m) {
      const std::uint64_t r = m % 6;
      if ((r == 1 || r == 5) && !composite[static_cast<std::size_t>(m - lo)])
        st.primes.push_back(m);
    }
  } else {
    for (std::uint64_t m = lo; m <= hi; ++m)
      if (!composite[static_cast<std::size_t>(m - lo)]) st.primes.push_back(m);
  }
}

}  // namespace

void extend_sieve(SieveState& state) {
  const std::uint64_t n = state.primes.size() + 1;  // index of the prime sought
  const PrimeBounds bounds = prime_bounds(n);
  const std::uint64_t lo = std::max(state.n_sieve + 1, bounds.lower);
  const std::uint64_t hi = std::max(state.n_sieve, bounds.upper);
  if (lo <= hi) {
    sieve_segment(state, lo, hi);
    state.n_sieve = hi;
  }
}

std::uint64_t next_prime(SieveState& state, std::uint64_t p) {
  const auto it = std::lower_bound(state.primes.begin(), state.primes.end(), p);
  if (it == state.primes.end() || *it != p)
    raise(errc::not_a_prime_in_state,
          std::to_string(p) + " is not in the sieved prime list");
  const std::size_t index = static_cast<std::size_t>(it - state.primes.begin());
  while (index + 1 >= state.primes.size()) {
    // p is the last sieved prime; resume the sieve. Eq-(1) bounds guarantee
    // the next segment contains p_{n}, so this loop runs once.
    extend_sieve(state);
  }
  return state.primes[index + 1];
}

std::vector<std::uint64_t> naive_sieve(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<char> composite(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t i = 2; i * i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    for (std::uint64_t m = i * i; m <= n; m += i)
      composite[static_cast<std::size_t>(m)] = 1;
  }
  for (std::uint64_t i = 2; i <= n; ++i)
    if (!composite[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

}  // namespace isoforest
