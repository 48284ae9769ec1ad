#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <vector>

namespace solenoid {

using Prime = std::uint64_t;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

/// Prime factors of n (n >= 2) in ascending order, repeated by multiplicity.
/// Throws DomainError for n < 2.
[[nodiscard]] std::vector<Prime> factorize(std::uint64_t n);

/// Ascending list of primes, grown on demand by re-sieving a doubled range.
/// Extension is guarded by a mutex; indices handed out stay valid because the
/// list only ever grows.
class PrimeTable {
 public:
  PrimeTable() = default;
  PrimeTable(const PrimeTable&) = delete;
  PrimeTable& operator=(const PrimeTable&) = delete;

  /// The k-th prime (0-based: nth(0) == 2).
  [[nodiscard]] Prime nth(std::size_t k);

  /// Rank of a prime in the ascending enumeration (rank(2) == 0).
  [[nodiscard]] std::size_t rank(Prime p);

 private:
  void grow_locked(std::size_t min_count, Prime min_value);

  std::mutex mutex_;
  std::vector<Prime> primes_;
  std::uint64_t limit_ = 0;
};

/// Process-wide table shared by every caller.
[[nodiscard]] PrimeTable& prime_table();

}  // namespace solenoid
