#include "solenoid/primes.hpp"

#include <algorithm>
#include <numeric>

#include "solenoid/error.hpp"

namespace solenoid {
namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Brent's variant of Pollard rho. n must be odd, composite, and not a prime
// power of a tiny prime (those are stripped by trial division first).
std::uint64_t pollard_rho(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t x = 2;
    std::uint64_t y = 2;
    std::uint64_t d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<Prime>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<Prime> factorize(std::uint64_t n) {
  if (n < 2) throw DomainError("cannot factor " + std::to_string(n) + ": integers must be greater than 1");
  std::vector<Prime> out;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

Prime PrimeTable::nth(std::size_t k) {
  std::lock_guard lock(mutex_);
  if (k >= primes_.size()) grow_locked(k + 1, 0);
  return primes_[k];
}

std::size_t PrimeTable::rank(Prime p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  std::lock_guard lock(mutex_);
  if (primes_.empty() || primes_.back() < p) grow_locked(0, p);
  return static_cast<std::size_t>(std::lower_bound(primes_.begin(), primes_.end(), p) - primes_.begin());
}

void PrimeTable::grow_locked(std::size_t min_count, Prime min_value) {
  std::uint64_t limit = std::max<std::uint64_t>(limit_, 1024);
  while (true) {
    if (limit > limit_) {
      std::vector<bool> composite(limit + 1, false);
      std::vector<Prime> primes;
      for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
      }
      primes_ = std::move(primes);
      limit_ = limit;
    }
    if (primes_.size() >= min_count && limit_ >= min_value) return;
    limit *= 2;
  }
}

PrimeTable& prime_table() {
  static PrimeTable table;
  return table;
}

}  // namespace solenoid
