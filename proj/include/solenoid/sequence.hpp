#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "solenoid/profile.hpp"

namespace solenoid {

/// An ultimately periodic sequence of primes: `prefix` followed by `tail`
/// repeated forever. Stored with the shortest tail period and, for that
/// period, the shortest prefix, so equal sequences compare equal.
class SeqSpec {
 public:
  SeqSpec(std::vector<Prime> prefix, std::vector<Prime> tail);

  [[nodiscard]] const std::vector<Prime>& prefix() const noexcept { return prefix_; }
  [[nodiscard]] const std::vector<Prime>& tail() const noexcept { return tail_; }

  [[nodiscard]] Prime at(std::size_t index) const;
  [[nodiscard]] std::vector<Prime> expand(std::size_t count) const;

  friend bool operator==(const SeqSpec&, const SeqSpec&) = default;

 private:
  std::vector<Prime> prefix_;
  std::vector<Prime> tail_;
};

/// Same shape as SeqSpec over arbitrary integers > 1: the input of S_P before
/// factorization. Not canonicalized.
struct IntSeqSpec {
  std::vector<std::uint64_t> prefix;
  std::vector<std::uint64_t> tail;
};

[[nodiscard]] Mult multiplicity(const SupernaturalProfile& p, Prime gamma);
/// ω if gamma occurs in the tail, else its count in the prefix.
[[nodiscard]] Mult multiplicity(const SeqSpec& s, Prime gamma);

[[nodiscard]] SupernaturalProfile profile_from_sequence(const SeqSpec& s);

/// Replace every entry by its ascending prime factorization, so that
/// S_s ≅ Σ_result. Throws DomainError on entries ≤ 1 or an empty tail.
[[nodiscard]] SeqSpec factor_sequence(const IntSeqSpec& s);

/// L ⊕ M: L(k) at position 2k, M(k) at position 2k+1.
[[nodiscard]] SeqSpec interleave(const SeqSpec& l, const SeqSpec& m);

/// Streams a fixed representative sequence of a profile: finite-multiplicity
/// primes first (ascending, with multiplicity), then the ω-primes forever.
/// With default 0 the ω-primes are cycled round-robin; with default ω stage
/// s = 1, 2, ... emits the s smallest ω-primes, so every one of them recurs.
class CanonicalSequence {
 public:
  explicit CanonicalSequence(SupernaturalProfile profile);

  Prime next();

 private:
  Prime nth_omega_prime(std::size_t k);

  SupernaturalProfile profile_;
  std::vector<std::pair<Prime, Natural>> finite_part_;
  std::size_t finite_index_ = 0;
  Natural emitted_of_current_ = 0;
  std::vector<Prime> omega_primes_;  // explicit list (default 0) or lazily found (default ω)
  std::size_t omega_scan_ = 0;       // next prime-table index to inspect (default ω)
  std::size_t stage_ = 1;
  std::size_t stage_pos_ = 0;
  std::size_t cycle_pos_ = 0;
};

/// First n terms of CanonicalSequence(p). Throws DomainError on n < 0.
[[nodiscard]] std::vector<Prime> canonical_sequence(const SupernaturalProfile& p, std::int64_t n);

/// Multiset of primes.
class PrimeCounts {
 public:
  PrimeCounts() = default;
  explicit PrimeCounts(std::span<const Prime> primes);

  void add(Prime p, std::size_t times = 1) { counts_[p] += times; }
  [[nodiscard]] std::size_t count(Prime p) const;
  [[nodiscard]] const std::unordered_map<Prime, std::size_t>& counts() const noexcept { return counts_; }

  /// Sub-multiset test.
  [[nodiscard]] bool embeds_into(const PrimeCounts& pool) const;

 private:
  std::unordered_map<Prime, std::size_t> counts_;
};

/// Whether the multiset q_window embeds into the multiset p_pool, i.e. an
/// injection of window positions into pool positions preserving the prime.
[[nodiscard]] bool oracle_injection(std::span<const Prime> q_window, std::span<const Prime> p_pool);
[[nodiscard]] bool oracle_injection(std::span<const Prime> q_window, const PrimeCounts& p_pool);

/// `[2,2,2,3 | 3]` style rendering; the parser accepts it back.
[[nodiscard]] std::string to_string(const SeqSpec& s);

}  // namespace solenoid
