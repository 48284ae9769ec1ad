#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "solenoid/mult.hpp"
#include "solenoid/primes.hpp"

namespace solenoid {

/// A function from primes to ω ∪ {ω} with finitely many exceptions over a
/// default of 0 or ω. Stored canonically: no exception equals the default.
///
/// This is the raw shape shared by solenoid profiles and by the rank-one
/// types of the dual side (where the all-zero function, the type of ℤ, is
/// legitimate even though it is not the profile of any prime sequence).
class PrimeMultiplicities {
 public:
  using Exceptions = std::map<Prime, Mult>;

  /// The all-zero function.
  PrimeMultiplicities() = default;

  /// Throws DomainError when a key is not prime or the default is neither 0
  /// nor ω. Entries equal to the default are dropped.
  PrimeMultiplicities(Exceptions exceptions, Mult default_value);

  [[nodiscard]] Mult at(Prime p) const;
  [[nodiscard]] const Exceptions& exceptions() const noexcept { return exceptions_; }
  [[nodiscard]] const Mult& default_value() const noexcept { return default_; }
  [[nodiscard]] bool default_is_omega() const noexcept { return default_.is_omega(); }

  /// Whether Σ_γ t(γ) is infinite.
  [[nodiscard]] bool has_infinite_total() const;

  friend bool operator==(const PrimeMultiplicities&, const PrimeMultiplicities&) = default;

 private:
  Exceptions exceptions_;
  Mult default_;
};

/// t^P for a sequence P of primes: how often each prime occurs, with ω for
/// primes that recur forever. Because P is infinite the total is infinite,
/// which the constructor enforces.
class SupernaturalProfile {
 public:
  using Exceptions = PrimeMultiplicities::Exceptions;

  SupernaturalProfile(Exceptions exceptions, Mult default_value);
  explicit SupernaturalProfile(PrimeMultiplicities multiplicities);

  /// Every prime with multiplicity ω: the profile of (2, 3, 4, 5, 6, ...).
  [[nodiscard]] static SupernaturalProfile all_omega();

  [[nodiscard]] Mult multiplicity(Prime p) const { return m_.at(p); }
  [[nodiscard]] const Exceptions& exceptions() const noexcept { return m_.exceptions(); }
  [[nodiscard]] const Mult& default_value() const noexcept { return m_.default_value(); }
  [[nodiscard]] bool default_is_omega() const noexcept { return m_.default_is_omega(); }
  [[nodiscard]] const PrimeMultiplicities& multiplicities() const noexcept { return m_; }

  friend bool operator==(const SupernaturalProfile&, const SupernaturalProfile&) = default;

 private:
  PrimeMultiplicities m_;
};

/// Per-prime breakdown of a deficit computation.
struct DeficitTable {
  /// Primes where q exceeds p, ascending, with the surplus (ω when q has ω
  /// and p is finite).
  std::vector<std::pair<Prime, Mult>> surplus;
  /// Set when q's default is ω and p's default is 0: every prime outside the
  /// exception keys contributes ω, so the table above is not exhaustive.
  bool default_surplus = false;
  Mult total;

  friend bool operator==(const DeficitTable&, const DeficitTable&) = default;
};

/// Σ_γ max(t^Q(γ) − t^P(γ), 0), with ω − ω = 0 and ω absorbing.
///
/// Q ⪯ P (an injection f with Q(n) = P(f(n)) for all large n) holds exactly
/// when this sum is finite. If it is finite, drop the finitely many surplus
/// occurrences from Q; every remaining prime γ occurs in Q at most as often as
/// in P (infinitely often only where P has it infinitely often), so the k-th
/// remaining occurrence of γ in Q maps to the k-th occurrence of γ in P and
/// the resulting map is injective. If it is infinite, either some γ occurs
/// infinitely often in Q but finitely often in P, or infinitely many primes
/// each occur more often in Q than in P; either way infinitely many Q terms
/// have no partner, and no cofinite part of Q embeds.
[[nodiscard]] DeficitTable deficit_table(const PrimeMultiplicities& q, const PrimeMultiplicities& p);
[[nodiscard]] Mult deficit(const PrimeMultiplicities& q, const PrimeMultiplicities& p);
[[nodiscard]] Mult deficit(const SupernaturalProfile& q, const SupernaturalProfile& p);

/// Q ⪯ P.
[[nodiscard]] bool preceq(const SupernaturalProfile& q, const SupernaturalProfile& p);

/// Profile of L ⊕ M: pointwise sum.
[[nodiscard]] SupernaturalProfile profile_add(const SupernaturalProfile& l, const SupernaturalProfile& m);

/// Q ⪯ P and P ⪯ Q.
[[nodiscard]] bool profiles_bireducible(const SupernaturalProfile& p, const SupernaturalProfile& q);

/// Literal form accepted by the parser: `{2:6, 3:w}`, `{default=w}`,
/// `{2:0; default=w}`.
[[nodiscard]] std::string to_string(const PrimeMultiplicities& m);
[[nodiscard]] std::string to_string(const SupernaturalProfile& p);

}  // namespace solenoid
