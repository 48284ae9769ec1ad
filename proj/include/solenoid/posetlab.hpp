#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "solenoid/groups.hpp"
#include "solenoid/profile.hpp"
#include "solenoid/sequence.hpp"

namespace solenoid::poset {

/// An ultimately periodic subset of ω: below `threshold` membership is listed
/// bit by bit; from `threshold` on, n is a member iff word[n mod period].
/// Canonical: the period is minimal, then the threshold is minimal.
class UPSet {
 public:
  UPSet(std::vector<bool> below_threshold, std::vector<bool> word);

  [[nodiscard]] static UPSet finite(const std::vector<std::uint64_t>& members);
  [[nodiscard]] static UPSet cofinite(const std::vector<std::uint64_t>& non_members);
  /// {n : n mod period ∈ residues}.
  [[nodiscard]] static UPSet residues(std::size_t period, const std::vector<std::size_t>& residues);
  /// Members below `from` are `members`; from `from` on, the word decides.
  [[nodiscard]] static UPSet general(const std::vector<std::uint64_t>& members, std::size_t from,
                                     const std::vector<bool>& word);

  [[nodiscard]] bool contains(std::uint64_t n) const;
  [[nodiscard]] std::size_t threshold() const noexcept { return below_.size(); }
  [[nodiscard]] std::size_t period() const noexcept { return word_.size(); }
  [[nodiscard]] const std::vector<bool>& word() const noexcept { return word_; }
  [[nodiscard]] const std::vector<bool>& below_threshold() const noexcept { return below_; }

  [[nodiscard]] bool is_finite() const;
  [[nodiscard]] bool is_cofinite() const;

  /// Members in ascending order, at most `count` of them.
  [[nodiscard]] std::vector<std::uint64_t> enumerate(std::size_t count) const;

  friend bool operator==(const UPSet&, const UPSet&) = default;

 private:
  std::vector<bool> below_;
  std::vector<bool> word_;
};

[[nodiscard]] UPSet complement(const UPSet& a);
[[nodiscard]] UPSet set_union(const UPSet& a, const UPSet& b);
[[nodiscard]] UPSet set_difference(const UPSet& a, const UPSet& b);

/// A ⊆* B: A ∖ B is finite.
[[nodiscard]] bool subset_star(const UPSet& a, const UPSet& b);

/// `fin{1,3}`, `cofin{0,2}`, or `ups{except=...; from=N; period=p; word=bits}`.
[[nodiscard]] std::string to_string(const UPSet& a);

/// The pair (P, Q) an embedding is built from, with the ascending enumeration
/// d_0 < d_1 < ... of D(P,Q) = {γ : t^P(γ) < t^Q(γ)}.
///
/// Requires E(Σ_Q) ≤_B E(Σ_P), i.e. P ⪯ Q, and D(P,Q) infinite, which for
/// these profiles means default(P) = 0 and default(Q) = ω.
/// The enumeration is cached; the cache only grows and is guarded by a mutex.
class Family {
 public:
  Family(SupernaturalProfile p, SupernaturalProfile q);
  Family(const Family&) = delete;
  Family& operator=(const Family&) = delete;

  [[nodiscard]] static std::shared_ptr<const Family> create(SupernaturalProfile p, SupernaturalProfile q);
  /// P = {2:w}, Q = {default=w}.
  [[nodiscard]] static std::shared_ptr<const Family> standard();

  [[nodiscard]] const SupernaturalProfile& p() const noexcept { return p_; }
  [[nodiscard]] const SupernaturalProfile& q() const noexcept { return q_; }

  /// d_i.
  [[nodiscard]] Prime d(std::size_t i) const;
  [[nodiscard]] bool in_d(Prime gamma) const;

 private:
  SupernaturalProfile p_;
  SupernaturalProfile q_;
  mutable std::mutex mutex_;
  mutable std::vector<Prime> d_cache_;
  mutable std::size_t scan_ = 0;
};

/// d_0, ..., d_{k-1}.
[[nodiscard]] std::vector<Prime> D_enumeration(const Family& f, std::size_t k);

/// G_A = (Σ_{P_A})^power for the set A of one family.
struct MemberRef {
  MemberRef(std::shared_ptr<const Family> family, UPSet set, std::size_t power = 1);

  std::shared_ptr<const Family> family;
  UPSet set;
  std::size_t power;

  /// `(Sol_{P_A})^n with A = ...`. P_A has infinitely many multiplicity-1
  /// primes and never materializes as a SupernaturalProfile.
  [[nodiscard]] std::string describe(char name = 'A') const;
};

/// Streams P_A. With c_0 < c_1 < ... enumerating ω ∖ A, P_0*(i) = d_{3i} and
/// P_A*(j) = d_{1+3c_j}: P_A = P_A* ⊕ (P_0* ⊕ P), or P_0* ⊕ P when ω ∖ A is
/// finite. P is streamed by CanonicalSequence.
class MemberSequence {
 public:
  explicit MemberSequence(const MemberRef& member);

  Prime next();

 private:
  Prime next_inner();

  std::shared_ptr<const Family> family_;
  UPSet set_;
  bool cofinite_;
  CanonicalSequence base_;
  std::size_t position_ = 0;
  std::size_t inner_position_ = 0;
  std::size_t p0_index_ = 0;
  std::uint64_t complement_scan_ = 0;
};

/// First n terms of P_A. Throws DomainError on n < 0.
[[nodiscard]] std::vector<Prime> member_sequence(const MemberRef& m, std::int64_t n);

/// E(G_A) ≤_B E(G_B), decided as A ⊆* B. Throws DomainError when the members
/// come from different families or have different powers.
[[nodiscard]] bool member_reduces(const MemberRef& a, const MemberRef& b);

struct CrosscheckReport {
  bool member_verdict = false;  // member_reduces(a, b)

  /// Symbolic side. C_X is the index set starred into P_X (ω ∖ X, or ∅ when
  /// that is finite); P_B ⪯ P_A fails exactly on the primes d_{1+3c} with
  /// c ∈ C_B ∖ C_A, which P_B contains and P_A lacks.
  UPSet surplus_indices = UPSet::finite({});
  bool surplus_finite = false;
  std::vector<Prime> surplus_primes;  // listed when finite

  /// Finite side: windows P_B[d, d + window) against the first pool_length
  /// terms of P_A, for drop points d = 0, 1, ..., drop_limit.
  std::size_t window = 0;
  std::size_t drop_limit = 0;
  std::size_t pool_length = 0;
  std::optional<std::size_t> embedding_drop;  // first d whose window embeds
  bool oracle_verdict = false;

  bool consistent = false;
  std::vector<std::string> diagnostics;
};

/// Validates member_reduces(a, b) symbolically and against oracle_injection
/// on finite windows. Discrepancies are recorded in the report, not thrown.
[[nodiscard]] CrosscheckReport member_crosscheck(const MemberRef& a, const MemberRef& b, std::size_t window);

/// Strictness of E(Σ_Q) < E(Σ_{P_A}) < E(Σ_P), phrased as deficits.
struct SandwichReport {
  Mult deficit_pa_q;  // P_A ⪯ Q: finite
  bool q_surplus_over_pa_infinite = false;  // Q ⋠ P_A: D-primes d_{3i+2} unused by P_A
  Mult deficit_p_pa;  // P ⪯ P_A: zero, P_A contains P
  bool pa_surplus_over_p_infinite = false;  // P_A ⋠ P: every d_{3i} adds one occurrence
  /// Sampled D-primes of P_A, each checked to occur exactly t^P + 1 times.
  std::vector<Prime> sampled_primes;
  bool sample_ok = false;
};

[[nodiscard]] SandwichReport sandwich(const MemberRef& m, std::size_t sample);

struct ChainDemo {
  std::vector<std::string> labels;
  std::vector<MemberRef> members;
  std::vector<std::vector<bool>> matrix;  // matrix[i][j] = member_reduces(members[i], members[j])
  bool chain_strictly_decreasing = false;
  bool antichain_incomparable = false;
};

/// Members for A_i = multiples of 2^i (i < depth) followed by evens and odds.
/// Throws DomainError when depth < 2 or power < 1.
[[nodiscard]] ChainDemo chain_demo(const std::shared_ptr<const Family>& f, std::size_t depth, std::size_t power);

}  // namespace solenoid::poset
