#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "solenoid/groups.hpp"
#include "solenoid/posetlab.hpp"
#include "solenoid/profile.hpp"

namespace solenoid::verify {

/// Q ⪯ P from the per-prime comparison alone: false iff some prime has
/// t^Q = w and t^P finite. Does not go through deficit().
[[nodiscard]] bool naive_preceq(const SupernaturalProfile& q, const SupernaturalProfile& p);

/// The atom table written out again, with naive_preceq for solenoid pairs.
[[nodiscard]] bool naive_atom_reduces(const Atom& a, const Atom& b);

/// Tries every injection of g's factors into h's factors.
[[nodiscard]] bool brute_force_reduces(const GroupExpr& g, const GroupExpr& h);

struct PreceqOracleCheck {
  bool preceq = false;  // the symbolic verdict being checked
  bool agrees = false;
  std::size_t drop = 0;  // N for a true verdict
  std::size_t pool = 0;  // prefix length of p's canonical sequence used
  std::string detail;
};

/// Checks preceq(q, p) against oracle_injection on canonical sequences.
///
/// True verdict: every window q[N, N + W), W = 1..max_window, must embed into
/// one prefix of p, where N is the index after the last occurrence of a prime
/// with t^Q > t^P. False verdict: for a witness prime γ with t^Q(γ) = w and
/// t^P(γ) finite, windows holding t^P(γ) + 1 copies of γ, taken after several
/// drop points, must fail against a long prefix of p.
[[nodiscard]] PreceqOracleCheck check_preceq_oracle(const SupernaturalProfile& q, const SupernaturalProfile& p,
                                                    std::size_t max_window);

/// First n terms of P_A, computed from a plain sieve and the literal
/// interleaving (L ⊕ M)(2k) = L(k), (L ⊕ M)(2k+1) = M(k). Requires P with
/// default 0 (as every family has).
[[nodiscard]] std::vector<Prime> recipe_member_prefix(const SupernaturalProfile& p, const SupernaturalProfile& q,
                                                      const poset::UPSet& a, std::size_t n);

}  // namespace solenoid::verify
