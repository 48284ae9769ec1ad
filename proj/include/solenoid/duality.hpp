#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "solenoid/groups.hpp"
#include "solenoid/profile.hpp"

namespace solenoid {

/// A rank-one torsion-free group: the rationals m/d whose denominator d is
/// bounded prime-by-prime by a profile. The dual of Σ_P is the type of P
/// (denominators P(0)P(1)...P(n)); the dual of 𝕋 is ℤ, the all-zero type.
class RationalType {
 public:
  [[nodiscard]] static RationalType integers() { return RationalType(std::nullopt); }
  [[nodiscard]] static RationalType of(SupernaturalProfile p) { return RationalType(std::move(p)); }

  [[nodiscard]] bool is_integers() const noexcept { return !profile_; }
  /// Throws std::logic_error for ℤ.
  [[nodiscard]] const SupernaturalProfile& profile() const;
  /// The bounding multiplicities; all zero for ℤ.
  [[nodiscard]] PrimeMultiplicities multiplicities() const;

  friend bool operator==(const RationalType&, const RationalType&) = default;

 private:
  explicit RationalType(std::optional<SupernaturalProfile> p) : profile_(std::move(p)) {}

  std::optional<SupernaturalProfile> profile_;
};

/// The dual of ℝ, which is ℝ again.
struct RealLine {
  friend bool operator==(const RealLine&, const RealLine&) = default;
};

using DualComponent = std::variant<RealLine, RationalType>;

/// Componentwise dual of a product; one component per primal factor.
struct DualExpr {
  std::vector<DualComponent> factors;

  friend bool operator==(const DualExpr&, const DualExpr&) = default;
};

[[nodiscard]] DualExpr dual(const GroupExpr& g);

/// The primal atom whose dual is `c`: ℝ, 𝕋 for ℤ, Σ_P for the type of P.
[[nodiscard]] Atom predual(const DualComponent& c);

/// Torsion-free rank. Throws DomainError when a REAL_LINE component is
/// present: the rank equals covering dimension only on the compact side.
[[nodiscard]] std::size_t rank(const DualExpr& d);

/// Whether some nonzero homomorphism A → B exists between rank-one types.
/// Every such map is multiplication by a rational r, and r·A ⊆ B iff for
/// each prime the denominator exponent allowed by A, minus v_γ(r), stays
/// within B's. A single r can absorb a finite total surplus of A over B and
/// nothing more, so the criterion is a finite deficit(A, B).
[[nodiscard]] bool hom_nonzero_exists(const RationalType& a, const RationalType& b);

/// E(g) ≤_B E(h) through the dual: a homomorphism S*: ĥ → ĝ whose cokernel
/// is torsion. Components are rank one, and a nonzero map between rank-one
/// groups has torsion cokernel, so it suffices to find an injective
/// assignment of a distinct ĥ component to every ĝ component with a nonzero
/// hom from the former to the latter: ĝ / im(S*) is then a sum of torsion
/// groups. Solved as bipartite matching.
///
/// Both sides must be compact; an ℝ factor on either side throws DomainError.
[[nodiscard]] bool dual_reduces(const GroupExpr& g, const GroupExpr& h);

/// `Z`, `Q`, `Q{2:6, 3:w}`, `R`, joined by ` x `.
[[nodiscard]] std::string to_string(const DualComponent& c);
[[nodiscard]] std::string to_string(const DualExpr& d);

}  // namespace solenoid
