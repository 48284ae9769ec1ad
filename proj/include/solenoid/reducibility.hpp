#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "solenoid/groups.hpp"
#include "solenoid/profile.hpp"

namespace solenoid {

/// Which row of the atom rule table licenses an edge.
enum class Rule {
  RAny,        // E(ℝ) ≤ E(anything in Ω)
  TorusTorus,  // E(𝕋) ≤ E(𝕋)
  SolTorus,    // E(Σ_P) < E(𝕋)
  SolSol,      // E(Σ_P) ≤ E(Σ_Q) iff Q ⪯ P
};

[[nodiscard]] std::string to_string(Rule r);
/// Inverse of to_string(Rule); nullopt on unknown names.
[[nodiscard]] std::optional<Rule> rule_from_string(const std::string& name);

/// One edge i ↦ θ*(i) of a reduction certificate. Indices are 0-based factor
/// positions. For SolSol, `deficit` is deficit_table(target, source), whose
/// total must be finite.
struct EdgeWitness {
  std::size_t left = 0;
  std::size_t right = 0;
  Rule reason = Rule::RAny;
  DeficitTable deficit;

  friend bool operator==(const EdgeWitness&, const EdgeWitness&) = default;
};

/// Refutation: left factors K whose neighbourhood N(K) is smaller than K.
struct HallViolator {
  std::vector<std::size_t> k;
  std::vector<std::size_t> nk;

  friend bool operator==(const HallViolator&, const HallViolator&) = default;
};

struct Verdict {
  bool reducible = false;
  std::vector<EdgeWitness> certificate;  // θ*, one edge per left factor, by left index
  std::optional<HallViolator> violator;  // set iff !reducible

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

enum class Comparison { Equivalent, LeftStrict, RightStrict, Incomparable };

[[nodiscard]] std::string to_string(Comparison c);

/// E(a) ≤_B E(b) for atoms a, b of Ω:
///
///            ℝ    𝕋    Σ_Q
///   ℝ        T    T    T
///   𝕋        F    T    F
///   Σ_P      F    T    Q ⪯ P
///
/// The solenoid entry tests the *target* profile against the *source*.
[[nodiscard]] bool atom_reduces(const Atom& a, const Atom& b);

/// Decide E(g) ≤_B E(h) by bipartite matching on the atom rule table: the
/// reduction exists iff some injection θ* sends every factor of g to a factor
/// of h it reduces to. Augmenting paths, deterministic order; on failure the
/// violator K is every left factor reachable from an unmatched one by an
/// alternating path.
[[nodiscard]] Verdict reduces(const GroupExpr& g, const GroupExpr& h);

/// E(ℝ^c0 × 𝕋^e0) ≤_B E(ℝ^c1 × 𝕋^e1) iff e0 ≤ e1 and c0 + e0 ≤ c1 + e1.
[[nodiscard]] bool rt_closed_form(std::size_t c0, std::size_t e0, std::size_t c1, std::size_t e1) noexcept;

[[nodiscard]] Comparison compare(const GroupExpr& g, const GroupExpr& h);

/// Re-checks a verdict for reduces(g, h) from scratch. Malformed data (bad
/// indices, wrong rule for the atom kinds, stale deficit tables, inconsistent
/// fields) makes it return false rather than throw.
[[nodiscard]] bool verify_certificate(const GroupExpr& g, const GroupExpr& h, const Verdict& v);

}  // namespace solenoid
