#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solenoid/profile.hpp"
#include "solenoid/sequence.hpp"

namespace solenoid {

enum class AtomKind { Real, Torus, Solenoid };

/// One of ℝ, 𝕋, or the solenoid Σ_P carried by its profile t^P.
/// All three are connected abelian and 1-dimensional.
class Atom {
 public:
  [[nodiscard]] static Atom real() { return Atom(AtomKind::Real, std::nullopt); }
  [[nodiscard]] static Atom torus() { return Atom(AtomKind::Torus, std::nullopt); }
  [[nodiscard]] static Atom solenoid(SupernaturalProfile profile) { return Atom(AtomKind::Solenoid, std::move(profile)); }

  [[nodiscard]] AtomKind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_real() const noexcept { return kind_ == AtomKind::Real; }
  [[nodiscard]] bool is_torus() const noexcept { return kind_ == AtomKind::Torus; }
  [[nodiscard]] bool is_solenoid() const noexcept { return kind_ == AtomKind::Solenoid; }

  /// Throws std::logic_error unless this is a solenoid.
  [[nodiscard]] const SupernaturalProfile& profile() const;

  friend bool operator==(const Atom&, const Atom&) = default;

 private:
  Atom(AtomKind kind, std::optional<SupernaturalProfile> profile) : kind_(kind), profile_(std::move(profile)) {}

  AtomKind kind_;
  std::optional<SupernaturalProfile> profile_;
};

/// A flat, ordered product of atoms. The empty product is the trivial group.
struct GroupExpr {
  std::vector<Atom> factors;

  [[nodiscard]] std::size_t size() const noexcept { return factors.size(); }
  [[nodiscard]] bool trivial() const noexcept { return factors.empty(); }
  [[nodiscard]] const Atom& operator[](std::size_t i) const { return factors[i]; }

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

/// G × H, factors of g first.
[[nodiscard]] GroupExpr product(const GroupExpr& g, const GroupExpr& h);

/// Unnormalized group term as produced by the parser: nested products,
/// powers, and solenoids over composite-integer sequences.
struct RawGroup {
  enum class Kind { Real, Torus, Trivial, Solenoid, IntSequence, Product, Power };

  Kind kind = Kind::Trivial;
  std::optional<SupernaturalProfile> profile;  // Solenoid
  IntSeqSpec sequence;                         // IntSequence
  std::vector<RawGroup> children;              // Product terms; Power base in children[0]
  std::int64_t exponent = 1;                   // Power

  [[nodiscard]] static RawGroup real();
  [[nodiscard]] static RawGroup torus();
  [[nodiscard]] static RawGroup trivial();
  [[nodiscard]] static RawGroup solenoid(SupernaturalProfile profile);
  [[nodiscard]] static RawGroup int_sequence(IntSeqSpec seq);
  [[nodiscard]] static RawGroup product(std::vector<RawGroup> terms);
  [[nodiscard]] static RawGroup power(RawGroup base, std::int64_t exponent);
};

/// Flattens products, expands powers (G^0 contributes nothing), and factors
/// S[...] sequences into prime solenoids. Throws DomainError on a negative
/// exponent or a sequence entry ≤ 1.
[[nodiscard]] GroupExpr normalize_group(const RawGroup& raw);

/// The expression as a raw term (a plain product of atoms).
[[nodiscard]] RawGroup to_raw(const GroupExpr& g);

/// Covering dimension: each factor contributes 1.
[[nodiscard]] std::size_t dimension(const GroupExpr& g) noexcept;

/// No ℝ factor.
[[nodiscard]] bool is_compact(const GroupExpr& g) noexcept;

/// Grammar-conforming text, runs of equal atoms folded into powers:
/// `R^2 x T x Sol{2:6, 3:w}`; the trivial group is `1`.
[[nodiscard]] std::string to_string(const Atom& a);
[[nodiscard]] std::string to_string(const GroupExpr& g);

}  // namespace solenoid
