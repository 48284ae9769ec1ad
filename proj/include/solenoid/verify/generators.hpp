#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "solenoid/groups.hpp"
#include "solenoid/posetlab.hpp"
#include "solenoid/profile.hpp"
#include "solenoid/sequence.hpp"

namespace solenoid::verify {

/// Seeded random values for property tests. Same seed, same stream.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  [[nodiscard]] std::uint64_t below(std::uint64_t n);  // uniform in [0, n)
  [[nodiscard]] bool coin(double p_true = 0.5);

  /// Profiles over {2,3,5,7,11}: multiplicities 0..3 or w, default 0 or w.
  [[nodiscard]] SupernaturalProfile profile();
  /// A profile from a fixed pool of eight, so random products share payloads.
  [[nodiscard]] SupernaturalProfile pooled_profile();
  [[nodiscard]] Atom atom(bool allow_real = true);
  [[nodiscard]] GroupExpr group(std::size_t max_factors, bool allow_real = true);
  [[nodiscard]] SeqSpec seq_spec();
  [[nodiscard]] poset::UPSet upset(std::size_t max_period);

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace solenoid::verify
