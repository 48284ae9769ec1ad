#include "solenoid/verify/generators.hpp"

#include <array>

#include "solenoid/literals.hpp"

namespace solenoid::verify {
namespace {

constexpr std::array<Prime, 5> kPool = {2, 3, 5, 7, 11};

const std::vector<SupernaturalProfile>& profile_pool() {
  static const std::vector<SupernaturalProfile> pool = [] {
    std::vector<SupernaturalProfile> out;
    for (const char* text : {"{2:w}", "{3:w}", "{2:w, 3:w}", "{2:5, 3:w}", "{2:w, 3:2}", "{default=w}",
                             "{2:0; default=w}", "{2:w, 5:w, 7:1}"}) {
      out.push_back(parse_profile(text));
    }
    return out;
  }();
  return pool;
}

}  // namespace

std::uint64_t Gen::below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }

bool Gen::coin(double p_true) { return std::bernoulli_distribution(p_true)(rng_); }

SupernaturalProfile Gen::profile() {
  const bool default_omega = coin(1.0 / 3);
  PrimeMultiplicities::Exceptions ex;
  bool has_omega = default_omega;
  for (Prime p : kPool) {
    if (coin(0.4)) continue;
    const auto v = below(5);
    if (v == 4) {
      ex[p] = Mult::omega();
      has_omega = true;
    } else {
      ex[p] = Mult(v);
    }
  }
  if (!has_omega) ex[kPool[below(kPool.size())]] = Mult::omega();
  return SupernaturalProfile(PrimeMultiplicities(std::move(ex), default_omega ? Mult::omega() : Mult(0)));
}

SupernaturalProfile Gen::pooled_profile() { return profile_pool()[below(profile_pool().size())]; }

Atom Gen::atom(bool allow_real) {
  const auto r = below(5);
  if (allow_real && r == 0) return Atom::real();
  if (r <= 1) return Atom::torus();
  return Atom::solenoid(coin(0.75) ? pooled_profile() : profile());
}

GroupExpr Gen::group(std::size_t max_factors, bool allow_real) {
  GroupExpr g;
  const auto n = below(max_factors + 1);
  for (std::uint64_t i = 0; i < n; ++i) g.factors.push_back(atom(allow_real));
  return g;
}

SeqSpec Gen::seq_spec() {
  constexpr std::array<Prime, 4> primes = {2, 3, 5, 7};
  std::vector<Prime> prefix(below(5));
  std::vector<Prime> tail(1 + below(3));
  for (auto& x : prefix) x = primes[below(primes.size())];
  for (auto& x : tail) x = primes[below(primes.size())];
  return SeqSpec(prefix, tail);
}

poset::UPSet Gen::upset(std::size_t max_period) {
  std::vector<bool> below_bits(below(7));
  std::vector<bool> word(1 + below(max_period));
  for (std::size_t i = 0; i < below_bits.size(); ++i) below_bits[i] = coin();
  for (std::size_t i = 0; i < word.size(); ++i) word[i] = coin();
  return poset::UPSet(below_bits, word);
}

}  // namespace solenoid::verify
