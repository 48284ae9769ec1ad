#include <array>
#include <optional>
#include <set>

#include "doctest.h"
#include "solenoid/duality.hpp"
#include "solenoid/error.hpp"
#include "solenoid/literals.hpp"
#include "solenoid/reducibility.hpp"
#include "solenoid/verify/generators.hpp"

using namespace solenoid;

namespace {

SupernaturalProfile prof(const char* text) { return parse_profile(text); }
GroupExpr grp(const char* text) { return parse_group(text); }

constexpr std::array<Prime, 4> kPrimes = {2, 3, 5, 7};
constexpr int kOmega = -1;
using Type = std::array<int, 4>;  // multiplicity at 2,3,5,7; kOmega for w

std::vector<Type> all_types() {
  std::vector<Type> out;
  const std::vector<int> wide = {0, 1, 2, kOmega};
  const std::vector<int> narrow = {0, 1, kOmega};
  for (int a : wide)
    for (int b : wide)
      for (int c : narrow)
        for (int d : narrow) out.push_back({a, b, c, d});
  return out;
}

PrimeMultiplicities to_multiplicities(const Type& t) {
  PrimeMultiplicities::Exceptions ex;
  for (std::size_t i = 0; i < 4; ++i) ex[kPrimes[i]] = t[i] == kOmega ? Mult::omega() : Mult(t[i]);
  return PrimeMultiplicities(ex, Mult(0));
}

std::optional<RationalType> to_rational_type(const Type& t) {
  const PrimeMultiplicities m = to_multiplicities(t);
  if (m.exceptions().empty()) return RationalType::integers();
  if (!m.has_infinite_total()) return std::nullopt;  // isomorphic to Z, but not a profile
  return RationalType::of(SupernaturalProfile(m));
}

int valuation(std::uint64_t x, Prime p) {
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// Valuation vectors of every multiplier m/n with m <= 10^4, n <= 10.
std::vector<std::array<int, 4>> multiplier_valuations() {
  std::set<std::array<int, 4>> seen;
  for (std::uint64_t m = 1; m <= 10'000; ++m)
    for (std::uint64_t n = 1; n <= 10; ++n) {
      std::array<int, 4> v{};
      for (std::size_t i = 0; i < 4; ++i) v[i] = valuation(m, kPrimes[i]) - valuation(n, kPrimes[i]);
      seen.insert(v);
    }
  return {seen.begin(), seen.end()};
}

// q * A_T lands in B when every generator 1/D_T(A) does: v(q) - min(t_A, T) >= -t_B.
bool multiplier_works(const std::array<int, 4>& v, const Type& a, const Type& b) {
  for (int level = 1; level <= 16; ++level) {
    for (std::size_t i = 0; i < 4; ++i) {
      const int ta = a[i] == kOmega ? level : std::min(a[i], level);
      if (b[i] == kOmega) continue;
      if (v[i] - ta < -b[i]) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("dual examples") {
  CHECK(dual(grp("T")) == DualExpr{{RationalType::integers()}});
  CHECK(dual(grp("Sol{2:6, 3:w}")) == DualExpr{{RationalType::of(prof("{2:6, 3:w}"))}});
  CHECK(to_string(dual(grp("Sol{default=w}"))) == "Q");
  CHECK(to_string(dual(grp("R x T x Sol{2:w}"))) == "R x Z x Q{2:w}");
  CHECK(to_string(dual(GroupExpr{})) == "0");
  CHECK(std::holds_alternative<RealLine>(dual(grp("R")).factors[0]));
}

TEST_CASE("double dual recovers atoms") {
  verify::Gen gen(401);
  for (int i = 0; i < 200; ++i) {
    const GroupExpr g = gen.group(5);
    const DualExpr d = dual(g);
    REQUIRE(d.factors.size() == g.size());
    for (std::size_t k = 0; k < g.size(); ++k) CHECK(predual(d.factors[k]) == g[k]);
  }
}

TEST_CASE("rank") {
  CHECK(rank(dual(grp("T^3"))) == 3);
  CHECK(rank(dual(grp("Sol{2:w} x T"))) == 2);
  CHECK(rank(dual(GroupExpr{})) == 0);
  CHECK_THROWS_AS((void)rank(dual(grp("R x T"))), DomainError);
  verify::Gen gen(402);
  for (int i = 0; i < 200; ++i) {
    const GroupExpr g = gen.group(6, false);
    CHECK(rank(dual(g)) == dimension(g));
  }
}

TEST_CASE("hom_nonzero_exists examples") {
  CHECK(hom_nonzero_exists(RationalType::integers(), RationalType::of(prof("{2:w}"))));
  CHECK_FALSE(hom_nonzero_exists(RationalType::of(prof("{2:w}")), RationalType::integers()));
  CHECK(hom_nonzero_exists(RationalType::of(prof("{2:7, 3:w}")), RationalType::of(prof("{2:5, 3:w}"))));
  CHECK(hom_nonzero_exists(RationalType::integers(), RationalType::integers()));
}

TEST_CASE("rank-1 hom rule matches a multiplier search") {
  const auto types = all_types();
  const auto valuations = multiplier_valuations();
  std::size_t found = 0;
  std::size_t checked_typed = 0;
  for (const Type& a : types)
    for (const Type& b : types) {
      bool exists = false;
      for (const auto& v : valuations) {
        if (multiplier_works(v, a, b)) {
          exists = true;
          break;
        }
      }
      found += exists;
      const bool rule = !deficit(to_multiplicities(a), to_multiplicities(b)).is_omega();
      CHECK(exists == rule);
      const auto ra = to_rational_type(a);
      const auto rb = to_rational_type(b);
      if (ra && rb) {
        ++checked_typed;
        CHECK(hom_nonzero_exists(*ra, *rb) == exists);
      }
    }
  CHECK(found > 1000);
  CHECK(checked_typed > 5000);
}

TEST_CASE("hom_nonzero_exists is transitive") {
  verify::Gen gen(403);
  auto type = [&] { return gen.coin(0.2) ? RationalType::integers() : RationalType::of(gen.profile()); };
  for (int i = 0; i < 1000; ++i) {
    const auto a = type();
    const auto b = type();
    const auto c = type();
    if (hom_nonzero_exists(a, b) && hom_nonzero_exists(b, c)) CHECK(hom_nonzero_exists(a, c));
  }
}

TEST_CASE("dual_reduces examples") {
  CHECK_FALSE(dual_reduces(grp("T"), grp("Sol{2:w}")));
  CHECK(dual_reduces(grp("Sol{2:w}"), grp("T")));
  CHECK(dual_reduces(grp("Sol{default=w}"), grp("Sol{default=w}")));
  CHECK(dual_reduces(GroupExpr{}, grp("T")));
  CHECK_THROWS_AS((void)dual_reduces(grp("R"), grp("T")), DomainError);
  CHECK_THROWS_AS((void)dual_reduces(grp("T"), grp("R x T")), DomainError);
}

TEST_CASE("primal and dual paths agree") {
  verify::Gen gen(404);
  for (int i = 0; i < 800; ++i) {
    const GroupExpr g = gen.group(5, false);
    const GroupExpr h = gen.group(5, false);
    CHECK(dual_reduces(g, h) == reduces(g, h).reducible);
  }
  const std::vector<const char*> corners = {"T", "Sol{2:w}", "Sol{2:5, 3:w}", "Sol{2:9, 3:w}", "Sol{default=w}",
                                            "Sol{2:0; default=w}", "T x Sol{3:w}", "Sol{2:w}^2"};
  for (const char* a : corners)
    for (const char* b : corners) CHECK(dual_reduces(grp(a), grp(b)) == reduces(grp(a), grp(b)).reducible);
}
