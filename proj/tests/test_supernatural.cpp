#include <map>
#include <thread>

#include "doctest.h"
#include "solenoid/error.hpp"
#include "solenoid/literals.hpp"
#include "solenoid/primes.hpp"
#include "solenoid/profile.hpp"
#include "solenoid/sequence.hpp"
#include "solenoid/verify/generators.hpp"
#include "solenoid/verify/oracles.hpp"

using namespace solenoid;

namespace {

SupernaturalProfile prof(const char* text) { return parse_profile(text); }

// Deficit by counting long prefixes of both canonical sequences: primes that
// keep growing in q but stall in p give w, stalled primes give their excess.
Mult counted_deficit(const SupernaturalProfile& q, const SupernaturalProfile& p) {
  const auto qs = canonical_sequence(q, 4000);
  const auto qs_long = canonical_sequence(q, 8000);
  const auto ps = canonical_sequence(p, 8000);
  std::map<Prime, std::size_t> cq, cq_long, cp;
  for (Prime x : qs) ++cq[x];
  for (Prime x : qs_long) ++cq_long[x];
  for (Prime x : ps) ++cp[x];
  Mult total;
  for (const auto& [x, n] : cq) {
    const bool q_grows = cq_long[x] > n;
    const bool p_grows = !p.multiplicity(x).is_omega() ? false : true;
    if (q_grows && !p_grows) return Mult::omega();
    if (!q_grows && n > cp[x]) total = total + Mult(n - cp[x]);
  }
  return total;
}

}  // namespace

TEST_CASE("mult order and arithmetic") {
  CHECK(Mult(5) < Mult::omega());
  CHECK(Mult(3) < Mult(4));
  CHECK(Mult(2) + Mult(3) == Mult(5));
  CHECK(Mult::omega() + Mult(1) == Mult::omega());
  CHECK(Mult::surplus(Mult::omega(), Mult::omega()) == Mult(0));
  CHECK(Mult::surplus(Mult(7), Mult(5)) == Mult(2));
  CHECK(Mult::surplus(Mult(5), Mult(7)) == Mult(0));
  CHECK(Mult::surplus(Mult::omega(), Mult(9)) == Mult::omega());
  const Mult big(Natural("123456789012345678901234567890"));
  CHECK((big + Mult(10)).str() == "123456789012345678901234567900");
  CHECK(big < Mult::omega());
  CHECK_THROWS_AS((void)Mult(-1), DomainError);
  CHECK_THROWS((void)Mult::omega().finite());
}

TEST_CASE("primes") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(1'000'000'007ULL));
  CHECK_FALSE(is_prime(1'000'000'007ULL * 3));
  CHECK(factorize(360) == std::vector<Prime>{2, 2, 2, 3, 3, 5});
  CHECK(factorize(1'000'000'007ULL * 998'244'353ULL) == std::vector<Prime>{998'244'353ULL, 1'000'000'007ULL});
  CHECK_THROWS_AS((void)factorize(1), DomainError);
  CHECK(prime_table().nth(0) == 2);
  CHECK(prime_table().nth(9) == 29);
  CHECK(prime_table().rank(29) == 9);
}

TEST_CASE("profile invariants") {
  CHECK_THROWS_AS((void)prof("{2:3}"), ParseError);
  CHECK_THROWS_AS(SupernaturalProfile(PrimeMultiplicities({{2, Mult(3)}}, Mult(0))), DomainError);
  CHECK_THROWS_AS(PrimeMultiplicities({{4, Mult::omega()}}, Mult(0)), DomainError);
  CHECK_THROWS_AS(PrimeMultiplicities({}, Mult(5)), DomainError);
  CHECK(prof("{2:0, 3:w}") == prof("{3:w}"));
  CHECK(prof("{2:w; default=w}") == prof("{default=w}"));
  CHECK(prof("{default=w}").exceptions().empty());
  CHECK(to_string(prof("{3:w, 2:6}")) == "{2:6, 3:w}");
  CHECK(to_string(prof("{2:0; default=w}")) == "{2:0; default=w}");
}

TEST_CASE("multiplicity") {
  CHECK(multiplicity(prof("{2:6, 3:w}"), 3) == Mult::omega());
  CHECK(multiplicity(prof("{default=w}"), 97) == Mult::omega());
  CHECK(multiplicity(prof("{2:6, 3:w}"), 5) == Mult(0));
  const SeqSpec s({2, 2, 5}, {3});
  CHECK(multiplicity(s, 2) == Mult(2));
  CHECK(multiplicity(s, 3) == Mult::omega());
  CHECK_THROWS_AS((void)multiplicity(s, 4), DomainError);
  CHECK_THROWS_AS((void)multiplicity(prof("{2:w}"), 9), DomainError);
}

TEST_CASE("profile_from_sequence") {
  CHECK(profile_from_sequence(SeqSpec({2, 2, 2, 3, 2, 2, 2}, {3})) == prof("{2:6, 3:w}"));
  CHECK(profile_from_sequence(SeqSpec({}, {2})) == prof("{2:w}"));
  CHECK(profile_from_sequence(SeqSpec({5, 5, 7}, {2, 3})) == prof("{2:w, 3:w, 5:2, 7:1}"));
}

TEST_CASE("factor_sequence") {
  const SeqSpec f = factor_sequence(IntSeqSpec{{4, 6, 8}, {9}});
  CHECK(f.prefix() == std::vector<Prime>{2, 2, 2, 3, 2, 2, 2});
  CHECK(f.tail() == std::vector<Prime>{3});
  CHECK(factor_sequence(IntSeqSpec{{}, {2}}) == SeqSpec({}, {2}));
  CHECK(profile_from_sequence(factor_sequence(IntSeqSpec{{}, {2, 3, 4, 5, 6}})) == prof("{2:w, 3:w, 5:w}"));
  CHECK_THROWS_AS((void)factor_sequence(IntSeqSpec{{1}, {2}}), DomainError);
  CHECK_THROWS_AS((void)factor_sequence(IntSeqSpec{{2}, {}}), DomainError);
}

TEST_CASE("seqspec canonical form") {
  CHECK(SeqSpec({2, 3, 3}, {3, 3}) == SeqSpec({2}, {3}));
  CHECK(SeqSpec({3, 2}, {3, 2}) == SeqSpec({}, {3, 2}));
  CHECK(SeqSpec({5, 2}, {3, 2}) == SeqSpec({5}, {2, 3}));
  const SeqSpec s({7, 5}, {2, 3});
  CHECK(s.expand(6) == std::vector<Prime>{7, 5, 2, 3, 2, 3});
  CHECK(to_string(SeqSpec({2, 2}, {3})) == "[2,2 | 3]");
}

TEST_CASE("deficit and preceq") {
  CHECK(deficit(prof("{3:w}"), prof("{2:w, 3:w}")) == Mult(0));
  CHECK(deficit(prof("{2:7, 3:w}"), prof("{2:5, 3:w}")) == Mult(2));
  CHECK(counted_deficit(prof("{2:7, 3:w}"), prof("{2:5, 3:w}")) == Mult(2));
  CHECK(deficit(prof("{2:w}"), prof("{3:w}")) == Mult::omega());
  CHECK(deficit(prof("{default=w}"), prof("{2:w, 3:4}")) == Mult::omega());
  CHECK(deficit(prof("{2:3; default=w}"), prof("{2:1; default=w}")) == Mult(2));

  const auto p = prof("{2:6, 3:w}");
  CHECK(preceq(p, p));
  CHECK(preceq(prof("{2:7, 3:w}"), prof("{2:5, 3:w}")));
  CHECK_FALSE(preceq(prof("{default=w}"), prof("{2:w}")));

  const DeficitTable t = deficit_table(prof("{2:7, 3:w, 5:1}").multiplicities(), prof("{2:5, 3:w}").multiplicities());
  CHECK(t.total == Mult(3));
  CHECK(t.surplus == std::vector<std::pair<Prime, Mult>>{{2, Mult(2)}, {5, Mult(1)}});
  CHECK_FALSE(t.default_surplus);
}

TEST_CASE("deficit against counted prefixes") {
  verify::Gen gen(101);
  for (int i = 0; i < 200; ++i) {
    const auto q = gen.profile();
    const auto p = gen.profile();
    CAPTURE(to_string(q));
    CAPTURE(to_string(p));
    CHECK(deficit(q, p) == counted_deficit(q, p));
  }
}

TEST_CASE("profile_add") {
  CHECK(profile_add(prof("{2:w}"), prof("{3:w}")) == prof("{2:w, 3:w}"));
  CHECK(profile_add(prof("{2:3, 5:w}"), prof("{2:4, 5:w}")) == prof("{2:7, 5:w}"));
  CHECK(profile_add(prof("{default=w}"), prof("{2:w}")) == prof("{default=w}"));
  CHECK(profile_add(prof("{2:1; default=w}"), prof("{3:w}")) == prof("{2:1; default=w}"));
}

TEST_CASE("interleave") {
  CHECK(interleave(SeqSpec({}, {2}), SeqSpec({}, {3})) == SeqSpec({}, {2, 3}));
  const SeqSpec got = interleave(SeqSpec({5}, {2}), SeqSpec({}, {3}));
  CHECK(got == SeqSpec({5, 3}, {2, 3}));
  const SeqSpec l({}, {2, 7});
  const SeqSpec m({}, {3});
  CHECK(profile_from_sequence(interleave(l, m)) == prof("{2:w, 3:w, 7:w}"));
  CHECK(profile_from_sequence(interleave(l, m)) == profile_add(profile_from_sequence(l), profile_from_sequence(m)));
}

TEST_CASE("interleave matches literal interleaving") {
  verify::Gen gen(102);
  for (int i = 0; i < 300; ++i) {
    const SeqSpec l = gen.seq_spec();
    const SeqSpec m = gen.seq_spec();
    const SeqSpec lm = interleave(l, m);
    const auto le = l.expand(60);
    const auto me = m.expand(60);
    std::vector<Prime> literal;
    for (std::size_t k = 0; k < 60; ++k) {
      literal.push_back(le[k]);
      literal.push_back(me[k]);
    }
    CHECK(lm.expand(120) == literal);
    CHECK(profile_from_sequence(lm) == profile_add(profile_from_sequence(l), profile_from_sequence(m)));
  }
}

TEST_CASE("canonical_sequence") {
  CHECK(canonical_sequence(prof("{2:w}"), 3) == std::vector<Prime>{2, 2, 2});
  CHECK(canonical_sequence(prof("{2:6, 3:w}"), 8) == std::vector<Prime>{2, 2, 2, 2, 2, 2, 3, 3});
  CHECK(canonical_sequence(prof("{2:w, 3:w}"), 5) == std::vector<Prime>{2, 3, 2, 3, 2});
  CHECK(canonical_sequence(prof("{default=w}"), 6) == std::vector<Prime>{2, 2, 3, 2, 3, 5});
  CHECK(canonical_sequence(prof("{2:w}"), 0).empty());
  CHECK_THROWS_AS((void)canonical_sequence(prof("{2:w}"), -1), DomainError);
}

TEST_CASE("canonical_sequence has the profile") {
  verify::Gen gen(103);
  for (int i = 0; i < 100; ++i) {
    const auto p = gen.profile();
    const auto seq = canonical_sequence(p, 3000);
    std::map<Prime, std::size_t> count;
    for (Prime x : seq) ++count[x];
    for (const auto& [x, n] : count) {
      const Mult t = p.multiplicity(x);
      CHECK(Mult(n) <= t);
    }
    for (Prime x : {2, 3, 5, 7, 11}) {
      if (p.multiplicity(x).is_omega()) CHECK(count[x] >= 20);
    }
    for (const auto& [x, t] : p.exceptions()) {
      if (!t.is_omega()) CHECK(Mult(count[x]) == t);
    }
  }
}

TEST_CASE("oracle_injection") {
  const std::vector<Prime> a{2, 3}, pa{3, 2, 2};
  CHECK(oracle_injection(a, pa));
  const std::vector<Prime> b{2, 2, 2}, pb{2, 2, 3, 3};
  CHECK_FALSE(oracle_injection(b, pb));
  CHECK(oracle_injection(std::vector<Prime>{}, std::vector<Prime>{}));
}

TEST_CASE("profiles_bireducible") {
  CHECK(profiles_bireducible(prof("{2:5, 3:w}"), prof("{2:9, 3:w}")));
  CHECK_FALSE(profiles_bireducible(prof("{2:w}"), prof("{3:w}")));
  CHECK(profiles_bireducible(prof("{default=w}"), prof("{default=w}")));
  CHECK_FALSE(profiles_bireducible(prof("{default=w}"), prof("{2:w}")));
}

TEST_CASE("preceq preorder laws") {
  verify::Gen gen(104);
  int chains = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto p = gen.profile();
    const auto q = gen.profile();
    const auto r = gen.profile();
    CHECK(preceq(p, p));
    if (deficit(q, p).is_zero()) CHECK(preceq(q, p));
    CHECK(preceq(q, p) == !deficit(q, p).is_omega());
    CHECK(preceq(q, p) == verify::naive_preceq(q, p));
    if (preceq(r, q) && preceq(q, p)) {
      ++chains;
      CHECK(preceq(r, p));
    }
  }
  CHECK(chains > 10);
}

TEST_CASE("preceq against the injection oracle") {
  verify::Gen gen(105);
  for (int i = 0; i < 150; ++i) {
    const auto q = gen.profile();
    const auto p = gen.profile();
    const auto check = verify::check_preceq_oracle(q, p, 120);
    CAPTURE(check.detail);
    CHECK(check.agrees);
  }
  const auto worked = verify::check_preceq_oracle(prof("{2:7, 3:w}"), prof("{2:5, 3:w}"), 200);
  CHECK(worked.preceq);
  CHECK(worked.agrees);
  CHECK(worked.drop == 7);
}

TEST_CASE("canonical sequences are stable across threads") {
  const auto p = prof("{2:1; default=w}");
  const auto expected = canonical_sequence(p, 20000);
  std::vector<std::vector<Prime>> results(4);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < results.size(); ++t) {
    threads.emplace_back([&, t] { results[t] = canonical_sequence(p, 20000); });
  }
  for (auto& th : threads) th.join();
  for (const auto& r : results) CHECK(r == expected);
}
