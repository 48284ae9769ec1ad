#include "solenoid/verify/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

#include "solenoid/duality.hpp"
#include "solenoid/literals.hpp"
#include "solenoid/posetlab.hpp"
#include "solenoid/reducibility.hpp"
#include "solenoid/sequence.hpp"
#include "solenoid/verify/generators.hpp"
#include "solenoid/verify/oracles.hpp"

namespace solenoid::verify {
namespace {

struct Check {
  bool passed = true;
  std::string detail;
};

GroupExpr power_of(const Atom& a, std::size_t n) { return GroupExpr{std::vector<Atom>(n, a)}; }

GroupExpr rt(std::size_t c, std::size_t e) {
  GroupExpr g = power_of(Atom::real(), c);
  for (std::size_t i = 0; i < e; ++i) g.factors.push_back(Atom::torus());
  return g;
}

// Same default and ω-primes as q, finite entries redrawn: preceq holds both
// ways with a small finite deficit.
SupernaturalProfile finite_perturbation(Gen& gen, const SupernaturalProfile& q) {
  PrimeMultiplicities::Exceptions ex;
  for (const auto& [k, v] : q.exceptions()) ex[k] = v.is_omega() ? v : Mult(gen.below(4));
  for (Prime k : {2, 3, 5, 7}) {
    if (!q.exceptions().contains(k) && gen.coin(0.2) && q.default_is_omega()) ex[k] = Mult(gen.below(4));
  }
  return SupernaturalProfile(PrimeMultiplicities(std::move(ex), q.default_value()));
}

Check normalization_instance() {
  const GroupExpr g = parse_group("S[4,6,8|9]");
  const GroupExpr want{{Atom::solenoid(parse_profile("{2:6, 3:w}"))}};
  const SeqSpec factored = factor_sequence(IntSeqSpec{{4, 6, 8}, {9}});
  const SeqSpec want_seq({2, 2, 2, 3, 2, 2, 2}, {3});
  Check c;
  c.passed = g == want && factored == want_seq && profile_from_sequence(factored) == want[0].profile();
  c.detail = "S[4,6,8|9] -> " + to_string(g) + ", sequence " + to_string(factored);
  return c;
}

Check closed_form(std::size_t& cases) {
  const auto start = std::chrono::steady_clock::now();
  Check c;
  cases = 0;
  std::size_t positives = 0;
  for (std::size_t c0 = 0; c0 <= 4; ++c0)
    for (std::size_t e0 = 0; e0 <= 4; ++e0)
      for (std::size_t c1 = 0; c1 <= 4; ++c1)
        for (std::size_t e1 = 0; e1 <= 4; ++e1) {
          ++cases;
          const bool engine = reduces(rt(c0, e0), rt(c1, e1)).reducible;
          const bool formula = e0 <= e1 && c0 + e0 <= c1 + e1;
          positives += formula;
          if (engine != formula || rt_closed_form(c0, e0, c1, e1) != formula) {
            c.passed = false;
            c.detail = "mismatch at (" + std::to_string(c0) + "," + std::to_string(e0) + "," + std::to_string(c1) +
                       "," + std::to_string(e1) + ")";
            return c;
          }
        }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.passed = secs < 1.0;
  c.detail = std::to_string(cases) + " cases, " + std::to_string(positives) + " reducible";
  return c;
}

Check atom_table(Gen& gen, std::size_t samples) {
  Check c;
  for (std::size_t i = 0; i < samples; ++i) {
    const SupernaturalProfile p = gen.profile();
    const std::array<Atom, 3> atoms = {Atom::real(), Atom::torus(), Atom::solenoid(p)};
    // rows: source R, T, Sol; columns: target R, T, Sol
    constexpr bool table[3][3] = {{true, true, true}, {false, true, false}, {false, true, true}};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (atom_reduces(atoms[a], atoms[b]) != table[a][b]) {
          c.passed = false;
          c.detail = "entry (" + std::to_string(a) + "," + std::to_string(b) + ") wrong for " + to_string(p);
          return c;
        }
      }
    const GroupExpr r{{atoms[0]}};
    const GroupExpr t{{atoms[1]}};
    const GroupExpr s{{atoms[2]}};
    if (compare(r, s) != Comparison::LeftStrict || compare(s, t) != Comparison::LeftStrict ||
        compare(r, t) != Comparison::LeftStrict) {
      c.passed = false;
      c.detail = "strictness fails for " + to_string(p);
      return c;
    }
  }
  c.detail = std::to_string(samples) + " profiles, R < Sol_P < T strict";
  return c;
}

Check two_paths(Gen& gen, std::size_t samples) {
  Check c;
  std::size_t positives = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const SupernaturalProfile p = gen.profile();
    const SupernaturalProfile q = gen.coin() ? gen.profile() : finite_perturbation(gen, p);
    const GroupExpr g{{Atom::solenoid(p)}};
    const GroupExpr h{{Atom::solenoid(q)}};
    const bool primal = reduces(g, h).reducible;
    const bool theorem = preceq(q, p);
    const bool hom = hom_nonzero_exists(RationalType::of(q), RationalType::of(p));
    const bool dual_path = dual_reduces(g, h);
    const bool naive = naive_preceq(q, p);
    positives += primal;
    if (primal != theorem || primal != hom || primal != dual_path || primal != naive) {
      c.passed = false;
      c.detail = "disagreement for P=" + to_string(p) + " Q=" + to_string(q);
      return c;
    }
  }
  c.detail = std::to_string(samples) + " pairs, " + std::to_string(positives) + " reducible";
  return c;
}

Check power_law() {
  Check c;
  const std::vector<Atom> atoms = {Atom::real(), Atom::torus(), Atom::solenoid(parse_profile("{2:w}")),
                                   Atom::solenoid(parse_profile("{2:5, 3:w}")),
                                   Atom::solenoid(parse_profile("{default=w}"))};
  std::size_t cases = 0;
  for (const Atom& a : atoms)
    for (const Atom& b : atoms)
      for (std::size_t m = 1; m <= 5; ++m)
        for (std::size_t n = 1; n <= 5; ++n) {
          ++cases;
          const bool want = m <= n && naive_atom_reduces(a, b);
          if (reduces(power_of(a, m), power_of(b, n)).reducible != want) {
            c.passed = false;
            c.detail = to_string(a) + "^" + std::to_string(m) + " vs " + to_string(b) + "^" + std::to_string(n);
            return c;
          }
        }
  c.detail = std::to_string(cases) + " cases";
  return c;
}

Check matching_vs_brute(Gen& gen, std::size_t samples) {
  Check c;
  std::size_t positives = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const GroupExpr g = gen.group(6);
    GroupExpr h;
    if (gen.coin()) {
      h = gen.group(6);
    } else {
      // A target built around g, so that roughly half the pairs reduce.
      for (const Atom& a : g.factors) h.factors.push_back(gen.coin(0.3) ? Atom::torus() : a);
      while (h.size() < 6 && gen.coin()) h.factors.push_back(gen.atom());
      while (h.size() > 6) h.factors.pop_back();
      std::shuffle(h.factors.begin(), h.factors.end(), gen.engine());
    }
    const Verdict v = reduces(g, h);
    positives += v.reducible;
    bool ok = v.reducible == brute_force_reduces(g, h) && verify_certificate(g, h, v);
    if (!v.reducible) ok = ok && v.violator && v.violator->nk.size() < v.violator->k.size();
    if (!ok) {
      c.passed = false;
      c.detail = "failure on " + to_string(g) + " vs " + to_string(h);
      return c;
    }
  }
  c.detail = std::to_string(samples) + " pairs, " + std::to_string(positives) + " reducible, certificates valid";
  return c;
}

Check oracle_consistency(Gen& gen, std::size_t samples, std::size_t window) {
  Check c;
  std::size_t trues = 0;
  std::size_t falses = 0;
  std::size_t max_pool = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const SupernaturalProfile q = gen.profile();
    const SupernaturalProfile p = gen.coin() ? gen.profile() : finite_perturbation(gen, q);
    const PreceqOracleCheck r = check_preceq_oracle(q, p, window);
    (r.preceq ? trues : falses) += 1;
    max_pool = std::max(max_pool, r.pool);
    if (!r.agrees) {
      c.passed = false;
      c.detail = "q=" + to_string(q) + " p=" + to_string(p) + ": " + r.detail;
      return c;
    }
  }
  c.passed = trues > 0 && falses > 0;
  c.detail = std::to_string(trues) + " preceq pairs embed for windows <= " + std::to_string(window) + ", " +
             std::to_string(falses) + " refuted by a failing window; largest pool " + std::to_string(max_pool);
  return c;
}

Check poset_demo(std::size_t window) {
  Check c;
  const auto family = poset::Family::standard();
  std::size_t pairs = 0;
  for (std::size_t power : {1, 2}) {
    const poset::ChainDemo demo = poset::chain_demo(family, 5, power);
    if (!demo.chain_strictly_decreasing || !demo.antichain_incomparable) {
      c.passed = false;
      c.detail = "chain/antichain shape wrong at power " + std::to_string(power);
      return c;
    }
    for (const auto& a : demo.members)
      for (const auto& b : demo.members) {
        ++pairs;
        const auto report = poset::member_crosscheck(a, b, window);
        if (!report.consistent) {
          c.passed = false;
          c.detail = "inconsistent crosscheck " + poset::to_string(a.set) + " vs " + poset::to_string(b.set);
          return c;
        }
      }
  }
  c.detail = "powers 1,2: chain of 5 strictly decreasing, evens/odds incomparable, " + std::to_string(pairs) +
             " crosschecks consistent at window " + std::to_string(window);
  return c;
}

Check member_prefix(Gen& gen, std::size_t length, std::size_t random_sets) {
  Check c;
  const auto family = poset::Family::standard();
  const poset::UPSet evens = poset::UPSet::residues(2, {0});
  const poset::MemberRef m(family, evens);
  const auto got = poset::member_sequence(m, 4);
  const auto oracle = recipe_member_prefix(family->p(), family->q(), evens, 4);
  const std::vector<Prime> frozen = {13, 3, 37, 2};
  const poset::MemberRef all(family, poset::UPSet::cofinite({}));
  const std::vector<Prime> frozen_cofinite = {3, 2, 11, 2};
  if (got != oracle || oracle != frozen || poset::member_sequence(all, 4) != frozen_cofinite ||
      recipe_member_prefix(family->p(), family->q(), all.set, 4) != frozen_cofinite) {
    c.passed = false;
    c.detail = "evens prefix mismatch";
    return c;
  }
  std::vector<poset::UPSet> sets = {evens, poset::UPSet::residues(2, {1}), poset::UPSet::finite({1, 3}),
                                    poset::UPSet::cofinite({0, 2}), poset::UPSet::residues(4, {0})};
  for (std::size_t i = 0; i < random_sets; ++i) sets.push_back(gen.upset(4));
  for (const auto& s : sets) {
    if (poset::member_sequence(poset::MemberRef(family, s), static_cast<std::int64_t>(length)) !=
        recipe_member_prefix(family->p(), family->q(), s, length)) {
      c.passed = false;
      c.detail = "long prefix mismatch for " + poset::to_string(s);
      return c;
    }
  }
  c.detail = "evens n=4 -> (13,3,37,2); " + std::to_string(sets.size()) + " sets agree with the sieve recipe on " +
             std::to_string(length) + " terms";
  return c;
}

Check duality_instances(Gen& gen, std::size_t samples) {
  Check c;
  const GroupExpr torus{{Atom::torus()}};
  const GroupExpr sol2{{Atom::solenoid(parse_profile("{2:w}"))}};
  bool ok = dual(torus) == DualExpr{{RationalType::integers()}} && !dual_reduces(torus, sol2) &&
            !hom_nonzero_exists(RationalType::of(parse_profile("{2:w}")), RationalType::integers()) &&
            dual_reduces(sol2, torus);
  for (std::size_t i = 0; i < 20 && ok; ++i) {
    const SupernaturalProfile p = gen.profile();
    const DualExpr d = dual(GroupExpr{{Atom::solenoid(p)}});
    ok = d.factors.size() == 1 && std::get<RationalType>(d.factors[0]) == RationalType::of(p) &&
         predual(d.factors[0]) == Atom::solenoid(p);
  }
  for (std::size_t i = 0; i < samples && ok; ++i) {
    const GroupExpr g = gen.group(6, false);
    ok = rank(dual(g)) == dimension(g);
  }
  c.passed = ok;
  c.detail = "dual(T) = Z, dual(Sol_P) = type P, T !<= Sol{2:w} via duals, rank = dim on " +
             std::to_string(samples) + " compact groups";
  return c;
}

Check preorder_laws(Gen& gen, std::size_t samples) {
  Check c;
  std::size_t chains = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const GroupExpr g = gen.group(3);
    const GroupExpr h = gen.group(3);
    const GroupExpr k = gen.group(3);
    if (!reduces(g, g).reducible) {
      c.passed = false;
      c.detail = "not reflexive on " + to_string(g);
      return c;
    }
    if (reduces(g, h).reducible && reduces(h, k).reducible) {
      ++chains;
      if (!reduces(g, k).reducible) {
        c.passed = false;
        c.detail = "not transitive: " + to_string(g) + ", " + to_string(h) + ", " + to_string(k);
        return c;
      }
    }
  }
  c.detail = std::to_string(samples) + " triples, " + std::to_string(chains) + " with both premises";
  return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(Scale scale) {
  const bool full = scale == Scale::Full;
  std::vector<CriterionResult> out;
  auto run = [&](int id, std::string title, std::function<Check()> body) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    try {
      const Check c = body();
      r.passed = c.passed;
      r.detail = c.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  };

  std::size_t rt_cases = 0;
  run(1, "normalization instance S[4,6,8|9]", [] { return normalization_instance(); });
  run(2, "closed form for R^c x T^e products", [&] { return closed_form(rt_cases); });
  run(3, "atom rule table", [&] {
    Gen gen(3);
    return atom_table(gen, full ? 50 : 10);
  });
  run(4, "solenoid verdicts agree with the dual path", [&] {
    Gen gen(4);
    return two_paths(gen, full ? 1000 : 200);
  });
  run(5, "power law", [] { return power_law(); });
  run(6, "matching against exhaustive search", [&] {
    Gen gen(6);
    return matching_vs_brute(gen, full ? 500 : 100);
  });
  run(7, "preceq against the finite injection oracle", [&] {
    Gen gen(7);
    return oracle_consistency(gen, full ? 1000 : 100, full ? 200 : 50);
  });
  run(8, "poset embedding demo", [&] { return poset_demo(full ? 200 : 40); });
  run(9, "member prefix against the sieve recipe", [&] {
    Gen gen(9);
    return member_prefix(gen, full ? 2000 : 200, full ? 30 : 5);
  });
  run(10, "duality instances", [&] {
    Gen gen(10);
    return duality_instances(gen, full ? 100 : 30);
  });
  run(11, "preorder laws", [&] {
    Gen gen(11);
    return preorder_laws(gen, full ? 1000 : 200);
  });
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[32];
  std::snprintf(head, sizeof head, "%s [%2d] ", r.passed ? "PASS" : "FAIL", r.id);
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.3f s", r.seconds);
  return head + r.title + " (" + r.detail + "; " + secs + ")";
}

}  // namespace solenoid::verify
