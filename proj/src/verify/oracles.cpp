#include "solenoid/verify/oracles.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "solenoid/primes.hpp"
#include "solenoid/sequence.hpp"

namespace solenoid::verify {
namespace {

// Every exception key of either profile, plus all primes up to the first one
// that is a key of neither (it stands in for every prime beyond the keys).
std::vector<Prime> probe_primes(const SupernaturalProfile& q, const SupernaturalProfile& p) {
  std::set<Prime> keys;
  for (const auto& [k, v] : q.exceptions()) keys.insert(k);
  for (const auto& [k, v] : p.exceptions()) keys.insert(k);
  for (Prime c = 2;; ++c) {
    if (!is_prime(c)) continue;
    const bool fresh = !keys.contains(c);
    keys.insert(c);
    if (fresh) break;
  }
  return {keys.begin(), keys.end()};
}

std::uint64_t small(const Mult& m, std::uint64_t cap) {
  if (m.is_omega() || m.finite() > cap) return cap;
  return m.finite().convert_to<std::uint64_t>();
}

std::string prime_list(std::span<const Prime> xs, std::size_t max_shown) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size() && i < max_shown; ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  if (xs.size() > max_shown) out += ",...";
  return out + ")";
}

PreceqOracleCheck check_true(const SupernaturalProfile& q, const SupernaturalProfile& p, std::size_t max_window) {
  PreceqOracleCheck out;
  out.preceq = true;
  constexpr std::uint64_t kCap = 1'000'000;
  std::uint64_t finite_part = 0;
  for (const auto& [k, v] : q.exceptions()) {
    if (!v.is_omega()) finite_part += small(v, kCap);
  }
  if (finite_part >= kCap) {
    out.detail = "finite part of q too long for the oracle";
    return out;
  }
  const auto q_seq = canonical_sequence(q, static_cast<std::int64_t>(finite_part + max_window));
  for (std::size_t i = 0; i < q_seq.size(); ++i) {
    const Mult tq = q.multiplicity(q_seq[i]);
    if (!tq.is_omega() && tq > p.multiplicity(q_seq[i])) out.drop = i + 1;
  }
  if (out.drop + max_window > q_seq.size()) {
    out.detail = "drop bound beyond the generated prefix";
    return out;
  }
  const std::span<const Prime> window(q_seq.data() + out.drop, max_window);

  std::unordered_map<Prime, std::size_t> need;
  for (Prime x : window) ++need[x];
  std::size_t unmet = need.size();
  PrimeCounts pool;
  CanonicalSequence gen(p);
  constexpr std::size_t kMaxPool = 2'000'000;
  while (unmet > 0 && out.pool < kMaxPool) {
    const Prime x = gen.next();
    ++out.pool;
    pool.add(x);
    const auto it = need.find(x);
    if (it != need.end() && pool.count(x) == it->second) --unmet;
  }
  bool all = true;
  std::size_t first_bad = 0;
  for (std::size_t w = 1; w <= max_window && all; ++w) {
    if (!oracle_injection(window.first(w), pool)) {
      all = false;
      first_bad = w;
    }
  }
  out.agrees = all;
  out.detail = all ? "windows 1.." + std::to_string(max_window) + " after drop " + std::to_string(out.drop) +
                         " embed into a prefix of length " + std::to_string(out.pool)
                   : "window of length " + std::to_string(first_bad) + " after drop " + std::to_string(out.drop) +
                         " does not embed";
  return out;
}

PreceqOracleCheck check_false(const SupernaturalProfile& q, const SupernaturalProfile& p) {
  PreceqOracleCheck out;
  std::optional<Prime> witness;
  for (Prime g : probe_primes(q, p)) {
    if (q.multiplicity(g).is_omega() && !p.multiplicity(g).is_omega()) {
      witness = g;
      break;
    }
  }
  if (!witness) {
    out.detail = "no witness prime with t^Q = w and t^P finite";
    return out;
  }
  const std::uint64_t limit = small(p.multiplicity(*witness), 1'000'000);
  if (limit >= 1'000) {
    out.detail = "witness multiplicity too large for the oracle";
    return out;
  }
  const std::size_t needed = limit + 1;

  constexpr std::array<std::size_t, 5> drops = {0, 1, 17, 100, 1000};
  CanonicalSequence q_gen(q);
  std::vector<Prime> q_seq;
  std::vector<std::vector<Prime>> windows;
  for (std::size_t d : drops) {
    std::size_t seen = 0;
    std::size_t end = d;
    while (seen < needed) {
      while (q_seq.size() <= end) q_seq.push_back(q_gen.next());
      if (q_seq[end] == *witness) ++seen;
      ++end;
    }
    windows.emplace_back(q_seq.begin() + static_cast<std::ptrdiff_t>(d), q_seq.begin() + static_cast<std::ptrdiff_t>(end));
  }
  std::size_t longest = 0;
  for (const auto& w : windows) longest = std::max(longest, w.size());
  out.pool = std::max<std::size_t>(10'000, 4 * (drops.back() + longest));
  const auto p_seq = canonical_sequence(p, static_cast<std::int64_t>(out.pool));
  const PrimeCounts pool(p_seq);

  bool all_fail = true;
  for (const auto& w : windows) all_fail = all_fail && !oracle_injection(w, pool);
  out.agrees = all_fail;
  out.detail = "witness " + std::to_string(*witness) + " (t^P = " + std::to_string(limit) + "): " +
               std::to_string(windows.size()) + " windows up to length " + std::to_string(longest) +
               (all_fail ? " fail" : " include one that embeds") + " against a prefix of length " +
               std::to_string(out.pool) + ", e.g. " + prime_list(windows.front(), 8);
  return out;
}

}  // namespace

bool naive_preceq(const SupernaturalProfile& q, const SupernaturalProfile& p) {
  for (Prime g : probe_primes(q, p)) {
    if (q.multiplicity(g).is_omega() && !p.multiplicity(g).is_omega()) return false;
  }
  return true;
}

bool naive_atom_reduces(const Atom& a, const Atom& b) {
  switch (a.kind()) {
    case AtomKind::Real:
      return true;
    case AtomKind::Torus:
      return b.kind() == AtomKind::Torus;
    case AtomKind::Solenoid:
      if (b.kind() == AtomKind::Torus) return true;
      if (b.kind() == AtomKind::Real) return false;
      return naive_preceq(b.profile(), a.profile());
  }
  return false;
}

bool brute_force_reduces(const GroupExpr& g, const GroupExpr& h) {
  if (g.size() > h.size()) return false;
  std::vector<bool> used(h.size(), false);
  auto place = [&](auto&& self, std::size_t i) -> bool {
    if (i == g.size()) return true;
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (used[j] || !naive_atom_reduces(g[i], h[j])) continue;
      used[j] = true;
      if (self(self, i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return place(place, 0);
}

PreceqOracleCheck check_preceq_oracle(const SupernaturalProfile& q, const SupernaturalProfile& p,
                                      std::size_t max_window) {
  if (max_window == 0) max_window = 1;
  return preceq(q, p) ? check_true(q, p, max_window) : check_false(q, p);
}

std::vector<Prime> recipe_member_prefix(const SupernaturalProfile& p, const SupernaturalProfile& q,
                                        const poset::UPSet& a, std::size_t n) {
  const bool cofinite = a.is_cofinite();

  // Which entries of d, P_0* and P_A* the first n terms use.
  const std::size_t outer_even = (n + 1) / 2;
  const std::size_t outer_odd = n / 2;
  std::size_t p0_count = 0;
  std::size_t p_count = 0;
  std::vector<std::uint64_t> c;
  if (cofinite) {
    p0_count = outer_even;
    p_count = outer_odd;
  } else {
    p0_count = (outer_odd + 1) / 2;
    p_count = outer_odd / 2;
    for (std::uint64_t m = 0; c.size() < outer_even; ++m) {
      if (!a.contains(m)) c.push_back(m);
    }
  }
  std::size_t d_needed = p0_count == 0 ? 0 : 3 * (p0_count - 1) + 1;
  for (auto cj : c) d_needed = std::max<std::size_t>(d_needed, 1 + 3 * cj + 1);

  std::vector<Prime> d;
  for (std::size_t bound = 64; d.size() < d_needed; bound *= 2) {
    std::vector<bool> composite(bound + 1, false);
    d.clear();
    for (std::size_t x = 2; x <= bound; ++x) {
      if (composite[x]) continue;
      for (std::size_t y = x * x; y <= bound; y += x) composite[y] = true;
      if (p.multiplicity(x) < q.multiplicity(x)) d.push_back(x);
    }
  }

  std::vector<Prime> base;
  std::vector<Prime> omega_primes;
  for (const auto& [g, t] : p.exceptions()) {
    if (t.is_omega()) {
      omega_primes.push_back(g);
    } else {
      for (std::uint64_t k = 0; k < t.finite(); ++k) base.push_back(g);
    }
  }
  for (std::size_t k = 0; base.size() < p_count; ++k) base.push_back(omega_primes[k % omega_primes.size()]);

  auto p0 = [&](std::size_t i) { return d[3 * i]; };
  auto inner = [&](std::size_t m) { return m % 2 == 0 ? p0(m / 2) : base[m / 2]; };

  std::vector<Prime> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (cofinite) {
      out.push_back(k % 2 == 0 ? p0(k / 2) : base[k / 2]);
    } else {
      out.push_back(k % 2 == 0 ? d[1 + 3 * c[k / 2]] : inner(k / 2));
    }
  }
  return out;
}

}  // namespace solenoid::verify
