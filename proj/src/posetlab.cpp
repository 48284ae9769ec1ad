#include "solenoid/posetlab.hpp"

#include <algorithm>
#include <numeric>

#include "solenoid/error.hpp"

namespace solenoid::poset {
namespace {

std::size_t primitive_period(const std::vector<bool>& word) {
  const std::size_t n = word.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = word[i] == word[i % d];
    if (ok) return d;
  }
  return n;
}

template <typename Op>
UPSet combine(const UPSet& a, const UPSet& b, Op op) {
  const std::size_t threshold = std::max(a.threshold(), b.threshold());
  const std::size_t period = std::lcm(a.period(), b.period());
  std::vector<bool> below(threshold);
  for (std::size_t n = 0; n < threshold; ++n) below[n] = op(a.contains(n), b.contains(n));
  std::vector<bool> word(period);
  for (std::size_t r = 0; r < period; ++r) word[r] = op(a.word()[r % a.period()], b.word()[r % b.period()]);
  return UPSet(std::move(below), std::move(word));
}

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

// Index set whose elements c contribute d_{1+3c} to P_X.
UPSet starred_indices(const UPSet& x) { return x.is_cofinite() ? UPSet::finite({}) : complement(x); }

}  // namespace

UPSet::UPSet(std::vector<bool> below_threshold, std::vector<bool> word)
    : below_(std::move(below_threshold)), word_(std::move(word)) {
  if (word_.empty()) throw DomainError("periodic word must be nonempty");
  word_.resize(primitive_period(word_));
  while (!below_.empty() && below_.back() == word_[(below_.size() - 1) % word_.size()]) below_.pop_back();
}

UPSet UPSet::finite(const std::vector<std::uint64_t>& members) {
  std::vector<bool> below;
  for (std::uint64_t n : members) {
    if (n >= below.size()) below.resize(n + 1, false);
    below[n] = true;
  }
  return UPSet(std::move(below), {false});
}

UPSet UPSet::cofinite(const std::vector<std::uint64_t>& non_members) {
  std::vector<bool> below;
  for (std::uint64_t n : non_members) {
    if (n >= below.size()) below.resize(n + 1, true);
    below[n] = false;
  }
  return UPSet(std::move(below), {true});
}

UPSet UPSet::residues(std::size_t period, const std::vector<std::size_t>& residues) {
  if (period == 0) throw DomainError("period must be at least 1");
  std::vector<bool> word(period, false);
  for (std::size_t r : residues) {
    if (r >= period) throw DomainError("residue " + std::to_string(r) + " out of range for period " + std::to_string(period));
    word[r] = true;
  }
  return UPSet({}, std::move(word));
}

UPSet UPSet::general(const std::vector<std::uint64_t>& members, std::size_t from, const std::vector<bool>& word) {
  std::vector<bool> below(from, false);
  for (std::uint64_t n : members) {
    if (n >= from) throw DomainError("listed member " + std::to_string(n) + " is not below from=" + std::to_string(from));
    below[n] = true;
  }
  return UPSet(std::move(below), word);
}

bool UPSet::contains(std::uint64_t n) const {
  if (n < below_.size()) return below_[n];
  return word_[n % word_.size()];
}

bool UPSet::is_finite() const { return std::none_of(word_.begin(), word_.end(), [](bool b) { return b; }); }

bool UPSet::is_cofinite() const { return std::all_of(word_.begin(), word_.end(), [](bool b) { return b; }); }

std::vector<std::uint64_t> UPSet::enumerate(std::size_t count) const {
  std::vector<std::uint64_t> out;
  const bool bounded = is_finite();
  for (std::uint64_t n = 0; out.size() < count; ++n) {
    if (bounded && n >= below_.size()) break;
    if (contains(n)) out.push_back(n);
  }
  return out;
}

UPSet complement(const UPSet& a) {
  return combine(a, a, [](bool x, bool) { return !x; });
}

UPSet set_union(const UPSet& a, const UPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

UPSet set_difference(const UPSet& a, const UPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

bool subset_star(const UPSet& a, const UPSet& b) {
  const std::size_t period = std::lcm(a.period(), b.period());
  for (std::size_t r = 0; r < period; ++r) {
    if (a.word()[r % a.period()] && !b.word()[r % b.period()]) return false;
  }
  return true;
}

std::string to_string(const UPSet& a) {
  if (a.is_finite()) return "fin{" + join(a.enumerate(a.threshold())) + "}";
  if (a.is_cofinite()) {
    std::vector<std::uint64_t> missing;
    for (std::uint64_t n = 0; n < a.threshold(); ++n) {
      if (!a.contains(n)) missing.push_back(n);
    }
    return "cofin{" + join(missing) + "}";
  }
  std::string out = "ups{";
  std::vector<std::uint64_t> members;
  for (std::uint64_t n = 0; n < a.threshold(); ++n) {
    if (a.contains(n)) members.push_back(n);
  }
  if (!members.empty()) out += "except=" + join(members) + "; ";
  out += "from=" + std::to_string(a.threshold()) + "; period=" + std::to_string(a.period()) + "; word=";
  for (bool bit : a.word()) out += bit ? '1' : '0';
  return out + "}";
}

Family::Family(SupernaturalProfile p, SupernaturalProfile q) : p_(std::move(p)), q_(std::move(q)) {
  if (!preceq(p_, q_)) {
    throw DomainError("family needs E(Sol" + to_string(q_) + ") <= E(Sol" + to_string(p_) + "), i.e. P preceq Q");
  }
  if (p_.default_is_omega() || !q_.default_is_omega()) {
    throw DomainError("family needs infinitely many primes with t^P < t^Q: P must have default 0 and Q default w");
  }
}

std::shared_ptr<const Family> Family::create(SupernaturalProfile p, SupernaturalProfile q) {
  return std::make_shared<const Family>(std::move(p), std::move(q));
}

std::shared_ptr<const Family> Family::standard() {
  return create(SupernaturalProfile({{2, Mult::omega()}}, Mult{}), SupernaturalProfile::all_omega());
}

bool Family::in_d(Prime gamma) const { return p_.multiplicity(gamma) < q_.multiplicity(gamma); }

Prime Family::d(std::size_t i) const {
  std::lock_guard lock(mutex_);
  while (d_cache_.size() <= i) {
    const Prime gamma = prime_table().nth(scan_++);
    if (in_d(gamma)) d_cache_.push_back(gamma);
  }
  return d_cache_[i];
}

std::vector<Prime> D_enumeration(const Family& f, std::size_t k) {
  std::vector<Prime> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(f.d(i));
  return out;
}

MemberRef::MemberRef(std::shared_ptr<const Family> family_in, UPSet set_in, std::size_t power_in)
    : family(std::move(family_in)), set(std::move(set_in)), power(power_in) {
  if (!family) throw DomainError("member needs a family");
  if (power < 1) throw DomainError("member power must be at least 1");
}

std::string MemberRef::describe(char name) const {
  std::string out = std::string("Sol_{P_") + name + "}";
  if (power > 1) out = "(" + out + ")^" + std::to_string(power);
  return out + " with " + name + " = " + to_string(set);
}

MemberSequence::MemberSequence(const MemberRef& member)
    : family_(member.family), set_(member.set), cofinite_(member.set.is_cofinite()), base_(member.family->p()) {}

Prime MemberSequence::next_inner() {
  if (inner_position_++ % 2 == 0) return family_->d(3 * p0_index_++);
  return base_.next();
}

Prime MemberSequence::next() {
  if (cofinite_ || position_++ % 2 == 1) return next_inner();
  while (set_.contains(complement_scan_)) ++complement_scan_;
  const std::uint64_t c = complement_scan_++;
  return family_->d(1 + 3 * static_cast<std::size_t>(c));
}

std::vector<Prime> member_sequence(const MemberRef& m, std::int64_t n) {
  if (n < 0) throw DomainError("sequence length must be nonnegative, got " + std::to_string(n));
  MemberSequence gen(m);
  std::vector<Prime> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) out.push_back(gen.next());
  return out;
}

bool member_reduces(const MemberRef& a, const MemberRef& b) {
  if (a.family != b.family && (a.family->p() != b.family->p() || a.family->q() != b.family->q())) {
    throw DomainError("members belong to different families");
  }
  if (a.power != b.power) {
    throw DomainError("members have different powers (" + std::to_string(a.power) + " vs " + std::to_string(b.power) + ")");
  }
  return subset_star(a.set, b.set);
}

CrosscheckReport member_crosscheck(const MemberRef& a, const MemberRef& b, std::size_t window) {
  CrosscheckReport report;
  report.member_verdict = member_reduces(a, b);

  report.surplus_indices = set_difference(starred_indices(b.set), starred_indices(a.set));
  report.surplus_finite = report.surplus_indices.is_finite();
  if (report.surplus_finite) {
    for (std::uint64_t c : report.surplus_indices.enumerate(report.surplus_indices.threshold())) {
      report.surplus_primes.push_back(a.family->d(1 + 3 * static_cast<std::size_t>(c)));
    }
    std::string listed;
    for (Prime x : report.surplus_primes) listed += (listed.empty() ? "" : ",") + std::to_string(x);
    report.diagnostics.push_back("symbolic: primes of P_B absent from P_A: {" + listed + "}, finite deficit");
  } else {
    report.diagnostics.push_back("symbolic: P_B has infinitely many primes absent from P_A (indices " +
                                 to_string(report.surplus_indices) + ")");
  }

  report.window = window;
  if (window == 0) {
    report.oracle_verdict = report.member_verdict;
    report.diagnostics.emplace_back("oracle: skipped (window 0)");
  } else {
    report.drop_limit = 4 * window;
    report.pool_length = 32 * (report.drop_limit + window);
    const auto target = member_sequence(b, static_cast<std::int64_t>(report.drop_limit + window));
    const auto pool_terms = member_sequence(a, static_cast<std::int64_t>(report.pool_length));
    const PrimeCounts pool(pool_terms);
    for (std::size_t d = 0; d <= report.drop_limit; ++d) {
      if (oracle_injection(std::span<const Prime>(target).subspan(d, window), pool)) {
        report.embedding_drop = d;
        break;
      }
    }
    report.oracle_verdict = report.embedding_drop.has_value();
    if (report.embedding_drop) {
      report.diagnostics.push_back("oracle: window of P_B after dropping " + std::to_string(*report.embedding_drop) +
                                   " terms embeds into the first " + std::to_string(report.pool_length) +
                                   " terms of P_A");
    } else {
      report.diagnostics.push_back("oracle: no window of length " + std::to_string(window) + " with drop <= " +
                                   std::to_string(report.drop_limit) + " embeds into the first " +
                                   std::to_string(report.pool_length) + " terms of P_A");
    }
  }

  report.consistent = report.surplus_finite == report.member_verdict && report.oracle_verdict == report.member_verdict;
  report.diagnostics.emplace_back(report.consistent ? "CONSISTENT" : "INCONSISTENT");
  return report;
}

SandwichReport sandwich(const MemberRef& m, std::size_t sample) {
  const Family& f = *m.family;
  SandwichReport report;
  // t^{P_A} = t^P + 1 on the used D-primes {d_{3i}} ∪ {d_{1+3c} : c ∈ C_A},
  // and t^P elsewhere. Used primes never create surplus over Q (t^P < t^Q
  // there), so P_A inherits P's finite deficit against Q.
  report.deficit_pa_q = deficit(f.p(), f.q());
  report.deficit_p_pa = Mult{};
  // {d_{3i+2}} is never used: t^Q > t^P = t^{P_A} on an infinite set.
  report.q_surplus_over_pa_infinite = true;
  // {d_{3i}} is always used: t^{P_A} = t^P + 1 on an infinite set.
  report.pa_surplus_over_p_infinite = true;

  // Concrete check on a prefix of P_A.
  MemberSequence gen(m);
  std::vector<Prime> prefix;
  std::size_t last_position = 0;
  while (report.sampled_primes.size() < sample) {
    const Prime gamma = gen.next();
    prefix.push_back(gamma);
    if (f.in_d(gamma) && std::find(report.sampled_primes.begin(), report.sampled_primes.end(), gamma) ==
                             report.sampled_primes.end()) {
      report.sampled_primes.push_back(gamma);
      last_position = prefix.size();
    }
  }
  Natural finite_total = 0;
  for (const auto& [prime, mult] : f.p().exceptions()) {
    if (!mult.is_omega()) finite_total += mult.finite();
  }
  const std::size_t extra = finite_total > 100000 ? 400000 : 4 * static_cast<std::size_t>(finite_total);
  while (prefix.size() < 4 * last_position + extra + 16) prefix.push_back(gen.next());
  const PrimeCounts counts(prefix);

  report.sample_ok = true;
  for (Prime gamma : report.sampled_primes) {
    const Mult tp = f.p().multiplicity(gamma);
    const Mult expected = tp + Mult(1);
    if (tp.is_omega() || expected > f.q().multiplicity(gamma) || Mult(counts.count(gamma)) != expected) {
      report.sample_ok = false;
    }
  }
  for (std::size_t i = 0; 3 * i + 2 < 3 * sample; ++i) {
    const Prime unused = f.d(3 * i + 2);
    if (f.p().multiplicity(unused).is_omega() || Mult(counts.count(unused)) != f.p().multiplicity(unused)) {
      report.sample_ok = false;
    }
  }
  return report;
}

ChainDemo chain_demo(const std::shared_ptr<const Family>& f, std::size_t depth, std::size_t power) {
  if (depth < 2) throw DomainError("chain depth must be at least 2");
  if (power < 1) throw DomainError("power must be at least 1");
  ChainDemo demo;
  for (std::size_t i = 0; i < depth; ++i) {
    demo.labels.push_back("A" + std::to_string(i) + "=mult(" + std::to_string(std::size_t{1} << i) + ")");
    demo.members.emplace_back(f, UPSet::residues(std::size_t{1} << i, {0}), power);
  }
  demo.labels.emplace_back("evens");
  demo.members.emplace_back(f, UPSet::residues(2, {0}), power);
  demo.labels.emplace_back("odds");
  demo.members.emplace_back(f, UPSet::residues(2, {1}), power);

  const std::size_t n = demo.members.size();
  demo.matrix.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) demo.matrix[i][j] = member_reduces(demo.members[i], demo.members[j]);
  }
  demo.chain_strictly_decreasing = true;
  for (std::size_t i = 0; i < depth; ++i) {
    for (std::size_t j = i + 1; j < depth; ++j) {
      if (!demo.matrix[j][i] || demo.matrix[i][j]) demo.chain_strictly_decreasing = false;
    }
  }
  demo.antichain_incomparable = !demo.matrix[n - 2][n - 1] && !demo.matrix[n - 1][n - 2];
  return demo;
}

}  // namespace solenoid::poset
