#include "solenoid/sequence.hpp"

#include <algorithm>
#include <numeric>

#include "solenoid/error.hpp"

namespace solenoid {
namespace {

std::size_t primitive_period(const std::vector<Prime>& word) {
  const std::size_t n = word.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = word[i] == word[i % d];
    if (ok) return d;
  }
  return n;
}

void require_primes(const std::vector<Prime>& xs) {
  for (Prime p : xs) {
    if (!is_prime(p)) throw DomainError("sequence entry " + std::to_string(p) + " is not prime");
  }
}

}  // namespace

SeqSpec::SeqSpec(std::vector<Prime> prefix, std::vector<Prime> tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  if (tail_.empty()) throw DomainError("sequence tail must be nonempty");
  require_primes(prefix_);
  require_primes(tail_);
  tail_.resize(primitive_period(tail_));
  while (!prefix_.empty() && prefix_.back() == tail_.back()) {
    prefix_.pop_back();
    std::rotate(tail_.begin(), tail_.end() - 1, tail_.end());
  }
}

Prime SeqSpec::at(std::size_t index) const {
  if (index < prefix_.size()) return prefix_[index];
  return tail_[(index - prefix_.size()) % tail_.size()];
}

std::vector<Prime> SeqSpec::expand(std::size_t count) const {
  std::vector<Prime> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(at(i));
  return out;
}

Mult multiplicity(const SupernaturalProfile& p, Prime gamma) { return p.multiplicity(gamma); }

Mult multiplicity(const SeqSpec& s, Prime gamma) {
  if (!is_prime(gamma)) throw DomainError(std::to_string(gamma) + " is not prime");
  if (std::find(s.tail().begin(), s.tail().end(), gamma) != s.tail().end()) return Mult::omega();
  return Mult(static_cast<std::uint64_t>(std::count(s.prefix().begin(), s.prefix().end(), gamma)));
}

SupernaturalProfile profile_from_sequence(const SeqSpec& s) {
  SupernaturalProfile::Exceptions ex;
  for (Prime p : s.prefix()) ex[p] = ex[p] + Mult(1);
  for (Prime p : s.tail()) ex[p] = Mult::omega();
  return SupernaturalProfile(std::move(ex), Mult{});
}

SeqSpec factor_sequence(const IntSeqSpec& s) {
  if (s.tail.empty()) throw DomainError("sequence tail must be nonempty");
  auto factor_all = [](const std::vector<std::uint64_t>& xs) {
    std::vector<Prime> out;
    for (std::uint64_t x : xs) {
      if (x <= 1) throw DomainError("sequence entries must be greater than 1, got " + std::to_string(x));
      const auto f = factorize(x);
      out.insert(out.end(), f.begin(), f.end());
    }
    return out;
  };
  return SeqSpec(factor_all(s.prefix), factor_all(s.tail));
}

SeqSpec interleave(const SeqSpec& l, const SeqSpec& m) {
  const std::size_t start = std::max(l.prefix().size(), m.prefix().size());
  const std::size_t period = std::lcm(l.tail().size(), m.tail().size());
  std::vector<Prime> prefix;
  std::vector<Prime> tail;
  for (std::size_t k = 0; k < start; ++k) {
    prefix.push_back(l.at(k));
    prefix.push_back(m.at(k));
  }
  for (std::size_t k = start; k < start + period; ++k) {
    tail.push_back(l.at(k));
    tail.push_back(m.at(k));
  }
  return SeqSpec(std::move(prefix), std::move(tail));
}

CanonicalSequence::CanonicalSequence(SupernaturalProfile profile) : profile_(std::move(profile)) {
  for (const auto& [prime, mult] : profile_.exceptions()) {
    if (mult.is_omega()) {
      omega_primes_.push_back(prime);
    } else if (!mult.is_zero()) {
      finite_part_.emplace_back(prime, mult.finite());
    }
  }
  if (profile_.default_is_omega()) omega_primes_.clear();
}

Prime CanonicalSequence::nth_omega_prime(std::size_t k) {
  while (omega_primes_.size() <= k) {
    const Prime p = prime_table().nth(omega_scan_++);
    if (profile_.multiplicity(p).is_omega()) omega_primes_.push_back(p);
  }
  return omega_primes_[k];
}

Prime CanonicalSequence::next() {
  while (finite_index_ < finite_part_.size()) {
    auto& [prime, count] = finite_part_[finite_index_];
    if (emitted_of_current_ < count) {
      ++emitted_of_current_;
      return prime;
    }
    ++finite_index_;
    emitted_of_current_ = 0;
  }
  if (!profile_.default_is_omega()) {
    const Prime p = omega_primes_[cycle_pos_];
    cycle_pos_ = (cycle_pos_ + 1) % omega_primes_.size();
    return p;
  }
  const Prime p = nth_omega_prime(stage_pos_);
  if (++stage_pos_ == stage_) {
    ++stage_;
    stage_pos_ = 0;
  }
  return p;
}

std::vector<Prime> canonical_sequence(const SupernaturalProfile& p, std::int64_t n) {
  if (n < 0) throw DomainError("sequence length must be nonnegative, got " + std::to_string(n));
  CanonicalSequence gen(p);
  std::vector<Prime> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) out.push_back(gen.next());
  return out;
}

PrimeCounts::PrimeCounts(std::span<const Prime> primes) {
  for (Prime p : primes) ++counts_[p];
}

std::size_t PrimeCounts::count(Prime p) const {
  auto it = counts_.find(p);
  return it == counts_.end() ? 0 : it->second;
}

bool PrimeCounts::embeds_into(const PrimeCounts& pool) const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [&](const auto& entry) { return entry.second <= pool.count(entry.first); });
}

bool oracle_injection(std::span<const Prime> q_window, std::span<const Prime> p_pool) {
  return PrimeCounts(q_window).embeds_into(PrimeCounts(p_pool));
}

bool oracle_injection(std::span<const Prime> q_window, const PrimeCounts& p_pool) {
  return PrimeCounts(q_window).embeds_into(p_pool);
}

std::string to_string(const SeqSpec& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.prefix().size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(s.prefix()[i]);
  }
  out += " | ";
  for (std::size_t i = 0; i < s.tail().size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(s.tail()[i]);
  }
  out += "]";
  return out;
}

}  // namespace solenoid
