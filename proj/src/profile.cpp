#include "solenoid/profile.hpp"

#include <set>

#include "solenoid/error.hpp"

namespace solenoid {

PrimeMultiplicities::PrimeMultiplicities(Exceptions exceptions, Mult default_value)
    : default_(std::move(default_value)) {
  if (!default_.is_zero() && !default_.is_omega()) {
    throw DomainError("profile default must be 0 or w, got " + default_.str());
  }
  for (auto& [prime, mult] : exceptions) {
    if (!is_prime(prime)) throw DomainError("profile key " + std::to_string(prime) + " is not prime");
    if (mult != default_) exceptions_.emplace(prime, std::move(mult));
  }
}

Mult PrimeMultiplicities::at(Prime p) const {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (auto it = exceptions_.find(p); it != exceptions_.end()) return it->second;
  return default_;
}

bool PrimeMultiplicities::has_infinite_total() const {
  if (default_.is_omega()) return true;
  for (const auto& [prime, mult] : exceptions_) {
    if (mult.is_omega()) return true;
  }
  return false;
}

SupernaturalProfile::SupernaturalProfile(Exceptions exceptions, Mult default_value)
    : SupernaturalProfile(PrimeMultiplicities(std::move(exceptions), std::move(default_value))) {}

SupernaturalProfile::SupernaturalProfile(PrimeMultiplicities multiplicities) : m_(std::move(multiplicities)) {
  if (!m_.has_infinite_total()) {
    throw DomainError("profile " + to_string(m_) +
                      " has finite total multiplicity; a prime sequence is infinite, so some prime "
                      "(or the default) must be w");
  }
}

SupernaturalProfile SupernaturalProfile::all_omega() { return SupernaturalProfile({}, Mult::omega()); }

DeficitTable deficit_table(const PrimeMultiplicities& q, const PrimeMultiplicities& p) {
  DeficitTable table;
  std::set<Prime> keys;
  for (const auto& entry : q.exceptions()) keys.insert(entry.first);
  for (const auto& entry : p.exceptions()) keys.insert(entry.first);
  for (Prime prime : keys) {
    Mult s = Mult::surplus(q.at(prime), p.at(prime));
    if (s.is_zero()) continue;
    table.total = table.total + s;
    table.surplus.emplace_back(prime, std::move(s));
  }
  if (q.default_is_omega() && !p.default_is_omega()) {
    table.default_surplus = true;
    table.total = Mult::omega();
  }
  return table;
}

Mult deficit(const PrimeMultiplicities& q, const PrimeMultiplicities& p) { return deficit_table(q, p).total; }

Mult deficit(const SupernaturalProfile& q, const SupernaturalProfile& p) {
  return deficit(q.multiplicities(), p.multiplicities());
}

bool preceq(const SupernaturalProfile& q, const SupernaturalProfile& p) { return !deficit(q, p).is_omega(); }

SupernaturalProfile profile_add(const SupernaturalProfile& l, const SupernaturalProfile& m) {
  const Mult def = l.default_value() + m.default_value();
  PrimeMultiplicities::Exceptions sum;
  for (const auto& entry : l.exceptions()) sum[entry.first] = l.multiplicity(entry.first) + m.multiplicity(entry.first);
  for (const auto& entry : m.exceptions()) sum[entry.first] = l.multiplicity(entry.first) + m.multiplicity(entry.first);
  return SupernaturalProfile(std::move(sum), def);
}

bool profiles_bireducible(const SupernaturalProfile& p, const SupernaturalProfile& q) {
  return preceq(p, q) && preceq(q, p);
}

std::string to_string(const PrimeMultiplicities& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [prime, mult] : m.exceptions()) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(prime) + ":" + mult.str();
  }
  if (m.default_is_omega()) out += first ? "default=w" : "; default=w";
  out += "}";
  return out;
}

std::string to_string(const SupernaturalProfile& p) { return to_string(p.multiplicities()); }

}  // namespace solenoid
