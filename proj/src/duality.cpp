#include "solenoid/duality.hpp"

#include <stdexcept>

#include "solenoid/error.hpp"

namespace solenoid {
namespace {

bool match_from(std::size_t i, const std::vector<std::vector<std::size_t>>& adj, std::vector<bool>& seen,
                std::vector<std::optional<std::size_t>>& owner) {
  for (std::size_t j : adj[i]) {
    if (seen[j]) continue;
    seen[j] = true;
    if (!owner[j] || match_from(*owner[j], adj, seen, owner)) {
      owner[j] = i;
      return true;
    }
  }
  return false;
}

}  // namespace

const SupernaturalProfile& RationalType::profile() const {
  if (!profile_) throw std::logic_error("RationalType::profile() on Z");
  return *profile_;
}

PrimeMultiplicities RationalType::multiplicities() const {
  return profile_ ? profile_->multiplicities() : PrimeMultiplicities{};
}

DualExpr dual(const GroupExpr& g) {
  DualExpr d;
  for (const Atom& a : g.factors) {
    switch (a.kind()) {
      case AtomKind::Real:
        d.factors.emplace_back(RealLine{});
        break;
      case AtomKind::Torus:
        d.factors.emplace_back(RationalType::integers());
        break;
      case AtomKind::Solenoid:
        d.factors.emplace_back(RationalType::of(a.profile()));
        break;
    }
  }
  return d;
}

Atom predual(const DualComponent& c) {
  if (std::holds_alternative<RealLine>(c)) return Atom::real();
  const auto& t = std::get<RationalType>(c);
  return t.is_integers() ? Atom::torus() : Atom::solenoid(t.profile());
}

std::size_t rank(const DualExpr& d) {
  for (const auto& c : d.factors) {
    if (std::holds_alternative<RealLine>(c)) throw DomainError("rank is defined here for duals of compact groups only");
  }
  return d.factors.size();
}

bool hom_nonzero_exists(const RationalType& a, const RationalType& b) {
  return !deficit(a.multiplicities(), b.multiplicities()).is_omega();
}

bool dual_reduces(const GroupExpr& g, const GroupExpr& h) {
  if (!is_compact(g)) throw DomainError("dual path needs a compact source group; " + to_string(g) + " has an R factor");
  if (!is_compact(h)) throw DomainError("dual path is restricted to compact targets; " + to_string(h) + " has an R factor");
  const DualExpr dg = dual(g);
  const DualExpr dh = dual(h);

  // adj[i]: components j of ĥ with a nonzero hom ĥ_j → ĝ_i.
  std::vector<std::vector<std::size_t>> adj(dg.factors.size());
  for (std::size_t i = 0; i < dg.factors.size(); ++i) {
    const auto& target = std::get<RationalType>(dg.factors[i]);
    for (std::size_t j = 0; j < dh.factors.size(); ++j) {
      if (hom_nonzero_exists(std::get<RationalType>(dh.factors[j]), target)) adj[i].push_back(j);
    }
  }
  std::vector<std::optional<std::size_t>> owner(dh.factors.size());
  for (std::size_t i = 0; i < adj.size(); ++i) {
    std::vector<bool> seen(dh.factors.size(), false);
    if (!match_from(i, adj, seen, owner)) return false;
  }
  return true;
}

std::string to_string(const DualComponent& c) {
  if (std::holds_alternative<RealLine>(c)) return "R";
  const auto& t = std::get<RationalType>(c);
  if (t.is_integers()) return "Z";
  if (t.profile() == SupernaturalProfile::all_omega()) return "Q";
  return "Q" + to_string(t.profile());
}

std::string to_string(const DualExpr& d) {
  if (d.factors.empty()) return "0";
  std::string out;
  for (const auto& c : d.factors) {
    if (!out.empty()) out += " x ";
    out += to_string(c);
  }
  return out;
}

}  // namespace solenoid
