#include "solenoid/reducibility.hpp"

#include <algorithm>
#include <set>

namespace solenoid {
namespace {

Rule rule_for(const Atom& a) {
  switch (a.kind()) {
    case AtomKind::Real:
      return Rule::RAny;
    case AtomKind::Torus:
      return Rule::TorusTorus;
    case AtomKind::Solenoid:
      break;
  }
  return Rule::SolTorus;
}

EdgeWitness make_witness(const GroupExpr& g, const GroupExpr& h, std::size_t i, std::size_t j) {
  EdgeWitness w{.left = i, .right = j, .reason = rule_for(g[i]), .deficit = {}};
  if (g[i].is_solenoid() && h[j].is_solenoid()) {
    w.reason = Rule::SolSol;
    w.deficit = deficit_table(h[j].profile().multiplicities(), g[i].profile().multiplicities());
  }
  return w;
}

// Kuhn's augmenting path search from `left`. A free neighbour is taken
// before any rematching, so factors line up position by position when they can.
bool augment(std::size_t left, const std::vector<std::vector<std::size_t>>& adj, std::vector<bool>& seen,
             std::vector<std::optional<std::size_t>>& match_right) {
  for (std::size_t right : adj[left]) {
    if (!seen[right] && !match_right[right]) {
      seen[right] = true;
      match_right[right] = left;
      return true;
    }
  }
  for (std::size_t right : adj[left]) {
    if (seen[right]) continue;
    seen[right] = true;
    if (!match_right[right] || augment(*match_right[right], adj, seen, match_right)) {
      match_right[right] = left;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> neighbourhood(const GroupExpr& g, const GroupExpr& h, const std::vector<std::size_t>& k) {
  std::set<std::size_t> nk;
  for (std::size_t i : k) {
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (atom_reduces(g[i], h[j])) nk.insert(j);
    }
  }
  return {nk.begin(), nk.end()};
}

}  // namespace

std::string to_string(Rule r) {
  switch (r) {
    case Rule::RAny:
      return "R_ANY";
    case Rule::TorusTorus:
      return "T_T";
    case Rule::SolTorus:
      return "SOL_T";
    case Rule::SolSol:
      return "SOL_SOL";
  }
  return {};
}

std::optional<Rule> rule_from_string(const std::string& name) {
  for (Rule r : {Rule::RAny, Rule::TorusTorus, Rule::SolTorus, Rule::SolSol}) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::Equivalent:
      return "EQUIVALENT";
    case Comparison::LeftStrict:
      return "LEFT_STRICT";
    case Comparison::RightStrict:
      return "RIGHT_STRICT";
    case Comparison::Incomparable:
      return "INCOMPARABLE";
  }
  return {};
}

bool atom_reduces(const Atom& a, const Atom& b) {
  switch (a.kind()) {
    case AtomKind::Real:
      return true;
    case AtomKind::Torus:
      return b.is_torus();
    case AtomKind::Solenoid:
      if (b.is_torus()) return true;
      if (b.is_real()) return false;
      return preceq(b.profile(), a.profile());
  }
  return false;
}

Verdict reduces(const GroupExpr& g, const GroupExpr& h) {
  std::vector<std::vector<std::size_t>> adj(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (atom_reduces(g[i], h[j])) adj[i].push_back(j);
    }
  }

  std::vector<std::optional<std::size_t>> match_right(h.size());
  std::vector<bool> matched_left(g.size(), false);
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::vector<bool> seen(h.size(), false);
    matched_left[i] = augment(i, adj, seen, match_right);
  }

  Verdict v;
  v.reducible = std::all_of(matched_left.begin(), matched_left.end(), [](bool b) { return b; });
  if (v.reducible) {
    std::vector<std::size_t> theta(g.size());
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (match_right[j]) theta[*match_right[j]] = j;
    }
    for (std::size_t i = 0; i < g.size(); ++i) v.certificate.push_back(make_witness(g, h, i, theta[i]));
    return v;
  }

  // Alternating-path forest from the unmatched left vertices. With a maximum
  // matching every right vertex reached is matched, so |N(K)| = |K| − #roots.
  std::vector<bool> in_k(g.size(), false);
  std::vector<bool> in_nk(h.size(), false);
  std::vector<std::size_t> frontier;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!matched_left[i]) {
      in_k[i] = true;
      frontier.push_back(i);
    }
  }
  while (!frontier.empty()) {
    const std::size_t i = frontier.back();
    frontier.pop_back();
    for (std::size_t j : adj[i]) {
      if (in_nk[j]) continue;
      in_nk[j] = true;
      if (match_right[j] && !in_k[*match_right[j]]) {
        in_k[*match_right[j]] = true;
        frontier.push_back(*match_right[j]);
      }
    }
  }
  HallViolator violator;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (in_k[i]) violator.k.push_back(i);
  }
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (in_nk[j]) violator.nk.push_back(j);
  }
  v.violator = std::move(violator);
  return v;
}

bool rt_closed_form(std::size_t c0, std::size_t e0, std::size_t c1, std::size_t e1) noexcept {
  return e0 <= e1 && c0 + e0 <= c1 + e1;
}

Comparison compare(const GroupExpr& g, const GroupExpr& h) {
  const bool forward = reduces(g, h).reducible;
  const bool backward = reduces(h, g).reducible;
  if (forward && backward) return Comparison::Equivalent;
  if (forward) return Comparison::LeftStrict;
  if (backward) return Comparison::RightStrict;
  return Comparison::Incomparable;
}

bool verify_certificate(const GroupExpr& g, const GroupExpr& h, const Verdict& v) {
  if (v.reducible) {
    if (v.violator || v.certificate.size() != g.size()) return false;
    std::vector<bool> left_seen(g.size(), false);
    std::vector<bool> right_used(h.size(), false);
    for (const EdgeWitness& e : v.certificate) {
      if (e.left >= g.size() || e.right >= h.size()) return false;
      if (left_seen[e.left] || right_used[e.right]) return false;
      left_seen[e.left] = true;
      right_used[e.right] = true;

      const Atom& a = g[e.left];
      const Atom& b = h[e.right];
      switch (e.reason) {
        case Rule::RAny:
          if (!a.is_real()) return false;
          break;
        case Rule::TorusTorus:
          if (!a.is_torus() || !b.is_torus()) return false;
          break;
        case Rule::SolTorus:
          if (!a.is_solenoid() || !b.is_torus()) return false;
          break;
        case Rule::SolSol: {
          if (!a.is_solenoid() || !b.is_solenoid()) return false;
          const DeficitTable fresh = deficit_table(b.profile().multiplicities(), a.profile().multiplicities());
          if (fresh != e.deficit || fresh.total.is_omega()) return false;
          break;
        }
      }
      if (e.reason != Rule::SolSol && e.deficit != DeficitTable{}) return false;
    }
    return true;
  }

  if (!v.certificate.empty() || !v.violator) return false;
  const HallViolator& hv = *v.violator;
  if (hv.k.empty()) return false;
  std::set<std::size_t> k_set(hv.k.begin(), hv.k.end());
  if (k_set.size() != hv.k.size() || *k_set.rbegin() >= g.size()) return false;
  std::set<std::size_t> nk_set(hv.nk.begin(), hv.nk.end());
  if (nk_set.size() != hv.nk.size()) return false;
  const auto expected = neighbourhood(g, h, hv.k);
  if (std::vector<std::size_t>(nk_set.begin(), nk_set.end()) != expected) return false;
  return expected.size() < hv.k.size();
}

}  // namespace solenoid
