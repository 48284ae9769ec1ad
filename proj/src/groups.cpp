#include "solenoid/groups.hpp"

#include <stdexcept>

#include "solenoid/error.hpp"

namespace solenoid {

const SupernaturalProfile& Atom::profile() const {
  if (!profile_) throw std::logic_error("Atom::profile() on a non-solenoid atom");
  return *profile_;
}

GroupExpr product(const GroupExpr& g, const GroupExpr& h) {
  GroupExpr out = g;
  out.factors.insert(out.factors.end(), h.factors.begin(), h.factors.end());
  return out;
}

namespace {

RawGroup of_kind(RawGroup::Kind kind) {
  RawGroup out;
  out.kind = kind;
  return out;
}

}  // namespace

RawGroup RawGroup::real() { return of_kind(Kind::Real); }
RawGroup RawGroup::torus() { return of_kind(Kind::Torus); }
RawGroup RawGroup::trivial() { return of_kind(Kind::Trivial); }

RawGroup RawGroup::solenoid(SupernaturalProfile profile) {
  RawGroup out = of_kind(Kind::Solenoid);
  out.profile = std::move(profile);
  return out;
}

RawGroup RawGroup::int_sequence(IntSeqSpec seq) {
  RawGroup out = of_kind(Kind::IntSequence);
  out.sequence = std::move(seq);
  return out;
}

RawGroup RawGroup::product(std::vector<RawGroup> terms) {
  RawGroup out = of_kind(Kind::Product);
  out.children = std::move(terms);
  return out;
}

RawGroup RawGroup::power(RawGroup base, std::int64_t exponent) {
  RawGroup out = of_kind(Kind::Power);
  out.exponent = exponent;
  out.children.push_back(std::move(base));
  return out;
}

namespace {

constexpr std::uint64_t kMaxFactors = 100000;

void flatten(const RawGroup& raw, std::vector<Atom>& out) {
  switch (raw.kind) {
    case RawGroup::Kind::Real:
      out.push_back(Atom::real());
      return;
    case RawGroup::Kind::Torus:
      out.push_back(Atom::torus());
      return;
    case RawGroup::Kind::Trivial:
      return;
    case RawGroup::Kind::Solenoid:
      out.push_back(Atom::solenoid(*raw.profile));
      return;
    case RawGroup::Kind::IntSequence:
      out.push_back(Atom::solenoid(profile_from_sequence(factor_sequence(raw.sequence))));
      return;
    case RawGroup::Kind::Product:
      for (const auto& child : raw.children) flatten(child, out);
      if (out.size() > kMaxFactors) throw DomainError("product has more than " + std::to_string(kMaxFactors) + " factors");
      return;
    case RawGroup::Kind::Power: {
      if (raw.exponent < 0) throw DomainError("negative exponent " + std::to_string(raw.exponent));
      std::vector<Atom> base;
      flatten(raw.children.at(0), base);
      if (!base.empty() && static_cast<std::uint64_t>(raw.exponent) > kMaxFactors / base.size()) {
        throw DomainError("power expands to more than " + std::to_string(kMaxFactors) + " factors");
      }
      for (std::int64_t i = 0; i < raw.exponent; ++i) out.insert(out.end(), base.begin(), base.end());
      return;
    }
  }
}

}  // namespace

GroupExpr normalize_group(const RawGroup& raw) {
  GroupExpr g;
  flatten(raw, g.factors);
  return g;
}

RawGroup to_raw(const GroupExpr& g) {
  std::vector<RawGroup> terms;
  for (const Atom& a : g.factors) {
    switch (a.kind()) {
      case AtomKind::Real:
        terms.push_back(RawGroup::real());
        break;
      case AtomKind::Torus:
        terms.push_back(RawGroup::torus());
        break;
      case AtomKind::Solenoid:
        terms.push_back(RawGroup::solenoid(a.profile()));
        break;
    }
  }
  return RawGroup::product(std::move(terms));
}

std::size_t dimension(const GroupExpr& g) noexcept { return g.size(); }

bool is_compact(const GroupExpr& g) noexcept {
  for (const Atom& a : g.factors) {
    if (a.is_real()) return false;
  }
  return true;
}

std::string to_string(const Atom& a) {
  switch (a.kind()) {
    case AtomKind::Real:
      return "R";
    case AtomKind::Torus:
      return "T";
    case AtomKind::Solenoid:
      return "Sol" + to_string(a.profile());
  }
  return {};
}

std::string to_string(const GroupExpr& g) {
  if (g.trivial()) return "1";
  std::string out;
  for (std::size_t i = 0; i < g.size();) {
    std::size_t run = 1;
    while (i + run < g.size() && g[i + run] == g[i]) ++run;
    if (!out.empty()) out += " x ";
    out += to_string(g[i]);
    if (run > 1) out += "^" + std::to_string(run);
    i += run;
  }
  return out;
}

}  // namespace solenoid
