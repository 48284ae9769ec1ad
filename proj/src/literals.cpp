#include "solenoid/literals.hpp"

#include <cctype>
#include <limits>
#include <set>
#include <string>

#include "solenoid/error.hpp"

namespace solenoid {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[nodiscard]] std::size_t pos() const { return pos_; }

  [[nodiscard]] bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  [[nodiscard]] char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t u64() {
    const std::size_t start = (skip_ws(), pos_);
    const std::string d = digits();
    std::uint64_t value = 0;
    for (char c : d) {
      const auto digit = static_cast<std::uint64_t>(c - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        throw ParseError("number " + d + " does not fit in 64 bits", start);
      }
      value = value * 10 + digit;
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& message) {
    skip_ws();
    std::string near = pos_ < text_.size() ? "'" + std::string(text_.substr(pos_, 12)) + "'" : "end of input";
    throw ParseError(message + ", found " + near, pos_);
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Mult mult_value(Cursor& c) {
  if (c.accept("w")) return Mult::omega();
  return Mult(Natural(c.digits()));
}

Mult default_value(Cursor& c) {
  c.expect("default");
  c.expect("=");
  if (c.accept("w")) return Mult::omega();
  if (c.accept("0")) return Mult{};
  c.fail("default must be 0 or w");
}

SupernaturalProfile profile(Cursor& c) {
  const std::size_t start = (c.skip_ws(), c.pos());
  c.expect("{");
  PrimeMultiplicities::Exceptions ex;
  Mult def;
  if (c.peek() == 'd') {
    def = default_value(c);
  } else if (c.peek() != '}') {
    while (true) {
      const std::size_t key_pos = (c.skip_ws(), c.pos());
      const std::uint64_t prime = c.u64();
      if (!is_prime(prime)) throw ParseError("profile key " + std::to_string(prime) + " is not prime", key_pos);
      if (ex.count(prime) != 0) throw ParseError("duplicate profile key " + std::to_string(prime), key_pos);
      c.expect(":");
      ex.emplace(prime, mult_value(c));
      if (!c.accept(",")) break;
    }
    if (c.accept(";")) def = default_value(c);
  }
  c.expect("}");
  try {
    return SupernaturalProfile(std::move(ex), std::move(def));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), start);
  }
}

std::vector<std::uint64_t> sequence_entries(Cursor& c) {
  std::vector<std::uint64_t> out;
  const char next = c.peek();
  if (next == '|' || next == ']') return out;
  while (true) {
    const std::size_t at = (c.skip_ws(), c.pos());
    const std::uint64_t value = c.u64();
    if (value <= 1) throw ParseError("sequence entries must be greater than 1, got " + std::to_string(value), at);
    out.push_back(value);
    if (!c.accept(",")) return out;
  }
}

IntSeqSpec sequence(Cursor& c) {
  c.expect("[");
  IntSeqSpec s;
  s.prefix = sequence_entries(c);
  c.expect("|");
  const std::size_t tail_pos = (c.skip_ws(), c.pos());
  s.tail = sequence_entries(c);
  if (s.tail.empty()) throw ParseError("sequence tail must be nonempty", tail_pos);
  c.expect("]");
  return s;
}

RawGroup group(Cursor& c);

RawGroup atom(Cursor& c) {
  if (c.accept("Sol")) return RawGroup::solenoid(profile(c));
  if (c.accept("S")) return RawGroup::int_sequence(sequence(c));
  if (c.accept("R")) return RawGroup::real();
  if (c.accept("T")) return RawGroup::torus();
  if (c.accept("1")) return RawGroup::trivial();
  if (c.accept("(")) {
    RawGroup inner = group(c);
    c.expect(")");
    return inner;
  }
  c.fail("expected a group atom (R, T, 1, Sol{...}, S[...], or parenthesized group)");
}

RawGroup term(Cursor& c) {
  RawGroup base = atom(c);
  if (!c.accept("^")) return base;
  const std::uint64_t exponent = c.u64();
  if (exponent > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) c.fail("exponent too large");
  return RawGroup::power(std::move(base), static_cast<std::int64_t>(exponent));
}

RawGroup group(Cursor& c) {
  std::vector<RawGroup> terms;
  terms.push_back(term(c));
  while (c.accept("x") || c.accept("*")) terms.push_back(term(c));
  if (terms.size() == 1) return std::move(terms.front());
  return RawGroup::product(std::move(terms));
}

std::vector<std::uint64_t> nat_list(Cursor& c, char terminator) {
  std::vector<std::uint64_t> out;
  std::set<std::uint64_t> seen;
  const char next = c.peek();
  if (next == terminator || next == ';') return out;
  while (true) {
    const std::size_t at = (c.skip_ws(), c.pos());
    const std::uint64_t n = c.u64();
    if (n > 1'000'000) throw ParseError("set element " + std::to_string(n) + " too large (limit 1000000)", at);
    if (!seen.insert(n).second) throw ParseError("duplicate element " + std::to_string(n), at);
    out.push_back(n);
    if (!c.accept(",")) return out;
  }
}

poset::UPSet upset(Cursor& c) {
  const std::size_t start = (c.skip_ws(), c.pos());
  try {
    if (c.accept("fin{")) {
      auto members = nat_list(c, '}');
      c.expect("}");
      return poset::UPSet::finite(members);
    }
    if (c.accept("cofin{")) {
      auto missing = nat_list(c, '}');
      c.expect("}");
      return poset::UPSet::cofinite(missing);
    }
    if (!c.accept("ups{")) c.fail("expected fin{...}, cofin{...} or ups{...}");
    std::vector<std::uint64_t> except;
    std::optional<std::uint64_t> from;
    std::optional<std::uint64_t> period;
    std::optional<std::vector<bool>> word;
    std::set<std::string> seen;
    do {
      const std::size_t field_pos = (c.skip_ws(), c.pos());
      std::string key;
      for (const char* k : {"except", "from", "period", "word"}) {
        if (c.accept(k)) {
          key = k;
          break;
        }
      }
      if (key.empty()) c.fail("expected one of except=, from=, period=, word=");
      if (!seen.insert(key).second) throw ParseError("duplicate field " + key, field_pos);
      c.expect("=");
      if (key == "except") {
        except = nat_list(c, '}');
      } else if (key == "from") {
        from = c.u64();
        if (*from > 1'000'000) throw ParseError("from too large (limit 1000000)", field_pos);
      } else if (key == "period") {
        period = c.u64();
        if (*period == 0 || *period > 10'000) throw ParseError("period must be in 1..10000", field_pos);
      } else {
        const std::string bits = c.digits();
        word.emplace();
        for (char b : bits) {
          if (b != '0' && b != '1') throw ParseError("word must be a string of 0/1 bits", field_pos);
          word->push_back(b == '1');
        }
      }
    } while (c.accept(";"));
    c.expect("}");
    if (!period || !word) throw ParseError("ups{...} needs period= and word=", start);
    if (word->size() != *period) {
      throw ParseError("word length " + std::to_string(word->size()) + " differs from period " + std::to_string(*period),
                       start);
    }
    return poset::UPSet::general(except, static_cast<std::size_t>(from.value_or(0)), *word);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), start);
  }
}

}  // namespace

SupernaturalProfile parse_profile(std::string_view text) {
  Cursor c(text);
  auto p = profile(c);
  c.finish();
  return p;
}

IntSeqSpec parse_sequence(std::string_view text) {
  Cursor c(text);
  auto s = sequence(c);
  c.finish();
  return s;
}

RawGroup parse_raw_group(std::string_view text) {
  Cursor c(text);
  auto g = group(c);
  c.finish();
  return g;
}

GroupExpr parse_group(std::string_view text) {
  const RawGroup raw = parse_raw_group(text);
  try {
    return normalize_group(raw);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

poset::UPSet parse_upset(std::string_view text) {
  Cursor c(text);
  auto s = upset(c);
  c.finish();
  return s;
}

}  // namespace solenoid
