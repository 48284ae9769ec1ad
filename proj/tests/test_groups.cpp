#include "doctest.h"
#include "solenoid/error.hpp"
#include "solenoid/groups.hpp"
#include "solenoid/literals.hpp"
#include "solenoid/verify/generators.hpp"

using namespace solenoid;

namespace {

Atom sol(const char* text) { return Atom::solenoid(parse_profile(text)); }

}  // namespace

TEST_CASE("normalize examples") {
  CHECK(parse_group("R^2 x T") == GroupExpr{{Atom::real(), Atom::real(), Atom::torus()}});
  CHECK(parse_group("S[4,6,8|9]") == GroupExpr{{sol("{2:6, 3:w}")}});
  CHECK(parse_group("(R x T)^2 x Sol{2:w}") ==
        GroupExpr{{Atom::real(), Atom::torus(), Atom::real(), Atom::torus(), sol("{2:w}")}});
  CHECK(parse_group("T^0 x R") == GroupExpr{{Atom::real()}});
  CHECK(parse_group("1").trivial());
  CHECK(parse_group("1 x 1^3").trivial());
  CHECK(parse_group("R * T") == parse_group("R x T"));
}

TEST_CASE("normalize_group on raw trees") {
  const RawGroup raw = RawGroup::product(
      {RawGroup::power(RawGroup::product({RawGroup::real(), RawGroup::torus()}), 2), RawGroup::trivial(),
       RawGroup::int_sequence(IntSeqSpec{{4, 6, 8}, {9}})});
  CHECK(normalize_group(raw) == parse_group("R x T x R x T x Sol{2:6, 3:w}"));
  CHECK_THROWS_AS((void)normalize_group(RawGroup::power(RawGroup::torus(), -1)), DomainError);
  CHECK_THROWS_AS((void)normalize_group(RawGroup::int_sequence(IntSeqSpec{{1}, {2}})), DomainError);
  CHECK_THROWS_AS((void)normalize_group(RawGroup::power(RawGroup::power(RawGroup::torus(), 1000), 1000)),
                  DomainError);
}

TEST_CASE("dimension and compactness") {
  CHECK(dimension(GroupExpr{}) == 0);
  CHECK(dimension(GroupExpr{{sol("{2:w}")}}) == 1);
  CHECK(dimension(parse_group("R^2 x T x Sol{2:w}")) == 4);
  CHECK(is_compact(parse_group("T x Sol{2:w}")));
  CHECK_FALSE(is_compact(parse_group("R")));
  CHECK(is_compact(GroupExpr{}));
}

TEST_CASE("rendering") {
  CHECK(to_string(parse_group("R x R x T x R")) == "R^2 x T x R");
  CHECK(to_string(GroupExpr{}) == "1");
  CHECK(to_string(parse_group("Sol{3:w, 2:6} ^ 2")) == "Sol{2:6, 3:w}^2");
  CHECK(to_string(parse_group("Sol{default=w}")) == "Sol{default=w}");
}

TEST_CASE("normalize is idempotent and round-trips") {
  verify::Gen gen(201);
  for (int i = 0; i < 500; ++i) {
    const GroupExpr g = gen.group(7);
    CHECK(normalize_group(to_raw(g)) == g);
    const GroupExpr again = parse_group(to_string(g));
    CAPTURE(to_string(g));
    CHECK(again == g);
    CHECK(normalize_group(to_raw(again)) == again);
  }
}

TEST_CASE("dimension is additive") {
  verify::Gen gen(202);
  for (int i = 0; i < 300; ++i) {
    const GroupExpr g = gen.group(5);
    const GroupExpr h = gen.group(5);
    CHECK(dimension(product(g, h)) == dimension(g) + dimension(h));
    CHECK(is_compact(product(g, h)) == (is_compact(g) && is_compact(h)));
  }
}
