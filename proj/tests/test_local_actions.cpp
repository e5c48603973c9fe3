#include <doctest.h>

#include "support.hpp"
#include "vhcx/error.hpp"
#include "vhcx/local_actions.hpp"

using namespace vhcx;

namespace {

  BigInt pow(BigInt b, unsigned e) {
    BigInt r = 1;
    while (e-- > 0) {
      r *= b;
    }
    return r;
  }

}  // namespace

TEST_CASE("vertical local permutation of a1 in lambda") {
  auto l = test::corpus("lambda");
  auto p = vertical_local_perm(l, hletter(1));
  CHECK(p.map(l, vletter(1)) == vletter(1));
  CHECK(p.map(l, vletter(2)) == vletter(3));
  CHECK(p.map(l, vletter(3)) == vletter(2));
  CHECK(p.map(l, vletter(1, true)) == vletter(1, true));
  CHECK(p.map(l, vletter(2, true)) == vletter(3, true));
  CHECK(p.map(l, vletter(3, true)) == vletter(2, true));
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(p.residual[i].side == Side::horizontal);
  }
}

TEST_CASE("commuting squares act trivially") {
  auto c = parse_complex("complex torus\nhorizontal a1\nvertical b1\nsquare a1 b1 a1^-1 b1^-1\n");
  REQUIRE(check_link(c).ok);
  CHECK(vertical_local_perm(c, hletter(1)).as_permutation(c).is_identity());
  CHECK(horizontal_local_perm(c, vletter(1)).as_permutation(c).is_identity());
  CHECK(local_group(c, Side::vertical, 2).is_trivial());
}

TEST_CASE("single-square corner rules in sigma") {
  auto s = test::corpus("sigma");
  CHECK(vertical_local_perm(s, hletter(6)).map(s, vletter(3)) == vletter(4));
  CHECK(horizontal_local_perm(s, vletter(4)).map(s, hletter(3)) == hletter(1, true));
  CHECK(horizontal_local_perm(test::corpus("lambda"), vletter(1)).map(
            test::corpus("lambda"), hletter(1))
        == hletter(1));
}

TEST_CASE("a missing corner is a structural error") {
  auto c = parse_complex("complex x\nhorizontal a1\nvertical b1\nsquare a1 b1 a1 b1\n");
  CHECK_THROWS_AS(vertical_local_perm(c, hletter(1, true)), StructureError);
}

TEST_CASE("sphere index") {
  SphereIndex s(8, 3);
  CHECK(s.size() == 8 * 7 * 7);
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s.index(s.word(i)) == i);
  }
  CHECK(s.word(0) == std::vector<std::size_t>{0, 0, 0});
  CHECK_THROWS(s.index({0, 4, 1}));
  CHECK(s.inverse_position(1) == 5);
}

TEST_CASE("depth one recovers the local permutation") {
  auto s = test::corpus("sigma");
  for (std::uint32_t i = 1; i <= s.m(); ++i) {
    CHECK(sphere_action(s, hletter(i), 1) == vertical_local_perm(s, hletter(i)).as_permutation(s));
  }
  CHECK_THROWS_AS(sphere_action(s, hletter(1), 0), StructureError);
  CHECK_THROWS_AS(sphere_action(s, hletter(1), 4), StructureError);
}

TEST_CASE("local group orders") {
  auto l = test::corpus("lambda");
  CHECK(local_group(l, Side::horizontal, 1).order() == 360);
  CHECK(local_group(l, Side::vertical, 1).order() == 360);
  CHECK(local_group(l, Side::vertical, 2).order() == 360 * boost::multiprecision::pow(BigInt(60), 6));

  auto s = test::corpus("sigma");
  CHECK(local_group(s, Side::vertical, 2).order() == 20160 * boost::multiprecision::pow(BigInt(2520), 8));

  for (auto name : {"lambda", "delta", "sigma"}) {
    auto c = test::corpus(name);
    for (auto side : {Side::horizontal, Side::vertical}) {
      auto g = local_group(c, side, 1);
      CHECK(factorial(static_cast<unsigned>(c.degree(side))) % g.order() == 0);
    }
  }
}

TEST_CASE("sphere labels") {
  auto l  = test::corpus("lambda");
  auto l1 = sphere_labels(l, Side::vertical, 1);
  REQUIRE(l1.size() == 6);
  CHECK(l1[0] == "b1");
  CHECK(l1[3] == "b1^-1");
  CHECK(sphere_labels(l, Side::vertical, 2).size() == 30);
}
