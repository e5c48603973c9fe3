#include <doctest.h>

#include "support.hpp"
#include "vhcx/error.hpp"
#include "vhcx/local_actions.hpp"
#include "vhcx/perm_group.hpp"

using namespace vhcx;

namespace {

  Permutation cyc(std::string const& s, std::size_t d) {
    return Permutation::from_cycles(s, d);
  }

  PermGroup group(std::size_t d, std::vector<std::string> const& gens) {
    std::vector<Permutation> ps;
    for (auto const& g : gens) {
      ps.push_back(cyc(g, d));
    }
    return PermGroup(d, ps);
  }

  // Transitivity on ordered k-tuples by listing images of (0, ..., k-1).
  bool brute_k_transitive(PermGroup const& g, std::size_t k) {
    std::set<std::vector<point_type>> tuples;
    for (auto const& x : g.elements(1000000)) {
      std::vector<point_type> t;
      for (point_type i = 0; i < k; ++i) {
        t.push_back(x[i]);
      }
      tuples.insert(t);
    }
    std::size_t want = 1;
    for (std::size_t i = 0; i < k; ++i) {
      want *= g.degree() - i;
    }
    return tuples.size() == want;
  }

}  // namespace

TEST_CASE("cycle notation round trip") {
  auto p = cyc("(1,2)(4,5)(6,8,7)", 8);
  CHECK(p.to_cycles() == "(1,2)(4,5)(6,8,7)");
  CHECK(p[5] == 7);
  CHECK(Permutation::identity(4).to_cycles() == "()");
  CHECK((p * p.inverse()).is_identity());
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), Error);
  CHECK_THROWS_AS(Permutation::from_cycles("(1,9)", 8), Error);
}

TEST_CASE("right action composition") {
  auto p = cyc("(1,2)", 3);
  auto q = cyc("(2,3)", 3);
  // 1 -> 2 under p, then 2 -> 3 under q
  CHECK((p * q)[0] == 2);
}

TEST_CASE("orders") {
  CHECK(group(4, {"(1,2)", "(1,2,3,4)"}).order() == 24);
  CHECK(group(5, {"(1,2,3)", "(1,2,3,4,5)"}).order() == 60);
  CHECK(group(6, {"(1,2,3,4,5,6)"}).order() == 6);
  CHECK(group(3, {"()"}).order() == 1);

  auto s = test::corpus("sigma");
  CHECK(local_group(s, Side::vertical, 1).order() == 20160);
  CHECK(local_group(s, Side::horizontal, 1).order() == 95040);
}

TEST_CASE("k-transitivity") {
  auto m12 = local_group(test::corpus("sigma"), Side::horizontal, 1);
  CHECK(is_k_transitive(m12, 5));
  CHECK_FALSE(is_k_transitive(m12, 6));
  CHECK_FALSE(is_k_transitive(group(3, {"(1,2,3)"}), 2));

  auto a6 = group(6, {"(1,2,3)", "(2,3,4,5,6)"});
  REQUIRE(a6.order() == 360);
  CHECK(is_k_transitive(a6, 4));
  CHECK(brute_k_transitive(a6, 4));
  CHECK_FALSE(is_k_transitive(a6, 5));
  CHECK_FALSE(brute_k_transitive(a6, 5));
}

TEST_CASE("point stabilizers") {
  auto m12  = local_group(test::corpus("sigma"), Side::horizontal, 1);
  auto stab = point_stabilizer(m12, 0);
  CHECK(stab.order() == 7920);
  CHECK(recognize(stab).kind == GroupKind::mathieu11);

  CHECK(point_stabilizer(group(2, {"(1,2)"}), 0).is_trivial());

  auto a6 = local_group(test::corpus("lambda"), Side::vertical, 1);
  CHECK(point_stabilizer(a6, 0).order() == 60);
}

TEST_CASE("recognition") {
  CHECK(recognize(local_group(test::corpus("lambda"), Side::vertical, 1)).name() == "Alt(6)");
  CHECK(recognize(group(3, {"(1,2)", "(1,2,3)"})).name() == "Sym(3)");
  CHECK(recognize(local_group(test::corpus("sigma"), Side::horizontal, 1)).name() == "M12");
  CHECK(recognize(local_group(test::corpus("sigma"), Side::vertical, 1)).name() == "Alt(8)");
  CHECK(recognize(group(4, {"(2,3,4)"})).name() == "Alt(3)");
  CHECK(recognize(group(4, {"(1,2)(3,4)"})).kind == GroupKind::other);
  CHECK(recognize(group(5, {"(1,2,3,4,5)"})).kind == GroupKind::other);
}

TEST_CASE("simplicity") {
  auto m12 = local_group(test::corpus("sigma"), Side::horizontal, 1);
  CHECK(is_whitelisted_nonabelian_simple(point_stabilizer(m12, 0)).verdict
        == SimplicityVerdict::simple);
  CHECK(is_whitelisted_nonabelian_simple(group(6, {"(1,2,3,4,5,6)"})).verdict
        == SimplicityVerdict::not_simple);

  auto a4 = group(4, {"(1,2,3)", "(2,3,4)"});
  auto r  = is_whitelisted_nonabelian_simple(a4);
  CHECK(r.verdict == SimplicityVerdict::not_simple);

  auto b = brute_simplicity(a4);
  CHECK(b.verdict == SimplicityVerdict::not_simple);
  REQUIRE(b.witness.has_value());
  REQUIRE(b.witness_closure_order.has_value());
  CHECK(*b.witness_closure_order == 4);
  CHECK(normal_closure(a4, {*b.witness}).order() == 4);

  CHECK(brute_simplicity(group(5, {"(1,2,3)", "(1,2,3,4,5)"})).verdict
        == SimplicityVerdict::simple);
  CHECK(brute_simplicity(group(5, {"(1,2,3)", "(1,2,3,4,5)"}), 59).verdict
        == SimplicityVerdict::unknown);
  CHECK(brute_simplicity(group(5, {"(1,2)", "(1,2,3,4,5)"})).verdict
        == SimplicityVerdict::not_simple);
  CHECK(is_whitelisted_nonabelian_simple(group(5, {"(1,2)", "(1,2,3,4,5)"})).verdict
        == SimplicityVerdict::not_simple);
}

TEST_CASE("membership and elements") {
  auto a5 = group(5, {"(1,2,3)", "(1,2,3,4,5)"});
  CHECK(a5.contains(cyc("(1,2)(3,4)", 5)));
  CHECK_FALSE(a5.contains(cyc("(1,2)", 5)));
  auto els = a5.elements(100);
  CHECK(els.size() == 60);
  std::set<Permutation> distinct(els.begin(), els.end());
  CHECK(distinct.size() == 60);
  for (auto const& e : els) {
    CHECK(e.is_even());
  }
  CHECK_THROWS(a5.elements(10));
}
