#include <doctest.h>

#include "support.hpp"
#include "vhcx/certificates.hpp"
#include "vhcx/error.hpp"

using namespace vhcx;

namespace {

  BigInt fact(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) {
      r *= i;
    }
    return r;
  }

  SquareComplex torus() {
    return parse_complex("complex torus\nhorizontal a1\nvertical b1\nsquare a1 b1 a1^-1 b1^-1\n");
  }

  Certificate sigma_cert(bool nrf, CertificateOptions const& opts = {}) {
    auto s = test::corpus("sigma");
    auto p = presentation_from_complex(s);
    return simplicity_certificate(s, parse_word("a2*a1^-1*a3*a4^-1", p.generators()), nrf,
                                  opts);
  }

  Verdict verdict_of(Certificate const& c, std::string const& step) {
    for (auto const& s : c.steps) {
      if (s.name == step) {
        return s.verdict;
      }
    }
    FAIL("no step " << step);
    return Verdict::skipped;
  }

}  // namespace

TEST_CASE("irreducibility targets") {
  for (unsigned n = 2; n <= 6; ++n) {
    BigInt want = fact(2 * n) / 2;
    for (unsigned i = 0; i < 2 * n; ++i) {
      want *= fact(2 * n - 1) / 2;
    }
    CHECK(irreducibility_target(n) == want);
  }
  CHECK(irreducibility_target(3) == BigInt(360) * BigInt(60) * 60 * 60 * 60 * 60 * 60);
}

TEST_CASE("irreducibility") {
  auto l = irreducibility_check(test::corpus("lambda"));
  CHECK(l.verdict == Verdict::pass);
  CHECK(l.order == l.target);

  auto s = irreducibility_check(test::corpus("sigma"));
  CHECK(s.verdict == Verdict::pass);
  CHECK(s.sphere1->name() == "Alt(8)");

  auto t = irreducibility_check(torus());
  CHECK(t.verdict == Verdict::criterion_inapplicable);
  CHECK(t.reason == "n < 3");

  CHECK(irreducibility_check(test::corpus("delta")).verdict == Verdict::criterion_inapplicable);
}

TEST_CASE("normal subgroup theorem hypotheses") {
  auto s = nst_check(test::corpus("sigma"));
  CHECK(s.verdict == Verdict::pass);
  REQUIRE(s.sides.size() == 2);
  CHECK(s.sides[0].group.name() == "M12");
  CHECK(s.sides[0].stabilizer.name() == "M11");
  CHECK(s.sides[1].group.name() == "Alt(8)");
  CHECK(s.sides[1].stabilizer.name() == "Alt(7)");

  auto l = nst_check(test::corpus("lambda"));
  CHECK(l.verdict == Verdict::pass);
  for (auto const& h : l.sides) {
    CHECK(h.stabilizer.order == 60);
    CHECK(h.stabilizer_simple.verdict == SimplicityVerdict::simple);
  }

  auto t = nst_check(torus());
  CHECK(t.verdict == Verdict::fail);
  CHECK(t.reason.find("2-transitive") != std::string::npos);
}

TEST_CASE("simplicity certificate for sigma") {
  auto c = sigma_cert(true);
  CHECK(c.simple);
  CHECK(c.conclusion == conclusion_gamma0);
  CHECK(c.assumptions == std::vector<std::string>{assumption_nrf});
  CHECK_FALSE(c.failing_step().has_value());
  for (auto const& s : c.steps) {
    CHECK(s.verdict == Verdict::pass);
    CHECK_FALSE(s.citation.empty());
  }
  REQUIRE(c.index.has_value());
  auto const& id = c.steps.back().values;
  CHECK(*c.index == 4);
  CHECK(id["quotient_order"] == 4);
  CHECK(id["parity_kernel_index"] == 4);

  auto j = c.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) {
    keys.push_back(it.key());
  }
  CHECK(keys == std::vector<std::string>{"complex", "steps", "assumptions", "conclusion"});
}

TEST_CASE("without the acknowledgement there is no simplicity conclusion") {
  auto c = sigma_cert(false);
  CHECK_FALSE(c.simple);
  CHECK(c.assumptions.empty());
  CHECK(c.conclusion.find("simple") == std::string::npos);
  CHECK(c.conclusion.find(conclusion_nst) == 0);
}

TEST_CASE("lambda gets the normal subgroup conclusion only") {
  auto l = test::corpus("lambda");
  auto p = presentation_from_complex(l);
  auto c = simplicity_certificate(l, parse_word("a1*a2", p.generators()), true);
  CHECK_FALSE(c.simple);
  CHECK(verdict_of(c, "check_subcomplex") == Verdict::criterion_inapplicable);
  CHECK(verdict_of(c, "nst_check") == Verdict::pass);
  CHECK(c.conclusion.find(conclusion_nst) == 0);
  CHECK(c.assumptions.empty());
}

TEST_CASE("fault injection weakens the conclusion") {
  SUBCASE("missing square") {
    auto s  = test::corpus("sigma");
    auto sq = s.squares();
    sq.pop_back();
    SquareComplex broken("sigma", s.names(Side::horizontal), s.names(Side::vertical), sq);
    auto          p = presentation_from_complex(broken);
    auto c = simplicity_certificate(broken, parse_word("a2*a1^-1*a3*a4^-1", p.generators()), true);
    CHECK_FALSE(c.simple);
    CHECK(c.failing_step()->name == "check_link");
    CHECK(verdict_of(c, "nst_check") == Verdict::skipped);
  }
  SUBCASE("wrong embedded generators") {
    CertificateOptions o;
    o.delta_horizontal = {1, 2, 3};
    auto c             = sigma_cert(true, o);
    CHECK_FALSE(c.simple);
    CHECK(c.failing_step()->name == "check_subcomplex");
  }
  SUBCASE("coset cap") {
    CertificateOptions o;
    o.enumeration.cap = 3;
    auto c            = sigma_cert(true, o);
    CHECK_FALSE(c.simple);
    CHECK(c.failing_step()->verdict == Verdict::exhausted);
    CHECK(c.conclusion.rfind("none", 0) == 0);
  }
  SUBCASE("word outside the parity kernel") {
    auto s = test::corpus("sigma");
    auto p = presentation_from_complex(s);
    auto c = simplicity_certificate(s, parse_word("a1", p.generators()), true);
    CHECK(verdict_of(c, "identification") == Verdict::criterion_inapplicable);
    CHECK(c.conclusion != conclusion_gamma0);
    CHECK(c.conclusion.find("index 2") != std::string::npos);
  }
}

TEST_CASE("amalgam ranks") {
  using D = AmalgamDecomposition;
  CHECK(amalgam_ranks(6, 4) == std::pair{D{7, 73, 12}, D{11, 81, 8}});
  auto [a, b] = amalgam_ranks(175, 109);
  CHECK(a == D{217, 75601, 350});
  CHECK(b == D{349, 75865, 218});
  auto [c, d] = amalgam_ranks(3960, 24);
  CHECK(c == D{47, 364321, 7920});
  CHECK(d == D{7919, 380065, 48});
  for (std::uint64_t m = 1; m <= 50; ++m) {
    for (std::uint64_t n = 1; n <= 50; ++n) {
      auto [x, y] = amalgam_ranks(m, n);
      CHECK(amalgam_euler_consistent(x, m, n));
      CHECK(amalgam_euler_consistent(y, m, n));
    }
  }
  CHECK_FALSE(amalgam_euler_consistent(D{7, 74, 12}, 6, 4));
  CHECK_THROWS_AS(amalgam_ranks(0, 3), Error);
}
