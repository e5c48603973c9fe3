#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"
#include "vhcx/error.hpp"
#include "vhcx/fpgroup.hpp"
#include "vhcx/smith.hpp"
#include "vhcx/word.hpp"

using namespace vhcx;
using test::Mat;
using test::minor_gcd;

namespace {

  Mat exponent_matrix(Presentation const& p) {
    Mat m(p.num_relators(), std::vector<long long>(p.num_generators(), 0));
    for (std::size_t i = 0; i < p.num_relators(); ++i) {
      for (auto x : p.relators()[i].letters()) {
        m[i][Word::generator_of(x)] += x > 0 ? 1 : -1;
      }
    }
    return m;
  }

  std::size_t rank_mod(Mat m, long long p) {
    std::size_t rank = 0;
    auto        R = m.size(), C = m[0].size();
    for (auto& row : m) {
      for (auto& x : row) {
        x = ((x % p) + p) % p;
      }
    }
    for (std::size_t c = 0; c < C && rank < R; ++c) {
      std::size_t piv = rank;
      while (piv < R && m[piv][c] == 0) {
        ++piv;
      }
      if (piv == R) {
        continue;
      }
      std::swap(m[piv], m[rank]);
      long long inv = 1;
      while ((m[rank][c] * inv) % p != 1) {
        ++inv;
      }
      for (std::size_t i = 0; i < R; ++i) {
        if (i != rank && m[i][c] != 0) {
          auto f = (m[i][c] * inv) % p;
          for (std::size_t j = 0; j < C; ++j) {
            m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
          }
        }
      }
      ++rank;
    }
    return rank;
  }

  bool unimodular(IntMatrix const& m) {
    auto d = m.determinant();
    return d == 1 || d == -1;
  }

}  // namespace

TEST_CASE("words are freely reduced") {
  CHECK(Word{1, 2, -2, -1}.empty());
  CHECK(Word{1, 2, -2, 3}.length() == 2);
  Word w{1, -2, 3};
  CHECK((w * w.inverse()).empty());
  CHECK(Word{-1, 2, 1}.cyclically_reduced() == Word{2});
  CHECK(Word{1, 2, 3}.rotated(1) == Word{2, 3, 1});
  CHECK(Word{1, 1, -2}.exponent_sum(0) == 2);
  CHECK(Word{1, 1, -2}.exponent_sum(1) == -1);
  auto r = free_reduce({1, 2, -2, -1, 3});
  CHECK(r == std::vector<Word::letter_type>{3});
  CHECK(free_reduce(r) == r);
}

TEST_CASE("word syntax") {
  std::vector<std::string> names{"a1", "a2", "a3", "a4"};
  auto                     w = parse_word("a2*a1^-1*a3*a4^-1", names);
  CHECK(w == Word{2, -1, 3, -4});
  CHECK(format_word(w, names) == "a2*a1^-1*a3*a4^-1");
  CHECK(parse_word("a1^3", names) == Word{1, 1, 1});
  CHECK(parse_word("a1^-2", names) == Word{-1, -1});
  CHECK(parse_word("", names).empty());
  CHECK(parse_word("1", names).empty());
  CHECK(format_word(Word{}, names) == "1");
  CHECK_THROWS_AS(parse_word("a9", names), ParseError);
  CHECK_THROWS_AS(parse_word("a1^", names), ParseError);
  CHECK_THROWS_AS(parse_word("a1**a2", names), ParseError);
}

TEST_CASE("presentations from the corpus") {
  auto s = presentation_from_complex(test::corpus("sigma"));
  CHECK(s.num_generators() == 10);
  CHECK(s.num_relators() == 24);
  auto l = presentation_from_complex(test::corpus("lambda"));
  CHECK(l.num_generators() == 6);
  CHECK(l.num_relators() == 9);
  auto d = presentation_from_complex(test::corpus("delta"));
  CHECK(d.num_generators() == 7);
  CHECK(d.num_relators() == 12);
  CHECK(format_presentation(Presentation({"x"}, {Word{1, 1}})) == "< x | x^2 >");
}

TEST_CASE("parity homomorphism") {
  auto     p = presentation_from_complex(test::corpus("sigma"));
  ParityHom h(p);
  for (auto const& r : p.relators()) {
    CHECK(h.in_kernel(r));
  }
  CHECK(h.in_kernel(parse_word("a2*a1^-1*a3*a4^-1", p.generators())));
  CHECK_FALSE(h.in_kernel(parse_word("a1", p.generators())));
  CHECK(h.image(parse_word("a1*b2", p.generators())) == std::pair{1, 1});

  Presentation bare({"x"}, {Word{1, 1}});
  CHECK_THROWS_AS(ParityHom{bare}, StructureError);
}

TEST_CASE("Smith normal form examples") {
  auto d = smith_normal_form(IntMatrix({{1, 0, 0}, {0, 2, 0}, {0, 0, 6}}));
  CHECK(d.invariant_factors == std::vector<BigInt>{1, 2, 6});

  auto m = IntMatrix({{4, 6}, {2, 2}});
  auto s = smith_normal_form(m);
  CHECK(s.invariant_factors == std::vector<BigInt>{2, 2});
  CHECK(unimodular(s.left));
  CHECK(unimodular(s.right));
  CHECK(s.left * s.diagonal * s.right == m);

  auto z = smith_normal_form(IntMatrix(2, 3));
  CHECK(z.rank == 0);
  CHECK(z.invariant_factors.empty());
}

TEST_CASE("abelianizations") {
  auto d = abelianization(presentation_from_complex(test::corpus("delta")));
  CHECK(d.free_rank == 3);
  CHECK(d.torsion.empty());
  CHECK(d.to_string() == "Z^3");

  auto s = abelianization(presentation_from_complex(test::corpus("sigma")));
  CHECK(s.free_rank == 0);
  CHECK(s.torsion == std::vector<BigInt>{2, 2});

  auto t = abelianization(Presentation({"x"}, {Word{1}}));
  CHECK(t.is_trivial());
  CHECK(t.to_string() == "1");
}

TEST_CASE("abelianization oracles from minors") {
  // delta: rank 4 over Q and the 4x4 minors are coprime, so Z^3 exactly.
  auto dm = exponent_matrix(presentation_from_complex(test::corpus("delta")));
  CHECK(rank_mod(dm, 1000003) == 4);
  CHECK(minor_gcd(dm, 4, 1000000) == 1);

  // sigma: full rank, 2-rank 8, and |A| divides the gcd of any set of maximal
  // minors; gcd 4 with two cyclic 2-factors forces Z/2 x Z/2.
  auto sm = exponent_matrix(presentation_from_complex(test::corpus("sigma")));
  CHECK(rank_mod(sm, 1000003) == 10);
  CHECK(rank_mod(sm, 2) == 8);
  CHECK(test::sampled_minor_gcd(sm, 10, 3000) == 4);
}

TEST_CASE("abelianization ignores relator order, inversion and rotation") {
  auto p    = presentation_from_complex(test::corpus("sigma"));
  auto rels = p.relators();
  std::reverse(rels.begin(), rels.end());
  for (std::size_t i = 0; i < rels.size(); ++i) {
    rels[i] = i % 2 == 0 ? rels[i].inverse() : rels[i].rotated(i % rels[i].length());
  }
  auto q = Presentation(p.generators(), rels);
  CHECK(abelianization(q).torsion == abelianization(p).torsion);
  CHECK(abelianization(q).free_rank == abelianization(p).free_rank);
}
