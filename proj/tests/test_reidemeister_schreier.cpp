#include <doctest.h>

#include "support.hpp"
#include "vhcx/reidemeister_schreier.hpp"

using namespace vhcx;

namespace {

  Presentation pres(std::vector<std::string> gens, std::vector<std::string> const& rels) {
    std::vector<Word> ws;
    for (auto const& r : rels) {
      ws.push_back(parse_word(r, gens));
    }
    return Presentation(std::move(gens), std::move(ws));
  }

  // Substitutes each Schreier generator by rep(c) x rep(c.x)^-1 and compares
  // the k-th rewritten relator with rep(c) r rep(c)^-1.
  void check_rewriting(Presentation const& p, CosetTable const& t) {
    auto sp = subgroup_presentation(p, t);
    auto tr = schreier_transversal(t);
    std::vector<Word> expand;
    for (std::size_t i = 0; i < sp.coset.size(); ++i) {
      auto c = sp.coset[i];
      auto g = sp.generator[i];
      auto d = t(c, 2 * g);
      expand.push_back(tr.representatives[c] * Word{Word::gen(g)}
                       * tr.representatives[d].inverse());
    }
    std::size_t k = 0;
    for (std::uint32_t c = 0; c < t.index(); ++c) {
      for (auto const& r : p.relators()) {
        Word got;
        for (auto x : sp.presentation.relators()[k].letters()) {
          auto const& e = expand[Word::generator_of(x)];
          got           = got * (x > 0 ? e : e.inverse());
        }
        auto want = tr.representatives[c] * r * tr.representatives[c].inverse();
        CHECK(got.cyclically_reduced() == want.cyclically_reduced());
        ++k;
      }
    }
  }

}  // namespace

TEST_CASE("transversals") {
  auto one = pres({"x"}, {"x"});
  auto t1  = enumerate(one, {});
  REQUIRE(t1.table->index() == 1);
  auto tr1 = schreier_transversal(*t1.table);
  REQUIRE(tr1.representatives.size() == 1);
  CHECK(tr1.representatives[0].empty());

  auto s  = presentation_from_complex(test::corpus("sigma"));
  auto ts = schreier_transversal(parity_coset_table(s));
  auto n  = s.generators();
  CHECK(ts.representatives
        == std::vector<Word>{Word{}, parse_word("a1", n), parse_word("b1", n),
                             parse_word("a1*b1", n)});

  auto k4 = pres({"x", "y"}, {"x^2", "y^2", "x*y*x*y"});
  auto tk = schreier_transversal(*enumerate(k4, {}).table);
  CHECK(tk.representatives
        == std::vector<Word>{Word{}, Word{1}, Word{2}, Word{1, 2}});
  for (std::size_t i = 1; i < tk.representatives.size(); ++i) {
    // prefix-closed: dropping the last letter gives the parent's word
    auto const& w = tk.representatives[i].letters();
    Word        prefix(std::vector<Word::letter_type>(w.begin(), w.end() - 1));
    CHECK(prefix == tk.representatives[tk.parent[i]]);
  }
}

TEST_CASE("parity table agrees with coset enumeration") {
  auto s  = presentation_from_complex(test::corpus("sigma"));
  auto nc = normal_closure_index(s, parse_word("a2*a1^-1*a3*a4^-1", s.generators()));
  REQUIRE(nc.index() == std::optional<std::size_t>(4));
  CHECK(parity_coset_table(s) == *nc.enumeration.table);
}

TEST_CASE("Schreier generator and relator counts") {
  auto s  = presentation_from_complex(test::corpus("sigma"));
  auto s0 = subgroup_presentation(s, parity_coset_table(s)).presentation;
  CHECK(s0.num_generators() == 37);
  CHECK(s0.num_relators() == 96);

  auto l  = presentation_from_complex(test::corpus("lambda"));
  auto l0 = subgroup_presentation(l, parity_coset_table(l)).presentation;
  CHECK(l0.num_generators() == 21);
  CHECK(l0.num_relators() == 36);

  auto one = pres({"x", "y"}, {"x*y*x^-1*y^-1"});
  auto t   = CosetTable::from_action({{0}, {0}});
  auto sp  = subgroup_presentation(one, t);
  CHECK(sp.presentation.num_generators() == 2);
  CHECK(sp.presentation.relators() == one.relators());
}

TEST_CASE("rewritten relators are conjugates of the originals") {
  auto s = presentation_from_complex(test::corpus("sigma"));
  check_rewriting(s, parity_coset_table(s));
  auto l = presentation_from_complex(test::corpus("lambda"));
  check_rewriting(l, parity_coset_table(l));
  auto a4 = pres({"x", "y"}, {"x^2", "y^3", "x*y*x*y*x*y"});
  check_rewriting(a4, *enumerate(a4, {Word{1}}).table);
}

TEST_CASE("Tietze simplification") {
  auto p = tietze_simplify(pres({"x", "y"}, {"y*x^-1"}));
  CHECK(p.presentation.num_generators() == 1);
  CHECK(p.presentation.num_relators() == 0);
  CHECK(p.stats.eliminations == 1);

  auto k4 = pres({"x", "y"}, {"x^2", "y^2", "x*y*x*y"});
  auto r  = tietze_simplify(k4);
  CHECK(r.presentation == k4);
  CHECK(r.stats.eliminations == 0);

  auto dup = tietze_simplify(pres({"x"}, {"x^2", "x^-2", "1"}));
  CHECK(dup.presentation.num_relators() == 1);
  CHECK(dup.stats.redundant_removed == 2);
}

TEST_CASE("the parity kernel of sigma") {
  auto s   = presentation_from_complex(test::corpus("sigma"));
  auto raw = subgroup_presentation(s, parity_coset_table(s)).presentation;
  auto tz  = tietze_simplify(raw);
  auto const& q = tz.presentation;
  CHECK(static_cast<long>(q.num_relators()) - static_cast<long>(q.num_generators()) == 59);
  CHECK(q.num_generators() <= 10);
  CHECK(tz.stats.redundant_removed == 0);
  CHECK(q.total_length() <= TietzeLimits{}.max_total_length);
  CHECK(is_perfect(raw));
  CHECK(is_perfect(q));
}

TEST_CASE("perfect groups") {
  CHECK_FALSE(is_perfect(presentation_from_complex(test::corpus("delta"))));
  CHECK(is_perfect(pres({"x"}, {"x"})));
  CHECK_FALSE(is_perfect(pres({"x"}, {"x^2"})));
}
