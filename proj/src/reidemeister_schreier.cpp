#include "vhcx/reidemeister_schreier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "vhcx/error.hpp"
#include "vhcx/fpgroup.hpp"

namespace vhcx {

  Transversal schreier_transversal(CosetTable const& t) {
    auto        n = t.index();
    Transversal tr;
    tr.representatives.assign(n, Word());
    tr.parent.assign(n, 0);
    tr.parent_column.assign(n, 0);
    std::vector<bool>          seen(n, false);
    std::vector<std::uint32_t> order{0};
    seen[0] = true;
    for (std::size_t k = 0; k < order.size(); ++k) {
      auto c = order[k];
      for (std::size_t x = 0; x < t.num_columns(); ++x) {
        auto d = t(c, x);
        if (seen[d]) {
          continue;
        }
        seen[d] = true;
        order.push_back(d);
        auto letter = Word::gen(x / 2, x % 2 == 1);
        tr.representatives[d] = tr.representatives[c] * Word{letter};
        tr.parent[d]          = c;
        tr.parent_column[d]   = x;
      }
    }
    return tr;
  }

  CosetTable parity_coset_table(Presentation const& p) {
    ParityHom                               hom(p);
    std::vector<std::vector<std::uint32_t>> images;
    for (auto s : hom.sides()) {
      // point 2h + v  for (h, v) in Z/2 x Z/2
      std::uint32_t flip = s == Side::horizontal ? 2 : 1;
      images.push_back({0 ^ flip, 1 ^ flip, 2 ^ flip, 3 ^ flip});
    }
    return CosetTable::from_action(images);
  }

  SubgroupPresentation subgroup_presentation(Presentation const& p,
                                             CosetTable const&   t) {
    if (t.num_generators() != p.num_generators()) {
      throw StructureError("coset table and presentation disagree on the "
                           "number of generators");
    }
    auto k     = t.index();
    auto ngens = p.num_generators();
    auto tr    = schreier_transversal(t);

    // tree[c][g]: entry (c, g) lies on the spanning tree
    std::vector<std::vector<bool>> tree(k, std::vector<bool>(ngens, false));
    for (std::size_t i = 1; i < k; ++i) {
      auto x = tr.parent_column[i];
      auto g = x / 2;
      if (x % 2 == 0) {
        tree[tr.parent[i]][g] = true;
      } else {
        tree[i][g] = true;
      }
    }

    SubgroupPresentation out;
    std::vector<std::vector<std::int64_t>> id(k, std::vector<std::int64_t>(ngens, -1));
    std::vector<std::string>               names;
    for (std::uint32_t c = 0; c < k; ++c) {
      for (std::size_t g = 0; g < ngens; ++g) {
        if (tree[c][g]) {
          continue;
        }
        id[c][g] = static_cast<std::int64_t>(names.size());
        names.push_back(p.generators()[g] + "_" + std::to_string(c + 1));
        out.coset.push_back(c);
        out.generator.push_back(g);
      }
    }

    std::vector<Word> rels;
    for (std::uint32_t c = 0; c < k; ++c) {
      for (auto const& r : p.relators()) {
        std::vector<Word::letter_type> w;
        auto                           cur = c;
        for (auto x : r.letters()) {
          auto g   = Word::generator_of(x);
          auto col = CosetTable::column(x);
          if (x > 0) {
            if (id[cur][g] >= 0) {
              w.push_back(Word::gen(static_cast<std::size_t>(id[cur][g])));
            }
            cur = t(cur, col);
          } else {
            auto d = t(cur, col);
            if (id[d][g] >= 0) {
              w.push_back(Word::gen(static_cast<std::size_t>(id[d][g]), true));
            }
            cur = d;
          }
        }
        if (cur != c) {
          throw StructureError("relator does not close in the coset table");
        }
        rels.emplace_back(std::move(w));
      }
    }
    out.presentation = Presentation(std::move(names), std::move(rels));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tietze transformations
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Least rotation of w or of its inverse.
    Word cyclic_canonical(Word const& w) {
      Word best = w;
      for (auto const& v : {w, w.inverse()}) {
        for (std::size_t i = 0; i < v.length(); ++i) {
          auto r = v.rotated(i);
          if (r < best) {
            best = std::move(r);
          }
        }
      }
      return best;
    }

    // Replaces every occurrence of generator g (either sign) by `value`.
    Word substitute(Word const& w, std::size_t g, Word const& value) {
      std::vector<Word::letter_type> out;
      auto                           inv = value.inverse();
      for (auto x : w.letters()) {
        if (Word::generator_of(x) != g) {
          out.push_back(x);
          continue;
        }
        auto const& v = x > 0 ? value : inv;
        out.insert(out.end(), v.letters().begin(), v.letters().end());
      }
      return Word(std::move(out)).cyclically_reduced();
    }

    struct State {
      std::vector<std::string> names;
      std::vector<bool>        alive;
      std::vector<Word>        rels;

      std::size_t num_alive() const {
        return static_cast<std::size_t>(
            std::count(alive.begin(), alive.end(), true));
      }
      std::size_t total_length() const {
        std::size_t t = 0;
        for (auto const& r : rels) {
          t += r.length();
        }
        return t;
      }
    };

    std::size_t remove_redundant(State& s) {
      std::size_t                removed = 0;
      std::set<Word>             seen;
      std::vector<Word>          kept;
      for (auto& r : s.rels) {
        r = r.cyclically_reduced();
        if (r.empty()) {
          ++removed;
          continue;
        }
        if (!seen.insert(cyclic_canonical(r)).second) {
          ++removed;
          continue;
        }
        kept.push_back(std::move(r));
      }
      s.rels = std::move(kept);
      return removed;
    }

  }  // namespace

  TietzeResult tietze_simplify(Presentation const& p, TietzeLimits const& limits) {
    State s{p.generators(),
            std::vector<bool>(p.num_generators(), true),
            p.relators()};
    TietzeStats stats;
    stats.redundant_removed += remove_redundant(s);

    while (stats.eliminations < limits.max_moves) {
      // (relator length, generator, relator index)
      std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> cands;
      for (std::size_t ri = 0; ri < s.rels.size(); ++ri) {
        std::map<std::size_t, std::size_t> count;
        for (auto x : s.rels[ri].letters()) {
          ++count[Word::generator_of(x)];
        }
        for (auto [g, c] : count) {
          if (c == 1) {
            cands.emplace_back(s.rels[ri].length(), g, ri);
          }
        }
      }
      std::sort(cands.begin(), cands.end());

      bool applied = false;
      for (auto [len, g, ri] : cands) {
        auto const& r = s.rels[ri];
        // rotate r so that g leads:  r ~ g^e t
        std::size_t pos = 0;
        while (Word::generator_of(r.letters()[pos]) != g) {
          ++pos;
        }
        auto rot   = r.rotated(pos);
        bool e_pos = rot.letters()[0] > 0;
        Word t(std::vector<Word::letter_type>(rot.letters().begin() + 1,
                                              rot.letters().end()));
        // g^e = t^-1
        Word value = e_pos ? t.inverse() : t;

        std::vector<Word> next;
        std::size_t       total = 0;
        for (std::size_t rj = 0; rj < s.rels.size(); ++rj) {
          if (rj == ri) {
            continue;
          }
          next.push_back(substitute(s.rels[rj], g, value));
          total += next.back().length();
        }
        if (total > limits.max_total_length) {
          ++stats.rejected_by_budget;
          continue;
        }
        auto before = static_cast<long long>(s.rels.size())
                      - static_cast<long long>(s.num_alive());
        s.rels     = std::move(next);
        s.alive[g] = false;
        ++stats.eliminations;
        auto after = static_cast<long long>(s.rels.size())
                     - static_cast<long long>(s.num_alive());
        if (before != after) {
          throw Error("internal error: Tietze elimination changed r - g");
        }
        stats.redundant_removed += remove_redundant(s);
        applied = true;
        break;
      }
      if (!applied) {
        break;
      }
    }

    // renumber surviving generators
    std::vector<std::int64_t> renum(s.names.size(), -1);
    std::vector<std::string>  names;
    for (std::size_t g = 0; g < s.names.size(); ++g) {
      if (s.alive[g]) {
        renum[g] = static_cast<std::int64_t>(names.size());
        names.push_back(s.names[g]);
      }
    }
    std::vector<Word> rels;
    for (auto const& r : s.rels) {
      std::vector<Word::letter_type> w;
      for (auto x : r.letters()) {
        auto g = static_cast<std::size_t>(renum[Word::generator_of(x)]);
        w.push_back(Word::gen(g, x < 0));
      }
      rels.emplace_back(std::move(w));
    }
    return TietzeResult{Presentation(std::move(names), std::move(rels)), stats};
  }

  bool is_perfect(Presentation const& p) {
    return abelianization(p).is_trivial();
  }

}  // namespace vhcx
