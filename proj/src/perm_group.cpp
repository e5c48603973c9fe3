#include "vhcx/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "vhcx/error.hpp"

namespace vhcx {

  BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) {
      r *= i;
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Schreier-Sims
  ////////////////////////////////////////////////////////////////////////

  PermGroup::PermGroup(std::size_t                    degree,
                       std::vector<Permutation>       generators,
                       std::vector<point_type> const& base_prefix)
      : _degree(degree), _gens(std::move(generators)) {
    for (auto const& g : _gens) {
      if (g.degree() != _degree) {
        throw StructureError("generator degree does not match group degree");
      }
    }
    for (auto b : base_prefix) {
      if (b >= _degree) {
        throw StructureError("base point out of range");
      }
    }
    schreier_sims(base_prefix);
  }

  std::vector<point_type> PermGroup::base() const {
    std::vector<point_type> out;
    for (auto const& l : _levels) {
      out.push_back(l.base_point);
    }
    return out;
  }

  void PermGroup::add_level(point_type b) {
    Level lvl;
    lvl.base_point  = b;
    lvl.orbit_index.assign(_degree, -1);
    lvl.orbit       = {b};
    lvl.orbit_index[b] = 0;
    lvl.transversal = {Permutation::identity(_degree)};
    lvl.transversal_inv = {Permutation::identity(_degree)};
    lvl.checked     = {0};
    _levels.push_back(std::move(lvl));
  }

  void PermGroup::extend_orbit(Level& lvl) {
    for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
      for (auto gi : lvl.gens) {
        auto const& s   = _strong[gi];
        auto        img = s[lvl.orbit[k]];
        if (lvl.orbit_index[img] < 0) {
          lvl.orbit_index[img] = static_cast<int>(lvl.orbit.size());
          lvl.orbit.push_back(img);
          lvl.transversal.push_back(lvl.transversal[k] * s);
          lvl.transversal_inv.push_back(lvl.transversal.back().inverse());
          lvl.checked.push_back(0);
        }
      }
    }
  }

  std::pair<Permutation, std::size_t>
  PermGroup::strip(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < _levels.size(); ++l) {
      auto const& lvl  = _levels[l];
      auto        beta = g[lvl.base_point];
      auto        k    = lvl.orbit_index[beta];
      if (k < 0) {
        return {std::move(g), l};
      }
      g = g * lvl.transversal_inv[k];
    }
    return {std::move(g), _levels.size()};
  }

  void PermGroup::schreier_sims(std::vector<point_type> const& base_prefix) {
    for (auto const& g : _gens) {
      if (!g.is_identity()
          && std::find(_strong.begin(), _strong.end(), g) == _strong.end()) {
        _strong.push_back(g);
      }
    }
    for (auto b : base_prefix) {
      add_level(b);
    }
    for (auto const& s : _strong) {
      bool moves_base = std::any_of(_levels.begin(), _levels.end(),
                                    [&s](Level const& l) {
                                      return s[l.base_point] != l.base_point;
                                    });
      if (!moves_base) {
        add_level(*s.first_moved_point());
      }
    }
    for (std::size_t i = 0; i < _strong.size(); ++i) {
      for (auto& lvl : _levels) {
        lvl.gens.push_back(i);
        if (_strong[i][lvl.base_point] != lvl.base_point) {
          break;
        }
      }
    }
    for (auto& lvl : _levels) {
      extend_orbit(lvl);
    }

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(_levels.size()) - 1;
    while (i >= 0) {
      bool  descended = false;
      auto& lvl       = _levels[i];
      for (std::size_t k = 0; !descended && k < lvl.orbit.size(); ++k) {
        while (lvl.checked[k] < lvl.gens.size()) {
          auto const& x    = _strong[lvl.gens[lvl.checked[k]]];
          ++lvl.checked[k];
          auto        ux   = lvl.transversal[k] * x;
          auto        kimg = lvl.orbit_index[x[lvl.orbit[k]]];
          if (ux == lvl.transversal[kimg]) {
            continue;
          }
          auto h      = ux * lvl.transversal_inv[kimg];
          auto [y, j] = strip(std::move(h), static_cast<std::size_t>(i) + 1);
          if (j == _levels.size()) {
            if (y.is_identity()) {
              continue;
            }
            add_level(*y.first_moved_point());
          }
          _strong.push_back(std::move(y));
          for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
            _levels[l].gens.push_back(_strong.size() - 1);
            extend_orbit(_levels[l]);
          }
          i         = static_cast<std::ptrdiff_t>(j);
          descended = true;
          break;
        }
      }
      if (!descended) {
        --i;
      }
    }

    _order = 1;
    for (auto const& lvl : _levels) {
      _order *= lvl.orbit.size();
    }
  }

  bool PermGroup::contains(Permutation const& g) const {
    if (g.degree() != _degree) {
      return false;
    }
    auto [y, j] = strip(g, 0);
    return j == _levels.size() && y.is_identity();
  }

  std::vector<point_type> PermGroup::orbit(point_type p) const {
    std::vector<point_type> orb{p};
    std::vector<bool>       seen(_degree, false);
    seen[p] = true;
    for (std::size_t k = 0; k < orb.size(); ++k) {
      for (auto const& g : _gens) {
        auto img = g[orb[k]];
        if (!seen[img]) {
          seen[img] = true;
          orb.push_back(img);
        }
      }
    }
    return orb;
  }

  std::vector<point_type> PermGroup::moved_points() const {
    std::vector<point_type> out;
    for (point_type p = 0; p < _degree; ++p) {
      if (std::any_of(_gens.begin(), _gens.end(),
                      [p](Permutation const& g) { return g[p] != p; })) {
        out.push_back(p);
      }
    }
    return out;
  }

  bool PermGroup::is_abelian() const {
    for (std::size_t i = 0; i < _gens.size(); ++i) {
      for (std::size_t j = i + 1; j < _gens.size(); ++j) {
        if (_gens[i] * _gens[j] != _gens[j] * _gens[i]) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Permutation> PermGroup::elements(std::size_t limit) const {
    if (_order > limit) {
      throw Error("group too large to enumerate");
    }
    std::vector<Permutation> out{Permutation::identity(_degree)};
    // g = u_{L-1} ... u_1 u_0 ranges over G exactly once.
    for (auto it = _levels.rbegin(); it != _levels.rend(); ++it) {
      auto const&              lvl = *it;
      std::vector<Permutation> next;
      next.reserve(out.size() * lvl.orbit.size());
      for (auto const& u : lvl.transversal) {
        for (auto const& e : out) {
          next.push_back(e * u);
        }
      }
      out = std::move(next);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Derived queries
  ////////////////////////////////////////////////////////////////////////

  bool is_k_transitive(PermGroup const& g, std::size_t k) {
    auto d = g.degree();
    if (k == 0) {
      return true;
    }
    if (k > d) {
      return false;
    }
    std::vector<point_type> prefix(k);
    std::iota(prefix.begin(), prefix.end(), point_type{0});
    PermGroup rebased(d, g.generators(), prefix);
    for (std::size_t i = 0; i < k; ++i) {
      if (rebased.levels()[i].orbit.size() != d - i) {
        return false;
      }
    }
    return true;
  }

  PermGroup point_stabilizer(PermGroup const& g, point_type p) {
    PermGroup                rebased(g.degree(), g.generators(), {p});
    std::vector<Permutation> gens;
    if (rebased.levels().size() > 1) {
      for (auto gi : rebased.levels()[1].gens) {
        gens.push_back(rebased.strong_generators()[gi]);
      }
    }
    PermGroup stab(g.degree(), std::move(gens));
    if (stab.order() * rebased.levels()[0].orbit.size() != g.order()) {
      throw StructureError("orbit-stabilizer identity violated");
    }
    return stab;
  }

  PermGroup restrict_to_support(PermGroup const& g) {
    auto                    supp = g.moved_points();
    std::vector<int>        relabel(g.degree(), -1);
    for (std::size_t i = 0; i < supp.size(); ++i) {
      relabel[supp[i]] = static_cast<int>(i);
    }
    std::vector<Permutation> gens;
    for (auto const& x : g.generators()) {
      std::vector<point_type> img(supp.size());
      for (std::size_t i = 0; i < supp.size(); ++i) {
        img[i] = static_cast<point_type>(relabel[x[supp[i]]]);
      }
      gens.push_back(Permutation::from_images(std::move(img)));
    }
    return PermGroup(supp.size(), std::move(gens));
  }

  std::string Recognition::name() const {
    switch (kind) {
      case GroupKind::alternating:
        return "Alt(" + std::to_string(degree) + ")";
      case GroupKind::symmetric:
        return "Sym(" + std::to_string(degree) + ")";
      case GroupKind::mathieu11:
        return "M11";
      case GroupKind::mathieu12:
        return "M12";
      default:
        return "other(" + order.str() + ")";
    }
  }

  Recognition recognize(PermGroup const& g) {
    Recognition r;
    r.order = g.order();
    if (g.is_trivial()) {
      return r;
    }
    auto sub = restrict_to_support(g);
    auto d   = sub.degree();
    r.degree = d;
    auto fac = factorial(static_cast<unsigned>(d));
    bool all_even
        = std::all_of(sub.generators().begin(), sub.generators().end(),
                      [](Permutation const& x) { return x.is_even(); });
    if (d >= 3 && all_even && r.order * 2 == fac) {
      r.kind = GroupKind::alternating;
    } else if (r.order == fac) {
      r.kind = GroupKind::symmetric;
    } else if (d == 12 && r.order == 95040 && is_k_transitive(sub, 5)) {
      r.kind = GroupKind::mathieu12;
    } else if (d == 11 && r.order == 7920 && is_k_transitive(sub, 4)) {
      r.kind = GroupKind::mathieu11;
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Simplicity
  ////////////////////////////////////////////////////////////////////////

  PermGroup normal_closure(PermGroup const&                g,
                           std::vector<Permutation> const& gens) {
    std::vector<Permutation> ngens;
    for (auto const& x : gens) {
      if (!x.is_identity()) {
        ngens.push_back(x);
      }
    }
    PermGroup n(g.degree(), ngens);
    // Closing the generating set under conjugation by g's generators gives
    // the normal closure.
    for (std::size_t k = 0; k < ngens.size(); ++k) {
      for (auto const& s : g.generators()) {
        auto c = s.inverse() * ngens[k] * s;
        if (!n.contains(c)) {
          ngens.push_back(c);
          n = PermGroup(g.degree(), ngens);
        }
      }
    }
    return n;
  }

  std::string to_string(SimplicityVerdict v) {
    switch (v) {
      case SimplicityVerdict::simple:
        return "simple";
      case SimplicityVerdict::not_simple:
        return "not_simple";
      default:
        return "unknown";
    }
  }

  SimplicityResult brute_simplicity(PermGroup const& g, std::size_t bound) {
    SimplicityResult res;
    if (g.order() > bound) {
      res.verdict = SimplicityVerdict::unknown;
      res.reason  = "order " + g.order().str() + " exceeds bound "
                   + std::to_string(bound);
      return res;
    }
    if (g.is_trivial()) {
      res.verdict = SimplicityVerdict::not_simple;
      res.reason  = "trivial group";
      return res;
    }
    auto elts = g.elements(bound);
    std::unordered_map<Permutation, std::size_t, PermutationHash> index;
    for (std::size_t i = 0; i < elts.size(); ++i) {
      index.emplace(elts[i], i);
    }
    std::vector<bool>        classified(elts.size(), false);
    std::vector<Permutation> gen_inv;
    for (auto const& s : g.generators()) {
      gen_inv.push_back(s.inverse());
    }
    std::size_t classes = 0;
    for (std::size_t i = 0; i < elts.size(); ++i) {
      if (classified[i]) {
        continue;
      }
      ++classes;
      // conjugacy class of elts[i] by orbit under generator conjugation
      std::vector<std::size_t> cls{i};
      classified[i] = true;
      for (std::size_t k = 0; k < cls.size(); ++k) {
        for (std::size_t s = 0; s < gen_inv.size(); ++s) {
          auto c = gen_inv[s] * elts[cls[k]] * g.generators()[s];
          auto j = index.at(c);
          if (!classified[j]) {
            classified[j] = true;
            cls.push_back(j);
          }
        }
      }
      if (elts[i].is_identity()) {
        continue;
      }
      auto nc = normal_closure(g, {elts[i]});
      if (nc.order() != g.order()) {
        res.verdict               = SimplicityVerdict::not_simple;
        res.witness               = elts[i];
        res.witness_closure_order = nc.order();
        res.reason = "normal closure of " + elts[i].to_cycles() + " has order "
                     + nc.order().str();
        return res;
      }
    }
    res.verdict = SimplicityVerdict::simple;
    res.reason  = "all " + std::to_string(classes - 1)
                 + " non-identity conjugacy classes generate the group";
    return res;
  }

  SimplicityResult is_whitelisted_nonabelian_simple(PermGroup const& g,
                                                    std::size_t      bound) {
    SimplicityResult res;
    if (g.is_abelian()) {
      res.verdict = SimplicityVerdict::not_simple;
      res.reason  = "abelian";
      return res;
    }
    auto rec = recognize(g);
    if ((rec.kind == GroupKind::alternating && rec.degree >= 5)
        || rec.kind == GroupKind::mathieu11
        || rec.kind == GroupKind::mathieu12) {
      res.verdict = SimplicityVerdict::simple;
      res.reason  = "recognized " + rec.name();
      return res;
    }
    if (rec.kind == GroupKind::symmetric && rec.degree >= 3) {
      res.verdict = SimplicityVerdict::not_simple;
      res.reason  = "recognized " + rec.name()
                   + "; the alternating subgroup is a proper normal subgroup";
      return res;
    }
    return brute_simplicity(g, bound);
  }

}  // namespace vhcx
