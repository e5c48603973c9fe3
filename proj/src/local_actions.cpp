#include "vhcx/local_actions.hpp"

#include <map>

#include "vhcx/error.hpp"

namespace vhcx {

  namespace {

    using Form = Square::Form;

    // Boundary reading with leading corner (a, b).
    Form const& form_at(std::map<Corner, Form> const& corners, Letter a, Letter b) {
      auto it = corners.find(Corner{a, b});
      if (it == corners.end()) {
        throw StructureError("link condition violated: no square has corner "
                             "at the requested pair");
      }
      return it->second;
    }

    std::map<Corner, Form> corner_map(SquareComplex const& c) {
      std::map<Corner, Form> out;
      for (auto const& sq : c.squares()) {
        for (auto const& f : sq.forms()) {
          if (!out.emplace(Corner{f[0], f[1]}, f).second) {
            throw StructureError("link condition violated: corner covered "
                                 "twice");
          }
        }
      }
      return out;
    }

    LocalPerm make_local(SquareComplex const&          c,
                         std::map<Corner, Form> const& corners,
                         Letter                        actor) {
      if (!c.contains(actor)) {
        throw StructureError("letter not in complex");
      }
      LocalPerm lp;
      lp.actor      = actor;
      lp.point_side = opposite(actor.side);
      auto d        = c.degree(lp.point_side);
      lp.depth1.resize(d);
      lp.residual.resize(d);
      for (std::size_t p = 0; p < d; ++p) {
        auto x = c.letter_at(lp.point_side, p);
        if (actor.is_horizontal()) {
          // a.b.a'.b' = 1  ==>  b -> b'^-1, continue with a'^-1
          auto const& f = form_at(corners, actor, x);
          lp.depth1[p]   = f[3].inverse();
          lp.residual[p] = f[2].inverse();
        } else {
          // b.a'.b'.a = 1 is the reading (a'^-1, b^-1, a^-1, b'^-1) of the
          // square with corner (a'^-1, b^-1)  ==>  a' -> a^-1, continue b'^-1
          auto const& f = form_at(corners, x.inverse(), actor.inverse());
          lp.depth1[p]   = f[2];
          lp.residual[p] = f[3];
        }
      }
      std::vector<bool> hit(d, false);
      for (auto y : lp.depth1) {
        auto q = c.position(y);
        if (hit[q]) {
          throw StructureError("local action is not a bijection");
        }
        hit[q] = true;
      }
      return lp;
    }

  }  // namespace

  Permutation LocalPerm::as_permutation(SquareComplex const& c) const {
    std::vector<point_type> img(depth1.size());
    for (std::size_t p = 0; p < depth1.size(); ++p) {
      img[p] = static_cast<point_type>(c.position(depth1[p]));
    }
    return Permutation::from_images(std::move(img));
  }

  LocalPerm vertical_local_perm(SquareComplex const& c, Letter a) {
    if (!a.is_horizontal()) {
      throw StructureError("vertical local action needs a horizontal letter");
    }
    return make_local(c, corner_map(c), a);
  }

  LocalPerm horizontal_local_perm(SquareComplex const& c, Letter b) {
    if (b.is_horizontal()) {
      throw StructureError("horizontal local action needs a vertical letter");
    }
    return make_local(c, corner_map(c), b);
  }

  LocalPerm local_perm(SquareComplex const& c, Letter actor) {
    return make_local(c, corner_map(c), actor);
  }

  ////////////////////////////////////////////////////////////////////////
  // SphereIndex
  ////////////////////////////////////////////////////////////////////////

  SphereIndex::SphereIndex(std::size_t d, std::size_t k) : _d(d), _k(k) {
    if (k == 0 || d < 2 || d % 2 != 0) {
      throw StructureError("sphere needs depth >= 1 and an even letter count");
    }
    _size = d;
    for (std::size_t i = 1; i < k; ++i) {
      _size *= d - 1;
    }
  }

  std::vector<std::size_t> SphereIndex::word(std::size_t index) const {
    std::vector<std::size_t> digits(_k);
    // mixed radix: d, d-1, ..., d-1
    for (std::size_t i = _k; i-- > 1;) {
      digits[i] = index % (_d - 1);
      index /= (_d - 1);
    }
    digits[0] = index;
    std::vector<std::size_t> w(_k);
    w[0] = digits[0];
    for (std::size_t i = 1; i < _k; ++i) {
      auto forbidden = inverse_position(w[i - 1]);
      w[i]           = digits[i] < forbidden ? digits[i] : digits[i] + 1;
    }
    return w;
  }

  std::size_t SphereIndex::index(std::vector<std::size_t> const& w) const {
    if (w.size() != _k) {
      throw StructureError("word length does not match sphere depth");
    }
    std::size_t idx = w[0];
    for (std::size_t i = 1; i < _k; ++i) {
      auto forbidden = inverse_position(w[i - 1]);
      if (w[i] == forbidden) {
        throw StructureError("word is not reduced");
      }
      idx = idx * (_d - 1) + (w[i] < forbidden ? w[i] : w[i] - 1);
    }
    return idx;
  }

  ////////////////////////////////////////////////////////////////////////
  // Sphere actions
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Local permutations of every letter on the actor side, by position.
    std::vector<LocalPerm> all_local_perms(SquareComplex const& c, Side actor_side) {
      auto                   corners = corner_map(c);
      std::vector<LocalPerm> out;
      for (std::size_t p = 0; p < c.degree(actor_side); ++p) {
        out.push_back(make_local(c, corners, c.letter_at(actor_side, p)));
      }
      return out;
    }

    Permutation sphere_action_with(SquareComplex const&          c,
                                   std::vector<LocalPerm> const& locals,
                                   Letter                        x,
                                   SphereIndex const&            sphere) {
      std::vector<point_type> img(sphere.size());
      std::vector<std::size_t> out(sphere.depth());
      for (std::size_t i = 0; i < sphere.size(); ++i) {
        auto w     = sphere.word(i);
        auto actor = c.position(x);
        for (std::size_t j = 0; j < w.size(); ++j) {
          auto const& lp = locals[actor];
          out[j]         = c.position(lp.depth1[w[j]]);
          actor          = c.position(lp.residual[w[j]]);
        }
        img[i] = static_cast<point_type>(sphere.index(out));
      }
      return Permutation::from_images(std::move(img));
    }

    void check_depth(std::size_t k, std::size_t max_depth) {
      if (k == 0) {
        throw StructureError("sphere depth must be at least 1");
      }
      if (k > max_depth) {
        throw StructureError("sphere depth " + std::to_string(k)
                             + " exceeds the configured bound "
                             + std::to_string(max_depth));
      }
    }

  }  // namespace

  Permutation sphere_action(SquareComplex const& c,
                            Letter               x,
                            std::size_t          k,
                            std::size_t          max_depth) {
    check_depth(k, max_depth);
    auto        locals = all_local_perms(c, x.side);
    SphereIndex sphere(c.degree(opposite(x.side)), k);
    return sphere_action_with(c, locals, x, sphere);
  }

  std::vector<Permutation> local_generators(SquareComplex const& c,
                                            Side                 side,
                                            std::size_t          k,
                                            std::size_t          max_depth) {
    check_depth(k, max_depth);
    auto                     actor_side = opposite(side);
    auto                     locals     = all_local_perms(c, actor_side);
    SphereIndex              sphere(c.degree(side), k);
    std::vector<Permutation> gens;
    auto count = actor_side == Side::horizontal ? c.m() : c.n();
    for (std::uint32_t i = 1; i <= count; ++i) {
      gens.push_back(sphere_action_with(c, locals, Letter{actor_side, i, false},
                                        sphere));
    }
    return gens;
  }

  PermGroup local_group(SquareComplex const& c,
                        Side                 side,
                        std::size_t          k,
                        std::size_t          max_depth) {
    auto        gens = local_generators(c, side, k, max_depth);
    SphereIndex sphere(c.degree(side), k);
    return PermGroup(sphere.size(), std::move(gens));
  }

  std::vector<std::string> sphere_labels(SquareComplex const& c,
                                         Side                 side,
                                         std::size_t          k) {
    SphereIndex              sphere(c.degree(side), k);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < sphere.size(); ++i) {
      std::string s;
      for (auto p : sphere.word(i)) {
        if (!s.empty()) {
          s += '*';
        }
        s += c.letter_name(c.letter_at(side, p));
      }
      out.push_back(std::move(s));
    }
    return out;
  }

}  // namespace vhcx
