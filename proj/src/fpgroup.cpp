#include "vhcx/fpgroup.hpp"

#include "vhcx/error.hpp"

namespace vhcx {

  std::string AbelianInvariants::to_string() const {
    std::string out;
    if (free_rank > 0) {
      out = "Z";
      if (free_rank > 1) {
        out += "^" + std::to_string(free_rank);
      }
    }
    for (auto const& d : torsion) {
      if (!out.empty()) {
        out += " x ";
      }
      out += "Z/" + d.str();
    }
    return out.empty() ? "1" : out;
  }

  IntMatrix relation_matrix(Presentation const& p) {
    IntMatrix m(p.num_relators(), p.num_generators());
    for (std::size_t i = 0; i < p.num_relators(); ++i) {
      for (auto x : p.relators()[i].letters()) {
        m(i, Word::generator_of(x)) += x > 0 ? 1 : -1;
      }
    }
    return m;
  }

  AbelianInvariants abelianization(Presentation const& p) {
    AbelianInvariants inv;
    if (p.num_relators() == 0) {
      inv.free_rank = p.num_generators();
      return inv;
    }
    auto snf      = smith_normal_form(relation_matrix(p));
    inv.free_rank = p.num_generators() - snf.rank;
    for (auto const& d : snf.invariant_factors) {
      if (d > 1) {
        inv.torsion.push_back(d);
      }
    }
    return inv;
  }

  ParityHom::ParityHom(Presentation const& p) {
    for (auto const& s : p.sides()) {
      if (!s) {
        throw StructureError("generator without horizontal/vertical side");
      }
      _sides.push_back(*s);
    }
    for (auto const& r : p.relators()) {
      if (!in_kernel(r)) {
        throw StructureError("relator not in the kernel of the parity map");
      }
    }
  }

  std::pair<int, int> ParityHom::image(Word const& w) const {
    int h = 0, v = 0;
    for (auto x : w.letters()) {
      auto g = Word::generator_of(x);
      if (g >= _sides.size()) {
        throw StructureError("word uses an unknown generator");
      }
      (_sides[g] == Side::horizontal ? h : v) ^= 1;
    }
    return {h, v};
  }

}  // namespace vhcx
