#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vhcx/smith.hpp"
#include "vhcx/word.hpp"

namespace vhcx {

  // Z^free_rank x Z/d1 x ... x Z/dk with d1 | d2 | ... | dk, each di > 1.
  struct AbelianInvariants {
    std::size_t         free_rank = 0;
    std::vector<BigInt> torsion;

    bool is_trivial() const noexcept {
      return free_rank == 0 && torsion.empty();
    }

    // "Z^3", "Z/2 x Z/2", "1"
    std::string to_string() const;

    bool operator==(AbelianInvariants const&) const = default;
  };

  // Rows are relators, columns generators, entries exponent sums.
  IntMatrix relation_matrix(Presentation const& p);

  AbelianInvariants abelianization(Presentation const& p);

  // The map sending horizontal generators to (1,0) and vertical ones to
  // (0,1) in Z/2 x Z/2. Its kernel is the index 4 subgroup Gamma_0.
  class ParityHom {
   public:
    // Throws StructureError if a generator has no side, or if some relator
    // is not in the kernel.
    explicit ParityHom(Presentation const& p);

    // (horizontal exponent sum mod 2, vertical exponent sum mod 2)
    std::pair<int, int> image(Word const& w) const;

    bool in_kernel(Word const& w) const {
      return image(w) == std::pair<int, int>{0, 0};
    }

    std::vector<Side> const& sides() const noexcept {
      return _sides;
    }

   private:
    std::vector<Side> _sides;
  };

  inline ParityHom index4_hom(Presentation const& p) {
    return ParityHom(p);
  }

}  // namespace vhcx
