#pragma once

// Presentations of finite-index subgroups from coset tables, and their
// simplification by generator-eliminating Tietze moves.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vhcx/todd_coxeter.hpp"
#include "vhcx/word.hpp"

namespace vhcx {

  struct Transversal {
    std::vector<Word> representatives;  // coset i -> word w with 0 . w = i
    // Spanning tree of the coset graph: coset i (> 0) was first reached from
    // parent[i] along column parent_column[i].
    std::vector<std::uint32_t> parent;
    std::vector<std::size_t>   parent_column;
  };

  // Breadth-first spanning tree over columns in order; prefix-closed.
  Transversal schreier_transversal(CosetTable const& t);

  // Table for the kernel of the parity map, built directly from the action
  // of the generators on Z/2 x Z/2.
  CosetTable parity_coset_table(Presentation const& p);

  struct SubgroupPresentation {
    Presentation presentation;
    // Schreier generator k is  rep(coset[k]) * x_{gen[k]} * rep(coset . x)^-1.
    std::vector<std::uint32_t> coset;
    std::vector<std::size_t>   generator;
  };

  // One Schreier generator per non-tree table entry (k*g - (k-1) of them)
  // and one rewritten relator per (coset, relator) pair (k*r of them).
  SubgroupPresentation subgroup_presentation(Presentation const& p,
                                             CosetTable const&   t);

  struct TietzeLimits {
    std::size_t max_total_length = 10000;
    std::size_t max_moves        = 100000;
  };

  struct TietzeStats {
    std::size_t eliminations       = 0;
    std::size_t redundant_removed  = 0;  // trivial or duplicate relators
    std::size_t rejected_by_budget = 0;
  };

  struct TietzeResult {
    Presentation presentation;
    TietzeStats  stats;
  };

  // Repeatedly eliminates a generator occurring exactly once in some relator,
  // choosing the shortest such relator (ties: lowest generator id), skipping
  // eliminations that would push the total length above the budget. Each
  // elimination removes one generator and one relator, so r - g is preserved
  // by every such move; this is checked after each move. Deleting a trivial
  // or duplicate relator is counted separately in `redundant_removed`.
  TietzeResult tietze_simplify(Presentation const& p, TietzeLimits const& limits = {});

  // Trivial abelianization.
  bool is_perfect(Presentation const& p);

}  // namespace vhcx
