#pragma once

// Coset enumeration. Enumeration is a semi-decision procedure: running out
// of room is reported as `exhausted`, never as "infinite index".

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vhcx/fpgroup.hpp"
#include "vhcx/word.hpp"

namespace vhcx {

  enum class Strategy { hlt, felsch };

  std::string to_string(Strategy s);

  constexpr std::size_t default_coset_cap = 1000000;

  struct EnumerationOptions {
    Strategy    strategy = Strategy::hlt;
    std::size_t cap      = default_coset_cap;  // max rows in the table
  };

  struct EnumerationStats {
    Strategy    strategy      = Strategy::hlt;
    std::size_t max_live      = 0;
    std::size_t total_defined = 0;
  };

  // A closed, standardized coset table. Column 2g is generator g, column
  // 2g+1 its inverse. Coset 0 is the subgroup; cosets are numbered in the
  // order a breadth-first walk over columns first meets them.
  class CosetTable {
   public:
    // Builds a table from the right action of each generator on `index`
    // points (point 0 = subgroup) and standardizes it. Throws
    // StructureError if an action is not a permutation or not transitive.
    static CosetTable from_action(std::vector<std::vector<std::uint32_t>> const& images,
                                  EnumerationStats stats = {});

    std::size_t index() const noexcept {
      return _index;
    }
    std::size_t num_generators() const noexcept {
      return _ngens;
    }
    std::size_t num_columns() const noexcept {
      return 2 * _ngens;
    }

    std::uint32_t operator()(std::size_t coset, std::size_t column) const {
      return _table[coset * num_columns() + column];
    }

    static std::size_t column(Word::letter_type x) noexcept {
      auto g = Word::generator_of(x);
      return 2 * g + (x < 0 ? 1 : 0);
    }

    std::uint32_t trace(std::uint32_t coset, Word const& w) const;

    EnumerationStats const& stats() const noexcept {
      return _stats;
    }

    // Every column a permutation; every relator closes at every coset; every
    // subgroup generator fixes coset 0.
    bool verify(Presentation const& p, std::vector<Word> const& subgens) const;

    // Rows x generator columns, tab separated, 1-based cosets.
    std::string to_tsv(std::vector<std::string> const& gen_names) const;

    bool operator==(CosetTable const& o) const {
      return _ngens == o._ngens && _index == o._index && _table == o._table;
    }

   private:
    friend class Enumerator;

    CosetTable(std::size_t ngens, std::size_t index,
               std::vector<std::uint32_t> table, EnumerationStats stats);

    std::size_t                _ngens = 0;
    std::size_t                _index = 0;
    std::vector<std::uint32_t> _table;
    EnumerationStats           _stats;
  };

  struct EnumerationResult {
    std::optional<CosetTable> table;  // empty when exhausted
    EnumerationStats          stats;
    std::size_t               cap = 0;

    bool exhausted() const noexcept {
      return !table.has_value();
    }
  };

  EnumerationResult enumerate(Presentation const&       p,
                              std::vector<Word> const&  subgens,
                              EnumerationOptions const& opts = {});

  struct NormalClosureResult {
    Presentation      quotient;  // p with w appended as a relator
    EnumerationResult enumeration;

    std::optional<std::size_t> index() const {
      if (enumeration.exhausted()) {
        return std::nullopt;
      }
      return enumeration.table->index();
    }
  };

  // Index of the normal closure of w: enumerates the trivial subgroup of
  // < gens | relators, w >.
  NormalClosureResult normal_closure_index(Presentation const&       p,
                                           Word const&               w,
                                           EnumerationOptions const& opts = {});

  struct FiniteQuotient {
    std::size_t                             order = 0;
    std::vector<Word>                       representatives;
    std::vector<std::vector<std::uint32_t>> multiplication;  // [i][j] = g_i g_j
    std::vector<std::uint32_t>              inverse;
    bool                                    abelian = false;
    std::optional<AbelianInvariants>        invariants;  // when abelian
  };

  // Group structure on the cosets of the trivial subgroup of `quotient`
  // (a presentation of a finite group, e.g. NormalClosureResult::quotient).
  // Throws StructureError if the table does not describe a group.
  FiniteQuotient quotient_structure(CosetTable const&   t,
                                    Presentation const& quotient);

}  // namespace vhcx
