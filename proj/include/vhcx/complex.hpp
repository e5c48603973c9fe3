#pragma once

// One-vertex VH square complexes: two alphabets of oriented loops
// (horizontal a_1..a_m, vertical b_1..b_n) and squares a.b.a'.b' glued along
// them. A complex whose vertex link is the complete bipartite graph
// K_{2m,2n} has universal cover T_{2m} x T_{2n}.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vhcx {

  enum class Side : std::uint8_t { horizontal = 0, vertical = 1 };

  constexpr Side opposite(Side s) noexcept {
    return s == Side::horizontal ? Side::vertical : Side::horizontal;
  }

  // An oriented edge of the 1-skeleton. Ordering is (side, index, inverted),
  // which is the order used to pick canonical square representatives.
  struct Letter {
    Side          side     = Side::horizontal;
    std::uint32_t index    = 1;  // 1-based
    bool          inverted = false;

    constexpr Letter inverse() const noexcept {
      return Letter{side, index, !inverted};
    }

    constexpr bool is_horizontal() const noexcept {
      return side == Side::horizontal;
    }

    auto operator<=>(Letter const&) const = default;
  };

  constexpr Letter hletter(std::uint32_t i, bool inv = false) noexcept {
    return Letter{Side::horizontal, i, inv};
  }

  constexpr Letter vletter(std::uint32_t i, bool inv = false) noexcept {
    return Letter{Side::vertical, i, inv};
  }

  using Corner = std::pair<Letter, Letter>;  // (horizontal, vertical)

  // A geometric square with boundary a.b.a'.b', stored as its canonical
  // representative: the least of the four boundary readings
  //   (a,b,a',b'), (a',b',a,b), (a^-1,b'^-1,a'^-1,b^-1), (a'^-1,b^-1,a^-1,b'^-1).
  class Square {
   public:
    using Form = std::array<Letter, 4>;

    Square(Letter a, Letter b, Letter a2, Letter b2);

    Letter a() const noexcept {
      return _form[0];
    }
    Letter b() const noexcept {
      return _form[1];
    }
    Letter a2() const noexcept {
      return _form[2];
    }
    Letter b2() const noexcept {
      return _form[3];
    }

    Form const& form() const noexcept {
      return _form;
    }

    // The four readings of the boundary, starting with the canonical one.
    std::array<Form, 4> forms() const noexcept {
      return equivalent_forms(_form);
    }

    static std::array<Form, 4> equivalent_forms(Form const& f) noexcept;

    auto operator<=>(Square const&) const = default;

   private:
    Form _form;
  };

  // Throws StructureError if a, a' are not horizontal or b, b' not vertical.
  Square canonical_square(Letter a, Letter b, Letter a2, Letter b2);

  class SquareComplex {
   public:
    SquareComplex(std::string              name,
                  std::vector<std::string> horizontal_names,
                  std::vector<std::string> vertical_names,
                  std::vector<Square>      squares);

    std::string const& name() const noexcept {
      return _name;
    }

    std::size_t m() const noexcept {
      return _hnames.size();
    }

    std::size_t n() const noexcept {
      return _vnames.size();
    }

    // Number of letters on one side: 2m or 2n.
    std::size_t degree(Side s) const noexcept {
      return 2 * (s == Side::horizontal ? m() : n());
    }

    // Sorted, duplicate-free canonical squares.
    std::vector<Square> const& squares() const noexcept {
      return _squares;
    }

    std::vector<std::string> const& names(Side s) const noexcept {
      return s == Side::horizontal ? _hnames : _vnames;
    }

    bool contains(Letter x) const noexcept;

    // Position of a letter in the order x_1 < ... < x_k < x_1^-1 < ... < x_k^-1
    // of its side; this is the labeling used for sphere points.
    std::size_t position(Letter x) const;
    Letter      letter_at(Side s, std::size_t pos) const;

    // "a1", "b3^-1", ...
    std::string letter_name(Letter x) const;

    // Resolves a token such as "a2" or "b1^-1"; nullopt if undeclared.
    std::optional<Letter> find_letter(std::string_view token) const;

    bool operator==(SquareComplex const&) const = default;

   private:
    std::string              _name;
    std::vector<std::string> _hnames;
    std::vector<std::string> _vnames;
    std::vector<Square>      _squares;
  };

  struct DuplicateCorner {
    Corner              corner;
    std::vector<Square> squares;  // one entry per reading through the corner
  };

  struct LinkReport {
    bool                         ok = false;
    std::size_t                  corners_total   = 0;  // 4mn
    std::size_t                  corners_covered = 0;
    std::vector<Corner>          missing_corners;
    std::vector<DuplicateCorner> duplicate_corners;
  };

  // Exact-cover test: every (a,b) in A x B must be the leading corner of
  // exactly one boundary reading of exactly one square.
  LinkReport check_link(SquareComplex const& c);

  // 1 - (m+n) + mn.
  long long euler_characteristic(SquareComplex const& c);

  struct SubcomplexReport {
    bool          ok = false;
    SquareComplex sub;
    LinkReport    link;
  };

  // Keeps the squares of c whose letters all lie in the given (inversion
  // closed) subsets, reindexes the surviving generators in order, and checks
  // the link condition of the result. Throws StructureError when a subset is
  // empty or not closed under inversion.
  SubcomplexReport check_subcomplex(SquareComplex const&       c,
                                    std::vector<Letter> const& hsub,
                                    std::vector<Letter> const& vsub);

  // Subset of all letters x^{+-1} for the given (1-based) generator indices.
  std::vector<Letter> letters_with_inverses(Side                              s,
                                            std::vector<std::uint32_t> const& idx);

  SquareComplex parse_complex(std::string_view text);
  SquareComplex read_complex_file(std::string const& path);
  std::string   render_complex(SquareComplex const& c);

}  // namespace vhcx
