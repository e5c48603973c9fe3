#pragma once

// Words over an abstract generator alphabet and finite presentations.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vhcx/complex.hpp"

namespace vhcx {

  // A freely reduced word. Letter g^e is stored as +(g+1) for e = 1 and
  // -(g+1) for e = -1, with g a 0-based generator id.
  class Word {
   public:
    using letter_type = std::int32_t;

    Word() = default;
    // Freely reduces its input.
    explicit Word(std::vector<letter_type> letters);
    Word(std::initializer_list<letter_type> letters)
        : Word(std::vector<letter_type>(letters)) {}

    static letter_type gen(std::size_t g, bool inverse = false) noexcept {
      auto v = static_cast<letter_type>(g + 1);
      return inverse ? -v : v;
    }
    static std::size_t generator_of(letter_type x) noexcept {
      return static_cast<std::size_t>(x < 0 ? -x : x) - 1;
    }

    std::vector<letter_type> const& letters() const noexcept {
      return _letters;
    }
    std::size_t length() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }

    Word inverse() const;
    Word operator*(Word const& other) const;

    // Conjugate that is cyclically reduced.
    Word cyclically_reduced() const;

    // Cyclic rotation starting at letter i.
    Word rotated(std::size_t i) const;

    // Exponent sum of generator g.
    long exponent_sum(std::size_t g) const;

    bool operator==(Word const&) const = default;
    auto operator<=>(Word const&) const = default;

   private:
    std::vector<letter_type> _letters;
  };

  std::vector<Word::letter_type> free_reduce(std::vector<Word::letter_type> w);

  class Presentation {
   public:
    Presentation() = default;
    // Relators are stored cyclically reduced.
    Presentation(std::vector<std::string> generators, std::vector<Word> relators);

    std::vector<std::string> const& generators() const noexcept {
      return _gens;
    }
    std::size_t num_generators() const noexcept {
      return _gens.size();
    }
    std::vector<Word> const& relators() const noexcept {
      return _rels;
    }
    std::size_t num_relators() const noexcept {
      return _rels.size();
    }
    std::size_t total_length() const noexcept;

    void add_relator(Word const& w);

    // Horizontal/vertical partition of the generators, when known.
    std::vector<std::optional<Side>> const& sides() const noexcept {
      return _sides;
    }
    void set_sides(std::vector<std::optional<Side>> sides);

    std::optional<std::size_t> find_generator(std::string_view name) const;

    bool operator==(Presentation const&) const = default;

   private:
    std::vector<std::string>         _gens;
    std::vector<Word>                _rels;
    std::vector<std::optional<Side>> _sides;
  };

  // "a2*a1^-1*a3*a4^-1"; factors may carry any integer exponent ("x^3",
  // "y^-2"). "", "1" and "e" denote the identity. Throws ParseError.
  Word parse_word(std::string_view text, std::vector<std::string> const& names);

  std::string format_word(Word const& w, std::vector<std::string> const& names);

  // "< g1, g2 | r1, r2 >"
  std::string format_presentation(Presentation const& p);

  // Generators a_1..a_m, b_1..b_n (with sides recorded) and one relator
  // a.b.a'.b' per canonical square.
  Presentation presentation_from_complex(SquareComplex const& c);

}  // namespace vhcx
