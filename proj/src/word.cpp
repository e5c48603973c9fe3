#include "vhcx/word.hpp"

#include <algorithm>
#include <cctype>

#include "vhcx/error.hpp"

namespace vhcx {

  std::vector<Word::letter_type> free_reduce(std::vector<Word::letter_type> w) {
    std::vector<Word::letter_type> out;
    out.reserve(w.size());
    for (auto x : w) {
      if (x == 0) {
        throw StructureError("0 is not a valid word letter");
      }
      if (!out.empty() && out.back() == -x) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  Word::Word(std::vector<letter_type> letters)
      : _letters(free_reduce(std::move(letters))) {}

  Word Word::inverse() const {
    std::vector<letter_type> out(_letters.rbegin(), _letters.rend());
    for (auto& x : out) {
      x = -x;
    }
    Word w;
    w._letters = std::move(out);
    return w;
  }

  Word Word::operator*(Word const& other) const {
    auto out = _letters;
    out.insert(out.end(), other._letters.begin(), other._letters.end());
    return Word(std::move(out));
  }

  Word Word::cyclically_reduced() const {
    std::size_t i = 0, j = _letters.size();
    while (j - i >= 2 && _letters[i] == -_letters[j - 1]) {
      ++i;
      --j;
    }
    Word w;
    w._letters.assign(_letters.begin() + i, _letters.begin() + j);
    return w;
  }

  Word Word::rotated(std::size_t i) const {
    if (_letters.empty()) {
      return *this;
    }
    i %= _letters.size();
    std::vector<letter_type> out(_letters.begin() + i, _letters.end());
    out.insert(out.end(), _letters.begin(), _letters.begin() + i);
    return Word(std::move(out));
  }

  long Word::exponent_sum(std::size_t g) const {
    long s = 0;
    for (auto x : _letters) {
      if (generator_of(x) == g) {
        s += x > 0 ? 1 : -1;
      }
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  Presentation::Presentation(std::vector<std::string> generators,
                             std::vector<Word>        relators)
      : _gens(std::move(generators)), _sides(_gens.size()) {
    for (auto const& r : relators) {
      add_relator(r);
    }
  }

  void Presentation::add_relator(Word const& w) {
    for (auto x : w.letters()) {
      if (Word::generator_of(x) >= _gens.size()) {
        throw StructureError("relator uses an undeclared generator");
      }
    }
    _rels.push_back(w.cyclically_reduced());
  }

  void Presentation::set_sides(std::vector<std::optional<Side>> sides) {
    if (sides.size() != _gens.size()) {
      throw StructureError("side list does not match generator count");
    }
    _sides = std::move(sides);
  }

  std::size_t Presentation::total_length() const noexcept {
    std::size_t t = 0;
    for (auto const& r : _rels) {
      t += r.length();
    }
    return t;
  }

  std::optional<std::size_t>
  Presentation::find_generator(std::string_view name) const {
    auto it = std::find(_gens.begin(), _gens.end(), name);
    if (it == _gens.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _gens.begin());
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  Word parse_word(std::string_view text, std::vector<std::string> const& names) {
    std::string s;
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) {
        s += ch;
      }
    }
    if (s.empty() || s == "1" || s == "e") {
      return Word();
    }
    std::vector<Word::letter_type> out;
    std::size_t                    start = 0;
    while (start <= s.size()) {
      auto end = s.find('*', start);
      if (end == std::string::npos) {
        end = s.size();
      }
      auto factor = std::string_view(s).substr(start, end - start);
      if (factor.empty()) {
        throw ParseError("empty factor in word '" + std::string(text) + "'");
      }
      long exponent = 1;
      if (auto caret = factor.find('^'); caret != std::string_view::npos) {
        auto        ex = std::string(factor.substr(caret + 1));
        std::size_t used = 0;
        try {
          exponent = std::stol(ex, &used);
        } catch (std::exception const&) {
          used = 0;
        }
        if (used == 0 || used != ex.size()) {
          throw ParseError("bad exponent '" + ex + "'");
        }
        factor = factor.substr(0, caret);
      }
      auto it = std::find(names.begin(), names.end(), factor);
      if (it == names.end()) {
        throw ParseError("unknown generator '" + std::string(factor) + "'");
      }
      auto g = static_cast<std::size_t>(it - names.begin());
      for (long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) {
        out.push_back(Word::gen(g, exponent < 0));
      }
      start = end + 1;
      if (end == s.size()) {
        break;
      }
    }
    return Word(std::move(out));
  }

  std::string format_word(Word const& w, std::vector<std::string> const& names) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    auto const& xs = w.letters();
    for (std::size_t i = 0; i < xs.size();) {
      auto j = i;
      while (j < xs.size() && xs[j] == xs[i]) {
        ++j;
      }
      if (!out.empty()) {
        out += '*';
      }
      out += names.at(Word::generator_of(xs[i]));
      auto run = static_cast<long>(j - i) * (xs[i] < 0 ? -1 : 1);
      if (run != 1) {
        out += "^" + std::to_string(run);
      }
      i = j;
    }
    return out;
  }

  std::string format_presentation(Presentation const& p) {
    std::string out = "< ";
    for (std::size_t i = 0; i < p.num_generators(); ++i) {
      out += (i ? ", " : "") + p.generators()[i];
    }
    out += " | ";
    for (std::size_t i = 0; i < p.num_relators(); ++i) {
      out += (i ? ", " : "") + format_word(p.relators()[i], p.generators());
    }
    out += " >";
    return out;
  }

  Presentation presentation_from_complex(SquareComplex const& c) {
    std::vector<std::string>         names;
    std::vector<std::optional<Side>> sides;
    for (auto const& nm : c.names(Side::horizontal)) {
      names.push_back(nm);
      sides.emplace_back(Side::horizontal);
    }
    for (auto const& nm : c.names(Side::vertical)) {
      names.push_back(nm);
      sides.emplace_back(Side::vertical);
    }
    auto id = [&c](Letter x) {
      auto g = (x.is_horizontal() ? 0 : c.m()) + x.index - 1;
      return Word::gen(g, x.inverted);
    };
    std::vector<Word> rels;
    for (auto const& sq : c.squares()) {
      auto const& f = sq.form();
      rels.emplace_back(Word{id(f[0]), id(f[1]), id(f[2]), id(f[3])});
    }
    Presentation p(std::move(names), std::move(rels));
    p.set_sides(std::move(sides));
    return p;
  }

}  // namespace vhcx
