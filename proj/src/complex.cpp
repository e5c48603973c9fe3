#include "vhcx/complex.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "vhcx/error.hpp"

namespace vhcx {

  namespace {

    void check_sides(Letter a, Letter b, Letter a2, Letter b2) {
      if (!a.is_horizontal() || !a2.is_horizontal()) {
        throw StructureError("square positions 1 and 3 must be horizontal");
      }
      if (b.is_horizontal() || b2.is_horizontal()) {
        throw StructureError("square positions 2 and 4 must be vertical");
      }
    }

    std::vector<std::string> split_ws(std::string_view line) {
      std::vector<std::string> out;
      std::istringstream       in{std::string(line)};
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    void check_names(std::vector<std::string> const& names,
                     std::set<std::string>&          seen,
                     std::size_t                     line) {
      for (auto const& nm : names) {
        if (nm.find('^') != std::string::npos
            || nm.find('*') != std::string::npos) {
          throw ParseError("invalid generator name '" + nm + "'", line);
        }
        if (!seen.insert(nm).second) {
          throw ParseError("generator '" + nm + "' declared twice", line);
        }
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Square
  ////////////////////////////////////////////////////////////////////////

  std::array<Square::Form, 4>
  Square::equivalent_forms(Form const& f) noexcept {
    auto const& [a, b, a2, b2] = f;
    return {Form{a, b, a2, b2},
            Form{a2, b2, a, b},
            Form{a.inverse(), b2.inverse(), a2.inverse(), b.inverse()},
            Form{a2.inverse(), b.inverse(), a.inverse(), b2.inverse()}};
  }

  Square::Square(Letter a, Letter b, Letter a2, Letter b2) {
    check_sides(a, b, a2, b2);
    auto forms = equivalent_forms(Form{a, b, a2, b2});
    _form      = *std::min_element(forms.begin(), forms.end());
  }

  Square canonical_square(Letter a, Letter b, Letter a2, Letter b2) {
    return Square(a, b, a2, b2);
  }

  ////////////////////////////////////////////////////////////////////////
  // SquareComplex
  ////////////////////////////////////////////////////////////////////////

  SquareComplex::SquareComplex(std::string              name,
                               std::vector<std::string> horizontal_names,
                               std::vector<std::string> vertical_names,
                               std::vector<Square>      squares)
      : _name(std::move(name)),
        _hnames(std::move(horizontal_names)),
        _vnames(std::move(vertical_names)),
        _squares(std::move(squares)) {
    if (_hnames.empty() || _vnames.empty()) {
      throw StructureError("a complex needs at least one horizontal and one "
                           "vertical generator");
    }
    for (auto const& sq : _squares) {
      for (auto x : sq.form()) {
        if (!contains(x)) {
          throw StructureError("square uses a generator index out of range");
        }
      }
    }
    std::sort(_squares.begin(), _squares.end());
    _squares.erase(std::unique(_squares.begin(), _squares.end()),
                   _squares.end());
  }

  bool SquareComplex::contains(Letter x) const noexcept {
    auto count = x.is_horizontal() ? m() : n();
    return x.index >= 1 && x.index <= count;
  }

  std::size_t SquareComplex::position(Letter x) const {
    if (!contains(x)) {
      throw StructureError("letter not in complex");
    }
    auto count = x.is_horizontal() ? m() : n();
    return (x.inverted ? count : 0) + (x.index - 1);
  }

  Letter SquareComplex::letter_at(Side s, std::size_t pos) const {
    auto count = s == Side::horizontal ? m() : n();
    if (pos >= 2 * count) {
      throw StructureError("letter position out of range");
    }
    return Letter{s,
                  static_cast<std::uint32_t>(pos % count + 1),
                  pos >= count};
  }

  std::string SquareComplex::letter_name(Letter x) const {
    auto const& nm = names(x.side);
    std::string out
        = x.index >= 1 && x.index <= nm.size()
              ? nm[x.index - 1]
              : (x.is_horizontal() ? "a" : "b") + std::to_string(x.index);
    if (x.inverted) {
      out += "^-1";
    }
    return out;
  }

  std::optional<Letter> SquareComplex::find_letter(std::string_view tok) const {
    bool inv = false;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      inv = true;
      tok.remove_suffix(3);
    }
    for (Side s : {Side::horizontal, Side::vertical}) {
      auto const& nm = names(s);
      auto        it = std::find(nm.begin(), nm.end(), tok);
      if (it != nm.end()) {
        return Letter{s, static_cast<std::uint32_t>(it - nm.begin() + 1), inv};
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Link condition
  ////////////////////////////////////////////////////////////////////////

  LinkReport check_link(SquareComplex const& c) {
    std::map<Corner, std::vector<Square>> owners;
    for (auto const& sq : c.squares()) {
      for (auto const& f : sq.forms()) {
        owners[Corner{f[0], f[1]}].push_back(sq);
      }
    }
    LinkReport rep;
    rep.corners_total = c.degree(Side::horizontal) * c.degree(Side::vertical);
    for (std::size_t i = 0; i < c.degree(Side::horizontal); ++i) {
      for (std::size_t j = 0; j < c.degree(Side::vertical); ++j) {
        Corner k{c.letter_at(Side::horizontal, i),
                 c.letter_at(Side::vertical, j)};
        auto   it = owners.find(k);
        if (it == owners.end()) {
          rep.missing_corners.push_back(k);
        } else if (it->second.size() > 1) {
          rep.duplicate_corners.push_back({k, it->second});
        } else {
          ++rep.corners_covered;
        }
      }
    }
    rep.ok = rep.missing_corners.empty() && rep.duplicate_corners.empty();
    return rep;
  }

  long long euler_characteristic(SquareComplex const& c) {
    auto m = static_cast<long long>(c.m());
    auto n = static_cast<long long>(c.n());
    return 1 - (m + n) + m * n;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subcomplexes
  ////////////////////////////////////////////////////////////////////////

  std::vector<Letter> letters_with_inverses(Side                              s,
                                            std::vector<std::uint32_t> const& idx) {
    std::vector<Letter> out;
    for (auto i : idx) {
      out.push_back(Letter{s, i, false});
      out.push_back(Letter{s, i, true});
    }
    return out;
  }

  SubcomplexReport check_subcomplex(SquareComplex const&       c,
                                    std::vector<Letter> const& hsub,
                                    std::vector<Letter> const& vsub) {
    auto normalise = [&c](std::vector<Letter> const& sub, Side s) {
      if (sub.empty()) {
        throw StructureError("subcomplex letter subset is empty");
      }
      std::set<Letter> set(sub.begin(), sub.end());
      for (auto x : set) {
        if (x.side != s || !c.contains(x)) {
          throw StructureError("subcomplex subset contains a letter of the "
                               "wrong side or out of range");
        }
        if (!set.count(x.inverse())) {
          throw StructureError("subcomplex subset is not closed under "
                               "inversion");
        }
      }
      // old index -> new index, order preserving
      std::map<std::uint32_t, std::uint32_t> reindex;
      for (auto x : set) {
        reindex.emplace(x.index, 0);
      }
      std::uint32_t next = 1;
      for (auto& [old, nw] : reindex) {
        nw = next++;
      }
      return reindex;
    };
    auto hmap = normalise(hsub, Side::horizontal);
    auto vmap = normalise(vsub, Side::vertical);

    auto remap = [&](Letter x) {
      auto const& mp = x.is_horizontal() ? hmap : vmap;
      return Letter{x.side, mp.at(x.index), x.inverted};
    };

    std::vector<Square> kept;
    for (auto const& sq : c.squares()) {
      auto const& f      = sq.form();
      bool        inside = hmap.count(f[0].index) && hmap.count(f[2].index)
                    && vmap.count(f[1].index) && vmap.count(f[3].index);
      if (inside) {
        kept.emplace_back(remap(f[0]), remap(f[1]), remap(f[2]), remap(f[3]));
      }
    }
    std::vector<std::string> hn, vn;
    for (auto const& [old, nw] : hmap) {
      hn.push_back(c.names(Side::horizontal)[old - 1]);
    }
    for (auto const& [old, nw] : vmap) {
      vn.push_back(c.names(Side::vertical)[old - 1]);
    }
    SquareComplex sub(c.name() + "_sub", std::move(hn), std::move(vn),
                      std::move(kept));
    auto          link = check_link(sub);
    bool          ok   = link.ok;
    return SubcomplexReport{ok, std::move(sub), std::move(link)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  SquareComplex parse_complex(std::string_view text) {
    std::string              name;
    std::vector<std::string> hn, vn;
    bool                     have_name = false, have_h = false, have_v = false;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> square_lines;
    std::set<std::string>                                         seen;

    std::size_t lineno = 0;
    std::size_t start  = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto line = text.substr(start, end - start);
      start     = end + 1;
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      auto tok = split_ws(line);
      if (tok.empty()) {
        if (end == text.size()) {
          break;
        }
        continue;
      }
      auto const& kw = tok[0];
      if (kw == "complex") {
        if (have_name) {
          throw ParseError("duplicate 'complex' line", lineno);
        }
        if (tok.size() != 2) {
          throw ParseError("expected 'complex <name>'", lineno);
        }
        name      = tok[1];
        have_name = true;
      } else if (kw == "horizontal" || kw == "vertical") {
        if (!have_name) {
          throw ParseError("'complex <name>' must come first", lineno);
        }
        bool  horiz = kw == "horizontal";
        auto& flag  = horiz ? have_h : have_v;
        if (flag) {
          throw ParseError("duplicate '" + kw + "' line", lineno);
        }
        if (!horiz && !have_h) {
          throw ParseError("'horizontal' must precede 'vertical'", lineno);
        }
        if (tok.size() < 2) {
          throw ParseError("'" + kw + "' declares no generators", lineno);
        }
        auto& dst = horiz ? hn : vn;
        dst.assign(tok.begin() + 1, tok.end());
        check_names(dst, seen, lineno);
        flag = true;
      } else if (kw == "square") {
        if (!have_h || !have_v) {
          throw ParseError("squares must follow the generator declarations",
                           lineno);
        }
        if (tok.size() != 5) {
          throw ParseError("a square needs exactly four letters", lineno);
        }
        square_lines.emplace_back(
            lineno, std::vector<std::string>(tok.begin() + 1, tok.end()));
      } else {
        throw ParseError("unknown keyword '" + kw + "'", lineno);
      }
      if (end == text.size()) {
        break;
      }
    }
    if (!have_name || !have_h || !have_v) {
      throw ParseError("missing 'complex', 'horizontal' or 'vertical' line");
    }

    // Build a names-only complex to resolve letters.
    SquareComplex       shell(name, hn, vn, {});
    std::vector<Square> squares;
    for (auto const& [ln, toks] : square_lines) {
      std::array<Letter, 4> xs;
      for (std::size_t i = 0; i < 4; ++i) {
        auto x = shell.find_letter(toks[i]);
        if (!x) {
          throw ParseError("undeclared generator in '" + toks[i] + "'", ln);
        }
        bool want_h = (i % 2 == 0);
        if (x->is_horizontal() != want_h) {
          throw ParseError("letter '" + toks[i] + "' in position "
                               + std::to_string(i + 1) + " must be "
                               + (want_h ? "horizontal" : "vertical"),
                           ln);
        }
        xs[i] = *x;
      }
      squares.emplace_back(xs[0], xs[1], xs[2], xs[3]);
    }
    return SquareComplex(name, hn, vn, std::move(squares));
  }

  SquareComplex read_complex_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open complex file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_complex(ss.str());
  }

  std::string render_complex(SquareComplex const& c) {
    std::ostringstream out;
    out << "complex " << c.name() << '\n';
    out << "horizontal";
    for (auto const& nm : c.names(Side::horizontal)) {
      out << ' ' << nm;
    }
    out << "\nvertical";
    for (auto const& nm : c.names(Side::vertical)) {
      out << ' ' << nm;
    }
    out << '\n';
    for (auto const& sq : c.squares()) {
      out << "square";
      for (auto x : sq.form()) {
        out << ' ' << c.letter_name(x);
      }
      out << '\n';
    }
    return out.str();
  }

}  // namespace vhcx
