#include "vhcx/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "vhcx/error.hpp"

namespace vhcx {

  Permutation Permutation::identity(std::size_t degree) {
    std::vector<point_type> img(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      img[i] = static_cast<point_type>(i);
    }
    return Permutation(std::move(img));
  }

  Permutation Permutation::from_images(std::vector<point_type> images) {
    std::vector<bool> hit(images.size(), false);
    for (auto x : images) {
      if (x >= images.size() || hit[x]) {
        throw StructureError("image array is not a bijection");
      }
      hit[x] = true;
    }
    return Permutation(std::move(images));
  }

  Permutation Permutation::from_cycles(std::string_view text,
                                       std::size_t      degree) {
    auto img = identity(degree)._img;
    std::vector<bool> used(degree, false);
    std::size_t       i = 0;
    auto              skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(') {
        throw ParseError("expected '(' in cycle notation");
      }
      ++i;
      std::vector<point_type> cycle;
      while (true) {
        skip_ws();
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
          ++j;
        }
        if (j == i) {
          throw ParseError("expected a point in cycle notation");
        }
        auto pt = std::stoul(std::string(text.substr(i, j - i)));
        if (pt < 1 || pt > degree) {
          throw ParseError("point " + std::to_string(pt) + " out of range");
        }
        if (used[pt - 1]) {
          throw ParseError("point " + std::to_string(pt)
                           + " occurs twice in cycle notation");
        }
        used[pt - 1] = true;
        cycle.push_back(static_cast<point_type>(pt - 1));
        i = j;
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
        }
      }
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        img[cycle[k]] = cycle[(k + 1) % cycle.size()];
      }
      skip_ws();
    }
    return Permutation(std::move(img));
  }

  Permutation Permutation::operator*(Permutation const& q) const {
    if (q.degree() != degree()) {
      throw StructureError("degree mismatch in permutation product");
    }
    std::vector<point_type> img(_img.size());
    for (std::size_t i = 0; i < _img.size(); ++i) {
      img[i] = q._img[_img[i]];
    }
    return Permutation(std::move(img));
  }

  Permutation Permutation::inverse() const {
    std::vector<point_type> img(_img.size());
    for (std::size_t i = 0; i < _img.size(); ++i) {
      img[_img[i]] = static_cast<point_type>(i);
    }
    return Permutation(std::move(img));
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < _img.size(); ++i) {
      if (_img[i] != i) {
        return false;
      }
    }
    return true;
  }

  bool Permutation::is_even() const {
    std::vector<bool> seen(_img.size(), false);
    std::size_t       transpositions = 0;
    for (std::size_t i = 0; i < _img.size(); ++i) {
      std::size_t len = 0;
      for (auto j = i; !seen[j]; j = _img[j]) {
        seen[j] = true;
        ++len;
      }
      if (len > 0) {
        transpositions += len - 1;
      }
    }
    return transpositions % 2 == 0;
  }

  std::optional<point_type> Permutation::first_moved_point() const noexcept {
    for (std::size_t i = 0; i < _img.size(); ++i) {
      if (_img[i] != i) {
        return static_cast<point_type>(i);
      }
    }
    return std::nullopt;
  }

  std::string Permutation::to_cycles() const {
    std::ostringstream out;
    std::vector<bool>  seen(_img.size(), false);
    for (std::size_t i = 0; i < _img.size(); ++i) {
      if (seen[i] || _img[i] == i) {
        continue;
      }
      out << '(';
      for (auto j = i;; ) {
        seen[j] = true;
        out << j + 1;
        j = _img[j];
        if (j == i) {
          break;
        }
        out << ',';
      }
      out << ')';
    }
    auto s = out.str();
    return s.empty() ? "()" : s;
  }

  std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : p.images()) {
      h = (h ^ x) * 1099511628211ULL;
    }
    return h;
  }

}  // namespace vhcx
