#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vhcx {

  using point_type = std::uint32_t;

  // A permutation of {0, ..., degree-1} acting on the right: the image of i
  // under p*q is (i^p)^q. Externally (cycle notation) points are 1-based.
  class Permutation {
   public:
    Permutation() = default;

    static Permutation identity(std::size_t degree);

    // Throws StructureError unless images is a bijection of [0, size).
    static Permutation from_images(std::vector<point_type> images);

    // Parses "(1,2)(4,5)(6,8,7)" (1-based). "()" is the identity.
    static Permutation from_cycles(std::string_view text, std::size_t degree);

    std::size_t degree() const noexcept {
      return _img.size();
    }

    point_type operator[](point_type i) const noexcept {
      return _img[i];
    }

    std::span<point_type const> images() const noexcept {
      return _img;
    }

    Permutation operator*(Permutation const& q) const;
    Permutation inverse() const;

    bool                      is_identity() const noexcept;
    bool                      is_even() const;
    std::optional<point_type> first_moved_point() const noexcept;

    // Disjoint cycle notation with 1-based points, "()" for the identity.
    std::string to_cycles() const;

    bool operator==(Permutation const&) const = default;
    auto operator<=>(Permutation const&) const = default;

   private:
    explicit Permutation(std::vector<point_type> img) : _img(std::move(img)) {}

    std::vector<point_type> _img;
  };

  struct PermutationHash {
    std::size_t operator()(Permutation const& p) const noexcept;
  };

}  // namespace vhcx
