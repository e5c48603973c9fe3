#pragma once

// Local actions of the generators of a (2m,2n)-group on finite spheres of the
// two trees. A horizontal letter a fixes the base vertex of the vertical tree
// T_{2n} and permutes its k-sphere; the groups generated this way are the
// local groups P_v^(k). Symmetrically vertical letters give P_h^(k).
//
// Sphere points are reduced words over the letters of one side, enumerated
// lexicographically with letters ordered x_1 < ... < x_k < x_1^-1 < ... .

#include <cstddef>
#include <vector>

#include "vhcx/complex.hpp"
#include "vhcx/perm.hpp"
#include "vhcx/perm_group.hpp"

namespace vhcx {

  constexpr std::size_t default_max_sphere_depth = 3;

  struct LocalPerm {
    Letter              actor;
    Side                point_side;  // opposite(actor.side)
    std::vector<Letter> depth1;      // indexed by SquareComplex::position
    std::vector<Letter> residual;    // letters on the actor's side

    Letter map(SquareComplex const& c, Letter x) const {
      return depth1[c.position(x)];
    }
    Letter residual_of(SquareComplex const& c, Letter x) const {
      return residual[c.position(x)];
    }

    // depth1 as a permutation of the 2n (or 2m) letter positions.
    Permutation as_permutation(SquareComplex const& c) const;
  };

  // For the square reading a.b.a'.b' with corner (a, b):
  // b -> b'^-1 and the action continues with a'^-1, since a.b = b'^-1.a'^-1.
  // Throws StructureError when a corner is missing.
  LocalPerm vertical_local_perm(SquareComplex const& c, Letter a);

  // For the cyclic reading b.a'.b'.a: a' -> a^-1, continuing with b'^-1.
  LocalPerm horizontal_local_perm(SquareComplex const& c, Letter b);

  // Dispatches on the side of the actor.
  LocalPerm local_perm(SquareComplex const& c, Letter actor);

  class SphereIndex {
   public:
    // d letters on the side (even), words of length k >= 1.
    SphereIndex(std::size_t d, std::size_t k);

    std::size_t size() const noexcept {
      return _size;
    }
    std::size_t depth() const noexcept {
      return _k;
    }
    std::size_t letters() const noexcept {
      return _d;
    }

    // Words are sequences of letter positions in [0, d).
    std::vector<std::size_t> word(std::size_t index) const;
    std::size_t              index(std::vector<std::size_t> const& word) const;

    std::size_t inverse_position(std::size_t p) const noexcept {
      return (p + _d / 2) % _d;
    }

   private:
    std::size_t _d;
    std::size_t _k;
    std::size_t _size;
  };

  // rho_x(w_1 w_2 ... w_k) = depth1_x(w_1) rho_{residual_x(w_1)}(w_2 ... w_k).
  // Throws StructureError if k == 0 or k > max_depth.
  Permutation sphere_action(SquareComplex const& c,
                            Letter               x,
                            std::size_t          k,
                            std::size_t          max_depth
                            = default_max_sphere_depth);

  // Generators of P_side^(k): sphere actions of the base letters of the
  // opposite side (b_1..b_n for the horizontal side, a_1..a_m for vertical).
  std::vector<Permutation> local_generators(SquareComplex const& c,
                                            Side                 side,
                                            std::size_t          k,
                                            std::size_t          max_depth
                                            = default_max_sphere_depth);

  PermGroup local_group(SquareComplex const& c,
                        Side                 side,
                        std::size_t          k,
                        std::size_t          max_depth = default_max_sphere_depth);

  // Words of the sphere rendered with the complex's generator names, in
  // label order (label i+1 is element i).
  std::vector<std::string> sphere_labels(SquareComplex const& c,
                                         Side                 side,
                                         std::size_t          k);

}  // namespace vhcx
