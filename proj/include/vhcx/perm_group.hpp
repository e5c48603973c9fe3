#pragma once

// Permutation groups given by generators, with a base and strong generating
// set computed by deterministic Schreier-Sims. Points are 0-based in this
// API; cycle notation and the CLI are 1-based.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vhcx/perm.hpp"

namespace vhcx {

  using BigInt = boost::multiprecision::cpp_int;

  BigInt factorial(unsigned n);

  class PermGroup {
   public:
    // One level of the stabilizer chain G = G^(0) >= G^(1) >= ... where
    // G^(i+1) is the stabilizer of `base_point` in G^(i).
    struct Level {
      point_type               base_point;
      std::vector<std::size_t> gens;  // indices into strong_generators()
      std::vector<point_type>  orbit;
      std::vector<int>         orbit_index;  // point -> position in orbit, -1
      std::vector<Permutation> transversal;  // base_point ^ u == orbit[k]
      std::vector<Permutation> transversal_inv;
      std::vector<std::size_t> checked;  // Schreier generators tested, per
                                         // orbit point (prefix of gens)
    };

    // Deterministic Schreier-Sims. base_prefix fixes the first base points;
    // further base points are the first point moved by the element needing
    // them. Throws StructureError on degree mismatch.
    PermGroup(std::size_t                    degree,
              std::vector<Permutation>       generators,
              std::vector<point_type> const& base_prefix = {});

    std::size_t degree() const noexcept {
      return _degree;
    }

    std::vector<Permutation> const& generators() const noexcept {
      return _gens;
    }

    std::vector<Permutation> const& strong_generators() const noexcept {
      return _strong;
    }

    std::vector<Level> const& levels() const noexcept {
      return _levels;
    }

    std::vector<point_type> base() const;

    BigInt const& order() const noexcept {
      return _order;
    }

    bool is_trivial() const noexcept {
      return _order == 1;
    }

    // Sifts g through the chain; true iff g is an element.
    bool contains(Permutation const& g) const;

    // Orbit of p under the generators, in discovery order.
    std::vector<point_type> orbit(point_type p) const;

    // Points moved by at least one generator, ascending.
    std::vector<point_type> moved_points() const;

    bool is_abelian() const;

    // All elements; throws Error if the order exceeds `limit`.
    std::vector<Permutation> elements(std::size_t limit) const;

   private:
    void schreier_sims(std::vector<point_type> const& base_prefix);
    void extend_orbit(Level& lvl);
    void add_level(point_type b);
    std::pair<Permutation, std::size_t> strip(Permutation g,
                                              std::size_t from) const;

    std::size_t              _degree;
    std::vector<Permutation> _gens;
    std::vector<Permutation> _strong;
    std::vector<Level>       _levels;
    BigInt                   _order;
  };

  // Transitivity on ordered k-tuples of distinct points, via the orbit
  // lengths of the stabilizer chain along the base 0, 1, ..., k-1.
  bool is_k_transitive(PermGroup const& g, std::size_t k);

  // Stabilizer of p, from the strong generators of a chain rebased at p.
  PermGroup point_stabilizer(PermGroup const& g, point_type p);

  // The same group acting on its moved points only (relabelled in order).
  PermGroup restrict_to_support(PermGroup const& g);

  enum class GroupKind { alternating, symmetric, mathieu11, mathieu12, other };

  struct Recognition {
    GroupKind   kind = GroupKind::other;
    std::size_t degree = 0;  // size of the support
    BigInt      order;

    std::string name() const;
  };

  // Identifies Alt(d), Sym(d), M11 and M12 in their natural actions on the
  // support of g.
  Recognition recognize(PermGroup const& g);

  enum class SimplicityVerdict { simple, not_simple, unknown };

  struct SimplicityResult {
    SimplicityVerdict          verdict = SimplicityVerdict::unknown;
    std::string                reason;
    std::optional<Permutation> witness;  // generates a proper normal subgroup
    std::optional<BigInt>      witness_closure_order;
  };

  constexpr std::size_t default_simplicity_bound = 100000;

  // Enumerates elements (when |g| <= bound), picks conjugacy class
  // representatives and checks that each non-identity representative has
  // normal closure g.
  SimplicityResult brute_simplicity(PermGroup const& g,
                                    std::size_t      bound
                                    = default_simplicity_bound);

  // Non-abelian simplicity: Alt(d) for d >= 5, M11 and M12 by recognition;
  // abelian groups rejected directly; otherwise brute_simplicity.
  SimplicityResult is_whitelisted_nonabelian_simple(
      PermGroup const& g,
      std::size_t      bound = default_simplicity_bound);

  // Subgroup generated by the conjugates of `gens` under g.
  PermGroup normal_closure(PermGroup const&                g,
                           std::vector<Permutation> const& gens);

  std::string to_string(SimplicityVerdict v);

}  // namespace vhcx
