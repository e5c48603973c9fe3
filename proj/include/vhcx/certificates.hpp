#pragma once

// Machine-checked chains of verdicts about the fundamental group of a
// one-vertex square complex.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vhcx/complex.hpp"
#include "vhcx/perm_group.hpp"
#include "vhcx/todd_coxeter.hpp"
#include "vhcx/word.hpp"

namespace vhcx {

  using json = nlohmann::ordered_json;

  enum class Verdict { pass, fail, criterion_inapplicable, exhausted, skipped };

  std::string to_string(Verdict v);

  struct IrreducibilityResult {
    Verdict     verdict = Verdict::criterion_inapplicable;
    std::string reason;
    std::optional<Recognition> sphere1;  // P_v^(1)
    BigInt      order;                   // |P_v^(2)|, when computed
    BigInt      target;                  // |A_2n| * |A_{2n-1}|^{2n}

    json to_json() const;
  };

  // |A_2n| * |A_{2n-1}|^{2n}
  BigInt irreducibility_target(std::size_t n);

  IrreducibilityResult irreducibility_check(SquareComplex const& c);

  struct SideHypotheses {
    Side             side = Side::horizontal;
    Recognition      group;
    bool             two_transitive = false;
    Recognition      stabilizer;
    SimplicityResult stabilizer_simple;

    json to_json() const;
  };

  struct NstResult {
    Verdict                     verdict = Verdict::fail;
    std::string                 reason;
    IrreducibilityResult        irreducibility;
    std::vector<SideHypotheses> sides;

    json to_json() const;
  };

  NstResult nst_check(SquareComplex const& c,
                      std::size_t          simplicity_bound = default_simplicity_bound);

  struct CertificateStep {
    std::string name;
    Verdict     verdict = Verdict::skipped;
    json        values  = json::object();
    std::string citation;
  };

  struct CertificateOptions {
    EnumerationOptions         enumeration;
    std::size_t                simplicity_bound = default_simplicity_bound;
    // Generators (1-based) spanning the embedded copy of the reference
    // complex delta.vh.
    std::vector<std::uint32_t> delta_horizontal{1, 2, 3, 4};
    std::vector<std::uint32_t> delta_vertical{1, 2, 3};
  };

  struct Certificate {
    std::string                  complex;
    std::vector<CertificateStep> steps;
    std::vector<std::string>     assumptions;
    std::string                  conclusion;
    bool                         simple = false;
    std::optional<std::size_t>   index;

    // First step whose verdict stopped the chain, if any.
    std::optional<CertificateStep> failing_step() const;

    json to_json() const;
  };

  extern std::string const conclusion_gamma0;
  extern std::string const conclusion_nst;
  extern std::string const assumption_nrf;

  // Steps: check_link, check_subcomplex, nst_check, normal_closure_index,
  // identification. Simplicity is concluded only with `assume_nrf`.
  Certificate simplicity_certificate(SquareComplex const&      c,
                                     Word const&               w,
                                     bool                      assume_nrf,
                                     CertificateOptions const& opts = {});

  struct AmalgamDecomposition {
    std::uint64_t vertex_rank = 0;
    std::uint64_t edge_rank   = 0;
    std::uint64_t edge_index  = 0;

    bool operator==(AmalgamDecomposition const&) const = default;
  };

  // One splitting per tree factor; throws Error if the Euler check fails.
  std::pair<AmalgamDecomposition, AmalgamDecomposition>
  amalgam_ranks(std::uint64_t m, std::uint64_t n);

  // 2(1 - r_vertex) - (1 - r_edge) == 4 (1 - (m+n) + mn)
  bool amalgam_euler_consistent(AmalgamDecomposition const& d,
                                std::uint64_t               m,
                                std::uint64_t               n);

}  // namespace vhcx
