#ifndef LARGENESS_SPLIT_HPP_
#define LARGENESS_SPLIT_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "complex.hpp"
#include "cover.hpp"
#include "fp_linalg.hpp"

namespace largeness {

  // K̄_n = A ∪ B for the standard phi.
  //
  // The circle edge e_j runs from sheet j to j+1. The cut points P are the
  // midpoints of e_0 and e_h with h = ceil(n/2); A owns sheets 1..h, the
  // circle edges between them, the half-edges next to them and every loop at
  // them. B owns the rest. A 2-cell whose attaching path passes through P is
  // coned from a fresh centre: each sector goes to the side of its boundary
  // arc and the radial edges lie in A ∩ B.
  struct Decomposition {
    struct CellSplit {
      std::size_t              instance  = 0;
      std::size_t              crossings = 0;  // passages through P
      bool                     phi_trivial = false;
      std::size_t              centre    = 0;  // valid when crossings > 0
      std::vector<std::size_t> radial_edges;
      std::vector<std::size_t> sectors;  // or the whole cell
    };

    QuotientComplex            source;
    TwoComplex                 subdivided;
    std::int64_t               n    = 0;
    std::int64_t               half = 0;  // ceil(n/2)
    std::array<std::size_t, 2> cut_points{};
    Subcomplex                 a;
    Subcomplex                 b;
    Subcomplex                 gamma;
    std::vector<CellSplit>     crossing_log;  // per relator instance

    Subcomplex intersection() const {
      return intersect(a, b);
    }
  };

  // Throws std::invalid_argument unless phi is standard and n >= 3.
  Decomposition build_split(QuotientComplex const& k);

  struct CrossingCounts {
    std::vector<std::size_t> per_instance;
    std::size_t              total_non_trivial = 0;
    std::size_t              total             = 0;
  };

  CrossingCounts crossing_count(Decomposition const& d);

  // The graph Γ_n: P, the radial stars of the phi-non-trivial cells, and the
  // X_n edges on the boundary of every phi-trivial cell that meets P.
  Subcomplex build_gamma(Decomposition const& d);

  // Σ over phi-non-trivial relators of |phi(g)|^2 (4 Δ(g) + 6) len(g): at
  // most (4Δ+6)|phi| windows of one period of g^n come within Δ+1 of a cut
  // edge, each window crosses at most len(g) times, and there are at most
  // |phi| cells per relator.
  std::int64_t crossing_bound(QuotientComplex const& k);

  struct ClaimsReport {
    std::int64_t n    = 0;
    FpScalar     p    = 2;
    int          rank = 2;

    std::size_t dp_x_n   = 0;
    std::size_t dp_k_bar = 0;
    std::size_t dp_gamma = 0;
    std::size_t gamma_edges = 0;

    std::size_t  crossings_non_trivial = 0;
    std::int64_t crossing_bound        = 0;
    std::int64_t sum_abs_phi           = 0;

    std::size_t kernel_to_intersection = 0;  // ker H^1(K̄) -> H^1(A∩B)
    std::size_t kernel_to_gamma        = 0;  // ker H^1(K̄) -> H^1(Γ)
    std::size_t kernel_a               = 0;  // ker H^1(A) -> H^1(A∩B)
    std::size_t kernel_b               = 0;  // ker H^1(B) -> H^1(A∩B)
    std::size_t h0_intersection        = 0;
    std::size_t components_intersection = 0;

    bool c1 = false;
    bool c2 = false;
    bool c3 = false;
    bool c4 = false;
    bool c5 = false;
    bool c6 = false;

    std::int64_t c3_lower_bound() const noexcept {
      return n * (rank - 1) + 1 - sum_abs_phi;
    }
    std::int64_t c6_upper_bound() const noexcept {
      return (n + 1) / 2 * (rank - 1) + 2;
    }
    // Recomputes c1..c6 from the numeric fields.
    void evaluate();
    bool all_hold() const noexcept {
      return c1 && c2 && c3 && c4 && c5 && c6;
    }
  };

  // Throws std::invalid_argument if p is not prime or does not divide n.
  ClaimsReport verify_claims(Decomposition const& d, FpScalar p);

}  // namespace largeness

#endif  // LARGENESS_SPLIT_HPP_
