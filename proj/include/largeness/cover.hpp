#ifndef LARGENESS_COVER_HPP_
#define LARGENESS_COVER_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "complex.hpp"
#include "words.hpp"

namespace largeness {

  // Bouquet of `rank` circles: one vertex, one loop per generator.
  TwoComplex build_bouquet(FreeGroupSpec const& spec);

  // The n-fold cyclic cover of the bouquet determined by phi mod n.
  // Vertex v is sheet v; edge (generator j, sheet v) has id (j-1)*n + v and
  // runs v -> v + phi(x_j) mod n.
  struct CoverComplex {
    struct EdgeLabel {
      int          generator;
      std::int64_t sheet;
    };

    TwoComplex             complex;
    std::int64_t           n = 1;
    FreeGroupSpec          spec;
    WeightedHom            phi;
    std::vector<EdgeLabel> edge_labels;

    std::size_t edge_id(int generator, std::int64_t sheet) const {
      return static_cast<std::size_t>(generator - 1)
                 * static_cast<std::size_t>(n)
             + static_cast<std::size_t>(sheet);
    }
  };

  // Throws std::invalid_argument on n < 1 or rank mismatch, and on a
  // non-surjective phi unless `allow_disconnected` is set.
  CoverComplex build_cyclic_cover(FreeGroupSpec const& spec,
                                  WeightedHom const&   phi,
                                  std::int64_t         n,
                                  bool                 allow_disconnected = false);

  // The lift of w starting at sheet `start`; it ends at start + phi_n(w).
  EdgePath lift_word(CoverComplex const& cover, Word const& w, std::int64_t start);

  // End sheet of a lift.
  std::int64_t lift_end(CoverComplex const& cover, Word const& w, std::int64_t start);

  enum class ExponentMode {
    sweep,  // relator carries the cover degree n as exponent
    fixed   // relator carries its own exponent m >= 2
  };

  struct Relator {
    Word         word;
    ExponentMode mode     = ExponentMode::sweep;
    std::int64_t exponent = 0;  // used when mode == fixed

    std::int64_t exponent_for(std::int64_t n) const noexcept {
      return mode == ExponentMode::sweep ? n : exponent;
    }
  };

  struct RelatorInstance {
    std::size_t  relator     = 0;
    std::int64_t exponent    = 0;
    std::int64_t start_sheet = 0;
    std::size_t  cell        = 0;
    std::int64_t phi_value   = 0;  // phi(g_i), not of the power

    bool phi_trivial() const noexcept {
      return phi_value == 0;
    }
  };

  // X_n with 2-cells attached along lifts of relator powers.
  struct QuotientComplex {
    CoverComplex                 cover;
    std::vector<Relator>         relators;  // cyclically reduced
    std::vector<RelatorInstance> instances;  // one per cell, in cell order
    bool                         dedup = true;

    TwoComplex const& complex() const noexcept {
      return cover.complex;
    }
  };

  // Number of cells kept per relator with dedup on: the index of
  // <phi_n(g)> in Z_n, i.e. gcd(n, |phi(g)|) (which is n when phi(g) = 0).
  std::int64_t collection_count(std::int64_t phi_value, std::int64_t n);

  // dedup off: one cell per (relator, start sheet).
  // dedup on:  one cell per coset of <phi_n(g)>, start sheets
  //            0, ..., collection_count - 1.
  // Relators are cyclically reduced first. Throws std::invalid_argument on an
  // empty relator, a fixed exponent < 2, or a fixed-exponent relator whose
  // lift does not close up in X_n.
  QuotientComplex build_quotient_complex(FreeGroupSpec const&  spec,
                                         std::span<Relator const> relators,
                                         WeightedHom const&    phi,
                                         std::int64_t          n,
                                         bool                  dedup);

  // Groups the cells of a dedup-off complex into collections: same relator,
  // start sheets congruent modulo gcd(n, |phi(g)|). Collections are listed in
  // order of first cell.
  std::vector<std::vector<std::size_t>> collection_partition(
      QuotientComplex const& k);

  // Equality of closed paths up to cyclic rotation.
  bool same_cycle(EdgePath const& x, EdgePath const& y);

}  // namespace largeness

#endif  // LARGENESS_COVER_HPP_
