#ifndef LARGENESS_HOMOLOGY_HPP_
#define LARGENESS_HOMOLOGY_HPP_

#include <cstdint>
#include <vector>

#include "complex.hpp"
#include "fp_linalg.hpp"

namespace largeness {

  // Cellular chain complex of a 2-complex with F_p coefficients.
  //   boundary2 : C_2 -> C_1  (edges x cells), signed traversal counts
  //   boundary1 : C_1 -> C_0  (vertices x edges), dst - src
  struct ChainComplexFp {
    FpScalar p;
    FpMatrix boundary1;
    FpMatrix boundary2;
  };

  ChainComplexFp boundary_matrices(TwoComplex const& k, FpScalar p);

  // dim H_1(K; F_p) = dim H^1(K; F_p).
  std::size_t d_p(TwoComplex const& k, FpScalar p);
  std::size_t h0_dim(TwoComplex const& k, FpScalar p);
  std::size_t h2_dim(TwoComplex const& k, FpScalar p);

  // Cocycle representatives of a basis of H^1(K; F_p), as vectors on edges.
  struct CohomologyBasis {
    std::vector<FpVector> representatives;
    std::vector<FpVector> coboundaries;  // spans B^1
  };

  CohomologyBasis h1_basis(TwoComplex const& k, FpScalar p);

  // dim ker(H^1(K; F_p) -> H^1(L; F_p)) for the inclusion of a closed
  // subcomplex L. Throws std::invalid_argument if L is not closed.
  std::size_t restriction_kernel_dim(TwoComplex const& k,
                                     Subcomplex const& l,
                                     FpScalar          p);

  // Same quantity through the long exact sequence of the pair (K, L):
  //   dim H^1(K,L) - h0(L) + h0(K) - dim H^0(K,L),
  // with relative groups computed from the quotient chain complex. Shares no
  // code path with restriction_kernel_dim beyond rank().
  std::size_t restriction_kernel_dim_via_pair(TwoComplex const& k,
                                              Subcomplex const& l,
                                              FpScalar          p);

}  // namespace largeness

#endif  // LARGENESS_HOMOLOGY_HPP_
