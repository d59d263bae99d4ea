#include "largeness/homology.hpp"

#include <stdexcept>

namespace largeness {

  ChainComplexFp boundary_matrices(TwoComplex const& k, FpScalar p) {
    auto const V = static_cast<Index>(k.num_vertices());
    auto const E = static_cast<Index>(k.num_edges());
    auto const C = static_cast<Index>(k.num_cells());
    ChainComplexFp cc{p, FpMatrix(p, V, E), FpMatrix(p, E, C)};
    for (Index e = 0; e < E; ++e) {
      auto const& edge = k.edge(static_cast<std::size_t>(e));
      cc.boundary1.add(static_cast<Index>(edge.dst), e, 1);
      cc.boundary1.add(static_cast<Index>(edge.src), e, -1);
    }
    for (Index c = 0; c < C; ++c) {
      for (auto const& s : k.cell(static_cast<std::size_t>(c)).boundary) {
        cc.boundary2.add(static_cast<Index>(s.edge), c, s.orientation);
      }
    }
    return cc;
  }

  std::size_t d_p(TwoComplex const& k, FpScalar p) {
    auto const cc = boundary_matrices(k, p);
    return k.num_edges() - rank(cc.boundary1) - rank(cc.boundary2);
  }

  std::size_t h0_dim(TwoComplex const& k, FpScalar p) {
    auto const cc = boundary_matrices(k, p);
    return k.num_vertices() - rank(cc.boundary1);
  }

  std::size_t h2_dim(TwoComplex const& k, FpScalar p) {
    auto const cc = boundary_matrices(k, p);
    return k.num_cells() - rank(cc.boundary2);
  }

  CohomologyBasis h1_basis(TwoComplex const& k, FpScalar p) {
    auto const cc  = boundary_matrices(k, p);
    auto const E   = static_cast<Index>(k.num_edges());
    // Cocycles: z with z . boundary2 = 0.
    auto const cocycles = kernel_basis(cc.boundary2.transpose());
    // Coboundaries: columns of boundary1^T.
    auto const delta0 = cc.boundary1.transpose();

    CohomologyBasis out;
    for (Index v = 0; v < delta0.cols(); ++v) {
      out.coboundaries.emplace_back(delta0.entries().col(v));
    }
    // In [B^1 | Z^1] a cocycle column is a pivot exactly when it is
    // independent of everything to its left.
    std::vector<FpVector> stacked = out.coboundaries;
    stacked.insert(stacked.end(), cocycles.begin(), cocycles.end());
    auto const e = row_reduce(FpMatrix::from_columns(p, E, stacked));
    auto const first_cocycle = static_cast<Index>(out.coboundaries.size());
    for (auto c : e.pivot_cols) {
      if (c >= first_cocycle) {
        out.representatives.push_back(
            cocycles[static_cast<std::size_t>(c - first_cocycle)]);
      }
    }
    return out;
  }

  std::size_t restriction_kernel_dim(TwoComplex const& k,
                                     Subcomplex const& l,
                                     FpScalar          p) {
    auto const sub   = subcomplex(k, l);
    auto const basis = h1_basis(k, p);
    auto const El    = static_cast<Index>(sub.complex.num_edges());

    std::vector<FpVector> restricted;
    restricted.reserve(basis.representatives.size());
    for (auto const& z : basis.representatives) {
      FpVector r(El);
      for (Index i = 0; i < El; ++i) {
        r(i) = z(static_cast<Index>(sub.edge_map[static_cast<std::size_t>(i)]));
      }
      restricted.push_back(std::move(r));
    }
    auto const delta0 = boundary_matrices(sub.complex, p).boundary1.transpose();
    std::vector<FpVector> coboundaries;
    for (Index v = 0; v < delta0.cols(); ++v) {
      coboundaries.emplace_back(delta0.entries().col(v));
    }
    auto const image = rank_modulo(p, El, coboundaries, restricted);
    return basis.representatives.size() - image;
  }

  std::size_t restriction_kernel_dim_via_pair(TwoComplex const& k,
                                              Subcomplex const& l,
                                              FpScalar          p) {
    if (!l.is_closed_in(k)) {
      throw std::invalid_argument("selection is not a closed subcomplex");
    }
    // Relative chains: cells of K not in L.
    auto relative_index = [](std::vector<bool> const& in_l) {
      std::vector<Index> idx(in_l.size(), -1);
      Index              n = 0;
      for (std::size_t i = 0; i < in_l.size(); ++i) {
        if (!in_l[i]) {
          idx[i] = n++;
        }
      }
      return std::pair{idx, n};
    };
    auto const [vidx, Vr] = relative_index(l.vertices);
    auto const [eidx, Er] = relative_index(l.edges);
    auto const [cidx, Cr] = relative_index(l.cells);

    FpMatrix d1(p, Vr, Er), d2(p, Er, Cr);
    for (std::size_t e = 0; e < k.num_edges(); ++e) {
      if (eidx[e] < 0) {
        continue;
      }
      auto const& edge = k.edge(e);
      if (vidx[edge.dst] >= 0) {
        d1.add(vidx[edge.dst], eidx[e], 1);
      }
      if (vidx[edge.src] >= 0) {
        d1.add(vidx[edge.src], eidx[e], -1);
      }
    }
    for (std::size_t c = 0; c < k.num_cells(); ++c) {
      if (cidx[c] < 0) {
        continue;
      }
      for (auto const& s : k.cell(c).boundary) {
        if (eidx[s.edge] >= 0) {
          d2.add(eidx[s.edge], cidx[c], s.orientation);
        }
      }
    }
    auto const r1  = rank(d1);
    auto const r2  = rank(d2);
    auto const h0r = static_cast<std::size_t>(Vr) - r1;
    auto const h1r = static_cast<std::size_t>(Er) - r1 - r2;

    auto const sub = subcomplex(k, l);
    auto const h0l = h0_dim(sub.complex, p);
    auto const h0k = h0_dim(k, p);
    // 0 -> H^0(K,L) -> H^0(K) -> H^0(L) -> H^1(K,L) -> H^1(K) -> H^1(L)
    return h1r + h0k - h0l - h0r;
  }

}  // namespace largeness
