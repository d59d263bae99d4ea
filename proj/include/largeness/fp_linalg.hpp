#ifndef LARGENESS_FP_LINALG_HPP_
#define LARGENESS_FP_LINALG_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace largeness {

  // Residues are stored as int64 so that a product of two residues fits for
  // any p < 2^31.
  using FpScalar  = std::int64_t;
  using FpEntries = Eigen::Matrix<FpScalar, Eigen::Dynamic, Eigen::Dynamic,
                                  Eigen::RowMajor>;
  using FpVector  = Eigen::Matrix<FpScalar, Eigen::Dynamic, 1>;
  using Index     = Eigen::Index;

  bool is_prime(std::int64_t p) noexcept;

  // Inverse of a nonzero residue modulo the prime p.
  FpScalar inverse_mod(FpScalar a, FpScalar p);

  // Dense matrix over the prime field F_p.
  class FpMatrix {
   public:
    // Zero matrix. Throws std::invalid_argument if p is not a prime < 2^31.
    FpMatrix(FpScalar p, Index rows, Index cols);
    // Entries are reduced into [0, p).
    FpMatrix(FpScalar p, FpEntries entries);

    static FpMatrix identity(FpScalar p, Index n);
    // Matrix whose columns are the given vectors (all of length `rows`).
    static FpMatrix from_columns(FpScalar p,
                                 Index rows,
                                 std::span<FpVector const> columns);

    FpScalar p() const noexcept {
      return _p;
    }
    Index rows() const noexcept {
      return _m.rows();
    }
    Index cols() const noexcept {
      return _m.cols();
    }
    FpScalar operator()(Index r, Index c) const {
      return _m(r, c);
    }
    void set(Index r, Index c, FpScalar value);
    // Adds `value` (any integer) to entry (r, c) modulo p.
    void add(Index r, Index c, FpScalar value);

    FpEntries const& entries() const noexcept {
      return _m;
    }

    FpMatrix transpose() const;
    FpVector operator*(FpVector const& v) const;
    FpMatrix operator*(FpMatrix const& other) const;
    bool is_zero() const {
      return (_m.array() == 0).all();
    }

   private:
    FpScalar  _p;
    FpEntries _m;
  };

  // Reduced row echelon form with deterministic pivoting: columns are scanned
  // left to right and the first row with a nonzero entry becomes the pivot.
  struct Echelon {
    FpEntries          reduced;
    std::vector<Index> pivot_cols;
  };

  Echelon row_reduce(FpMatrix const& m);

  std::size_t rank(FpMatrix const& m);

  // Basis of {v : M v = 0}; one vector per non-pivot column.
  std::vector<FpVector> kernel_basis(FpMatrix const& m);

  // dim M(span(basis)).
  std::size_t induced_rank(FpMatrix const& m, std::span<FpVector const> basis);

  // dim(span(base ∪ extra)) - dim(span(base)) for vectors of length `dim`.
  std::size_t rank_modulo(FpScalar p,
                          Index dim,
                          std::span<FpVector const> base,
                          std::span<FpVector const> extra);

}  // namespace largeness

#endif  // LARGENESS_FP_LINALG_HPP_
