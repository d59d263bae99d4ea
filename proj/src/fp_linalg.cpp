#include "largeness/fp_linalg.hpp"

#include <stdexcept>
#include <string>

namespace largeness {

  namespace {
    constexpr FpScalar max_modulus = FpScalar{1} << 31;

    FpScalar reduce_mod(FpScalar x, FpScalar p) noexcept {
      auto r = x % p;
      return r < 0 ? r + p : r;
    }

    void check_modulus(FpScalar p) {
      if (p >= max_modulus || !is_prime(p)) {
        throw std::invalid_argument("modulus " + std::to_string(p)
                                    + " is not a prime below 2^31");
      }
    }
  }  // namespace

  bool is_prime(std::int64_t p) noexcept {
    if (p < 2) {
      return false;
    }
    for (std::int64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        return false;
      }
    }
    return true;
  }

  FpScalar inverse_mod(FpScalar a, FpScalar p) {
    // Extended Euclid.
    FpScalar r0 = p, r1 = reduce_mod(a, p), s0 = 0, s1 = 1;
    if (r1 == 0) {
      throw std::domain_error("zero has no inverse mod p");
    }
    while (r1 != 0) {
      FpScalar q = r0 / r1;
      FpScalar t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t  = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    return reduce_mod(s0, p);
  }

  FpMatrix::FpMatrix(FpScalar p, Index rows, Index cols)
      : _p(p), _m(FpEntries::Zero(rows, cols)) {
    check_modulus(p);
  }

  FpMatrix::FpMatrix(FpScalar p, FpEntries entries)
      : _p(p), _m(std::move(entries)) {
    check_modulus(p);
    _m = _m.unaryExpr([p](FpScalar x) { return reduce_mod(x, p); });
  }

  FpMatrix FpMatrix::identity(FpScalar p, Index n) {
    return FpMatrix(p, FpEntries::Identity(n, n));
  }

  FpMatrix FpMatrix::from_columns(FpScalar                  p,
                                  Index                     rows,
                                  std::span<FpVector const> columns) {
    FpEntries m(rows, static_cast<Index>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) {
        throw std::invalid_argument("column length mismatch");
      }
      m.col(static_cast<Index>(j)) = columns[j];
    }
    return FpMatrix(p, std::move(m));
  }

  void FpMatrix::set(Index r, Index c, FpScalar value) {
    _m(r, c) = reduce_mod(value, _p);
  }

  void FpMatrix::add(Index r, Index c, FpScalar value) {
    _m(r, c) = reduce_mod(_m(r, c) + reduce_mod(value, _p), _p);
  }

  FpMatrix FpMatrix::transpose() const {
    return FpMatrix(_p, FpEntries(_m.transpose()));
  }

  FpVector FpMatrix::operator*(FpVector const& v) const {
    if (v.size() != cols()) {
      throw std::invalid_argument("dimension mismatch in matrix-vector product");
    }
    FpVector out(rows());
    for (Index i = 0; i < rows(); ++i) {
      FpScalar s = 0;
      for (Index j = 0; j < cols(); ++j) {
        s = (s + _m(i, j) * reduce_mod(v(j), _p)) % _p;
      }
      out(i) = s;
    }
    return out;
  }

  FpMatrix FpMatrix::operator*(FpMatrix const& other) const {
    if (other._p != _p || other.rows() != cols()) {
      throw std::invalid_argument("dimension mismatch in matrix product");
    }
    FpEntries out = FpEntries::Zero(rows(), other.cols());
    for (Index i = 0; i < rows(); ++i) {
      for (Index k = 0; k < cols(); ++k) {
        auto a = _m(i, k);
        if (a == 0) {
          continue;
        }
        for (Index j = 0; j < other.cols(); ++j) {
          out(i, j) = (out(i, j) + a * other._m(k, j)) % _p;
        }
      }
    }
    return FpMatrix(_p, std::move(out));
  }

  Echelon row_reduce(FpMatrix const& m) {
    FpScalar const p = m.p();
    Echelon        e{m.entries(), {}};
    auto&          a    = e.reduced;
    Index const    rows = a.rows();
    Index          r    = 0;
    for (Index c = 0; c < a.cols() && r < rows; ++c) {
      Index pivot = r;
      while (pivot < rows && a(pivot, c) == 0) {
        ++pivot;
      }
      if (pivot == rows) {
        continue;
      }
      if (pivot != r) {
        a.row(r).swap(a.row(pivot));
      }
      FpScalar inv = inverse_mod(a(r, c), p);
      if (inv != 1) {
        a.row(r) = (a.row(r) * inv).unaryExpr(
            [p](FpScalar x) { return x % p; });
      }
      for (Index i = 0; i < rows; ++i) {
        if (i == r || a(i, c) == 0) {
          continue;
        }
        FpScalar f = p - a(i, c);
        a.row(i)   = (a.row(i) + f * a.row(r)).unaryExpr(
            [p](FpScalar x) { return x % p; });
      }
      e.pivot_cols.push_back(c);
      ++r;
    }
    return e;
  }

  std::size_t rank(FpMatrix const& m) {
    return row_reduce(m).pivot_cols.size();
  }

  std::vector<FpVector> kernel_basis(FpMatrix const& m) {
    auto const            e = row_reduce(m);
    FpScalar const        p = m.p();
    std::vector<bool>     is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (auto c : e.pivot_cols) {
      is_pivot[static_cast<std::size_t>(c)] = true;
    }
    std::vector<FpVector> basis;
    for (Index f = 0; f < m.cols(); ++f) {
      if (is_pivot[static_cast<std::size_t>(f)]) {
        continue;
      }
      FpVector v = FpVector::Zero(m.cols());
      v(f)       = 1;
      for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
        auto x = e.reduced(static_cast<Index>(i), f);
        v(e.pivot_cols[i]) = x == 0 ? 0 : p - x;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  std::size_t induced_rank(FpMatrix const& m, std::span<FpVector const> basis) {
    std::vector<FpVector> images;
    images.reserve(basis.size());
    for (auto const& b : basis) {
      if (b.size() != m.cols()) {
        throw std::invalid_argument("subspace basis vector has length "
                                    + std::to_string(b.size())
                                    + ", expected "
                                    + std::to_string(m.cols()));
      }
      images.push_back(m * b);
    }
    return rank(FpMatrix::from_columns(m.p(), m.rows(), images));
  }

  std::size_t rank_modulo(FpScalar                  p,
                          Index                     dim,
                          std::span<FpVector const> base,
                          std::span<FpVector const> extra) {
    std::vector<FpVector> all(base.begin(), base.end());
    all.insert(all.end(), extra.begin(), extra.end());
    return rank(FpMatrix::from_columns(p, dim, all))
           - rank(FpMatrix::from_columns(p, dim, base));
  }

}  // namespace largeness
