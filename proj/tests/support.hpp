#pragma once
// Hand-rolled generators and small oracles shared by the test files.
#include "gforge/cli.hpp"
#include "gforge/repcat.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace gft {

using namespace gforge;

inline constexpr std::uint64_t kSeeds[] = {1, 2, 3, 5, 8, 13, 21, 34};

struct Gen {
  explicit Gen(std::uint64_t seed) : eng(seed) {}
  std::mt19937_64 eng;

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational rational(bool sparse = true) {
    if (sparse && range(0, 2) == 0) return 0;
    Rational q(range(-5, 5), range(1, 4));
    q.canonicalize();
    return q;
  }
  MatrixQ matrix(Index r, Index c, bool sparse = true) {
    MatrixQ m(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) m(i, j) = rational(sparse);
    return m;
  }
  // r x c of the given rank: product of random full-rank-ish factors.
  MatrixQ matrix_of_rank(Index r, Index c, Index k) {
    for (;;) {
      MatrixQ m = matrix(r, k, false) * matrix(k, c, false);
      if (rank(m) == k) return m;
    }
  }
};

// Oracle rank via fraction-free Bareiss elimination on integer-scaled rows;
// independent of the engine's Gauss-Jordan.
inline Index bareiss_rank(MatrixQ m) {
  for (Index i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (Index j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (Index j = 0; j < m.cols(); ++j) m(i, j) *= l;
  }
  Index r = 0;
  mpz_class prev = 1;
  std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) a[i].push_back(m(i, j).get_num());
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (Index i = r + 1; i < m.rows(); ++i) {
      for (Index j = c + 1; j < m.cols(); ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

inline int total(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

inline Representation sum_of(const AlgebraPtr& alg, std::vector<Representation> parts) {
  return block_sum(alg, parts);
}

inline Representation regular_plus_dual(const AlgebraPtr& alg) {
  return sum_of(alg, {regular_module(alg), dual_regular_module(alg)});
}

// Independent Hom dimension: brute-force linear system built entry by entry
// from the defining equations Y(a) f_u = f_v X(a), solved with Bareiss rank.
inline int hom_dim_oracle(const Representation& x, const Representation& y) {
  const auto& q = x.algebra().quiver();
  std::vector<Index> off;
  Index n = 0;
  for (int v = 0; v < q.num_vertices(); ++v) {
    off.push_back(n);
    n += static_cast<Index>(y.dim(v)) * x.dim(v);
  }
  std::vector<VectorQ> rows;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int u = q.arrow(a).source, v = q.arrow(a).target;
    const MatrixQ& xa = x.map(a);
    const MatrixQ& ya = y.map(a);
    for (int i = 0; i < y.dim(v); ++i)
      for (int j = 0; j < x.dim(u); ++j) {
        VectorQ row = VectorQ::Zero(n);
        // (Y(a) f_u)(i,j) = sum_k Y(a)(i,k) f_u(k,j)
        for (int k = 0; k < y.dim(u); ++k) row(off[u] + k * x.dim(u) + j) += ya(i, k);
        // (f_v X(a))(i,j) = sum_k f_v(i,k) X(a)(k,j)
        for (int k = 0; k < x.dim(v); ++k) row(off[v] + i * x.dim(v) + k) -= xa(k, j);
        rows.push_back(row);
      }
  }
  MatrixQ m(static_cast<Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i].transpose();
  return static_cast<int>(n - (rows.empty() ? 0 : bareiss_rank(m)));
}

}  // namespace gft
