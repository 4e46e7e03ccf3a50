#include "trilocal/cartan.hpp"
#include "trilocal/errors.hpp"
#include "trilocal/oracles.hpp"

namespace trilocal::oracle {

namespace {

Permutation reduce_block(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> cols;  // reduced columns
  std::vector<int> lowest;                  // lowest nonzero row of each reduced column
  std::vector<int> owner(n, -1);            // row -> reduced column
  std::vector<int> img(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = m(i, j);
    while (true) {
      int r = static_cast<int>(n) - 1;
      while (r >= 0 && v[r] == 0) --r;
      if (r < 0) throw SingularMatrixError("flag matrix is singular");
      if (owner[r] < 0) {
        owner[r] = static_cast<int>(cols.size());
        cols.push_back(v);
        lowest.push_back(r);
        img[j] = r;
        break;
      }
      const auto& c = cols[owner[r]];
      Rational f = v[r] / c[r];
      for (std::size_t i = 0; i < n; ++i) v[i] -= f * c[i];
    }
  }
  return Permutation(std::move(img));
}

}  // namespace

WeylElement relative_position_by_reduction(const Flag& f1, const Flag& f2) {
  require_same_shape(f1.shape(), f2.shape(), "relative position oracle");
  std::vector<Permutation> parts;
  for (std::size_t t = 0; t < f1.blocks.size(); ++t)
    parts.push_back(reduce_block(f1.blocks[t].inverse() * f2.blocks[t]));
  return WeylElement(f1.shape(), std::move(parts));
}

std::vector<std::vector<int>> expected_intersection_dims(const Permutation& w) {
  const int n = w.size();
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int a = 0; a < j; ++a)
        if (w(a) < i) ++d[i][j];
  return d;
}

int fixed_space_by_kernel(const WeylElement& w) {
  int dim = 0;
  for (const auto& p : w.parts()) {
    auto m = permutation_matrix(p) - RationalMatrix::identity(p.size());
    dim += p.size() - static_cast<int>(m.rank());
  }
  return dim;
}

int d_by_rational_rank(const WeylElement& w) {
  const auto rs = roots(w.shape());
  const int n = w.shape().n;
  RationalMatrix m(rs.size(), static_cast<std::size_t>(w.shape().sigma) * n);
  for (std::size_t r = 0; r < rs.size(); ++r)
    for (int t = 0; t < w.shape().sigma; ++t)
      for (int i = 0; i < n; ++i) {
        long x = static_cast<long>(rs[r][t * n + i]);
        if (x == 0) continue;
        m(r, t * n + w.part(t)(i)) += x;
        m(r, t * n + i) -= x;
      }
  return static_cast<int>(m.rank());
}

}  // namespace trilocal::oracle
