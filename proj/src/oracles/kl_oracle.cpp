#include "trilocal/errors.hpp"
#include "trilocal/oracles.hpp"

namespace trilocal::oracle {

namespace {

struct Letter {
  int tau, i;
};

std::optional<Letter> first_left_descent(const WeylElement& w) {
  for (int t = 0; t < w.shape().sigma; ++t)
    for (int i = 1; i < w.shape().n; ++i)
      if (w.part(t).has_left_descent(i)) return Letter{t, i};
  return std::nullopt;
}

WeylElement left_mul(const WeylElement& w, Letter s) {
  auto parts = w.parts();
  parts[s.tau] = parts[s.tau].left_multiply_simple(s.i);
  return WeylElement(w.shape(), std::move(parts));
}

}  // namespace

RPolynomialKL::RPolynomialKL(EmbeddingShape shape) : shape_(shape), elems_(all_elements(shape)) {
  for (std::size_t k = 0; k < elems_.size(); ++k) index_.emplace(elems_[k], k);
  leq_.assign(elems_.size(), std::vector<bool>(elems_.size(), false));
  for (std::size_t x = 0; x < elems_.size(); ++x)
    for (std::size_t y = 0; y < elems_.size(); ++y) leq_[x][y] = subword_bruhat_leq(elems_[x], elems_[y]);
}

KLPolynomial RPolynomialKL::r_idx(std::size_t x, std::size_t y) {
  if (x == y) return KLPolynomial::one();
  if (!leq_[x][y]) return {};
  auto it = r_memo_.find({x, y});
  if (it != r_memo_.end()) return it->second;
  const auto s = *first_left_descent(elems_[y]);
  const std::size_t sy = index_.at(left_mul(elems_[y], s));
  const std::size_t sx = index_.at(left_mul(elems_[x], s));
  KLPolynomial r;
  if (elems_[sx].length() < elems_[x].length()) {
    r = r_idx(sx, sy);
  } else {
    r = r_idx(x, sy) * KLPolynomial({-1, 1}) + r_idx(sx, sy).shifted(1);
  }
  r_memo_.emplace(std::make_pair(x, y), r);
  return r;
}

KLPolynomial RPolynomialKL::p_idx(std::size_t x, std::size_t w) {
  if (x == w) return KLPolynomial::one();
  if (!leq_[x][w]) return {};
  auto it = p_memo_.find({x, w});
  if (it != p_memo_.end()) return it->second;
  const int d = elems_[w].length() - elems_[x].length();
  KLPolynomial sum;
  for (std::size_t y = 0; y < elems_.size(); ++y) {
    if (y == x || !leq_[x][y] || !leq_[y][w]) continue;
    sum = sum + r_idx(x, y) * p_idx(y, w);
  }
  KLPolynomial p = KLPolynomial() - sum.truncated((d - 1) / 2);
  p_memo_.emplace(std::make_pair(x, w), p);
  return p;
}

KLPolynomial RPolynomialKL::r_polynomial(const WeylElement& x, const WeylElement& y) {
  require_same_shape(shape_, x.shape(), "R-polynomial oracle");
  require_same_shape(shape_, y.shape(), "R-polynomial oracle");
  return r_idx(index_.at(x), index_.at(y));
}

KLPolynomial RPolynomialKL::kl(const WeylElement& x, const WeylElement& y) {
  require_same_shape(shape_, x.shape(), "KL oracle");
  require_same_shape(shape_, y.shape(), "KL oracle");
  return p_idx(index_.at(x), index_.at(y));
}

}  // namespace trilocal::oracle
