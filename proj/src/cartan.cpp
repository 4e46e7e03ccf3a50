#include "trilocal/cartan.hpp"

#include <map>
#include <mutex>

#include "trilocal/matrix.hpp"

namespace trilocal {

namespace {

std::vector<std::vector<long long>> build_roots(const EmbeddingShape& shape) {
  const int n = shape.n;
  std::vector<std::vector<long long>> out;
  for (int t = 0; t < shape.sigma; ++t)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        std::vector<long long> v(static_cast<std::size_t>(shape.sigma) * n, 0);
        v[t * n + i] = 1;
        v[t * n + j] = -1;
        out.push_back(std::move(v));
      }
  return out;
}

}  // namespace

const std::vector<std::vector<long long>>& roots(const EmbeddingShape& shape) {
  static std::mutex mu;
  static std::map<EmbeddingShape, std::vector<std::vector<long long>>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(shape);
  if (it == cache.end()) it = cache.emplace(shape, build_roots(shape)).first;
  return it->second;  // map nodes are stable
}

int d_of(const WeylElement& w) {
  const auto& shape = w.shape();
  const int n = shape.n;
  std::vector<std::vector<long long>> diffs;
  for (const auto& alpha : roots(shape)) {
    std::vector<long long> image(alpha.size(), 0);
    for (int t = 0; t < shape.sigma; ++t)
      for (int i = 0; i < n; ++i) image[t * n + w.part(t)(i)] += alpha[t * n + i];
    for (std::size_t k = 0; k < alpha.size(); ++k) image[k] -= alpha[k];
    diffs.push_back(std::move(image));
  }
  return static_cast<int>(bareiss_rank(diffs));
}

int fixed_space_dim(const WeylElement& w) {
  int dim = 0;
  for (const auto& p : w.parts()) dim += p.cycle_count();
  return dim;
}

int dim_group(const EmbeddingShape& s) { return s.sigma * s.n * s.n; }
int dim_flag_variety(const EmbeddingShape& s) { return s.sigma * s.n * (s.n - 1) / 2; }
int dim_torus(const EmbeddingShape& s) { return s.sigma * s.n; }
int dim_borel(const EmbeddingShape& s) { return s.sigma * s.n * (s.n + 1) / 2; }

}  // namespace trilocal
