#include <mutex>
#include <set>
#include <unordered_map>

#include "trilocal/errors.hpp"
#include "trilocal/oracles.hpp"

namespace trilocal::oracle {

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> rev;
  Permutation cur = w;
  while (!cur.is_identity()) {
    int i = 1;
    while (!cur.has_right_descent(i)) ++i;
    rev.push_back(i);
    cur = cur.right_multiply_simple(i);
  }
  return {rev.rbegin(), rev.rend()};
}

std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
  if (w.is_identity()) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 1; i < w.size(); ++i) {
    if (!w.has_right_descent(i)) continue;
    for (auto word : all_reduced_words(w.right_multiply_simple(i))) {
      word.push_back(i);
      out.push_back(std::move(word));
    }
  }
  return out;
}

namespace {

const std::set<Permutation>& subword_products(const Permutation& y) {
  static std::mutex mu;
  static std::unordered_map<std::uint64_t, std::set<Permutation>> cache;
  const std::uint64_t key = y.code() * 17 + static_cast<std::uint64_t>(y.size());
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const auto word = reduced_word(y);
  std::set<Permutation> products{Permutation::identity(y.size())};
  for (int letter : word) {
    std::set<Permutation> next = products;
    for (const auto& p : products) next.insert(p.right_multiply_simple(letter));
    products = std::move(next);
  }
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(products)).first->second;
}

bool distinct_word_exists(const Permutation& w, unsigned used) {
  if (w.is_identity()) return true;
  for (int i = 1; i < w.size(); ++i) {
    if (!w.has_right_descent(i) || (used >> i & 1u)) continue;
    if (distinct_word_exists(w.right_multiply_simple(i), used | (1u << i))) return true;
  }
  return false;
}

}  // namespace

bool subword_bruhat_leq(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw ShapeMismatch("subword oracle: sizes differ");
  return subword_products(y).count(x) > 0;
}

bool subword_bruhat_leq(const WeylElement& x, const WeylElement& y) {
  require_same_shape(x.shape(), y.shape(), "subword oracle");
  for (int t = 0; t < x.shape().sigma; ++t)
    if (!subword_bruhat_leq(x.part(t), y.part(t))) return false;
  return true;
}

bool distinct_simple_by_words(const WeylElement& w) {
  for (const auto& p : w.parts())
    if (!distinct_word_exists(p, 0)) return false;
  return true;
}

}  // namespace trilocal::oracle
