#pragma once

// Weyl group of Res_{K/Qp} GL_n: a product of sigma copies of S_n, one per
// embedding tau of K into the coefficient field.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trilocal {

struct EmbeddingShape {
  int n = 1;
  int sigma = 1;

  EmbeddingShape() = default;
  EmbeddingShape(int n_, int sigma_);

  auto operator<=>(const EmbeddingShape&) const = default;
  std::string to_string() const;
};

// One-line notation, stored 0-based: w(a) = img[a].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> zero_based_images);

  static Permutation identity(int n);
  static Permutation longest(int n);
  // s_i swaps i and i+1, 1 <= i < n.
  static Permutation simple(int n, int i);
  // Swaps a and b, 1-based.
  static Permutation transposition(int n, int a, int b);
  // "321" for n <= 9, "10,2,3,..." otherwise.
  static Permutation parse(std::string_view text);
  static Permutation from_one_line(const std::vector<int>& one_based);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int a) const { return img_[a]; }
  const std::vector<int>& images() const { return img_; }
  std::vector<int> one_line() const;

  // (v * w)(a) = v(w(a)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  int length() const;
  int cycle_count() const;
  bool is_identity() const;

  // Left descent: s_i w < w, i.e. i+1 appears before i in one-line notation.
  bool has_left_descent(int i) const;
  bool has_right_descent(int i) const;
  Permutation left_multiply_simple(int i) const;
  Permutation right_multiply_simple(int i) const;

  std::uint64_t code() const;
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

// Lexicographic order on one-line notation.
std::vector<Permutation> all_permutations(int n);

// Tableau / rank criterion: x <= y iff r_x(i, j) >= r_y(i, j).
bool bruhat_leq(const Permutation& x, const Permutation& y);
// Permutations v with v <= w and length(v) = length(w) - 1.
std::vector<Permutation> bruhat_coatoms(const Permutation& w);
std::vector<Permutation> bruhat_covers(const Permutation& w);

class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(EmbeddingShape shape, std::vector<Permutation> parts);

  static WeylElement identity(const EmbeddingShape& shape);
  static WeylElement longest(const EmbeddingShape& shape);
  // Parts separated by '.', e.g. "21.12" for sigma = 2.
  static WeylElement parse(const EmbeddingShape& shape, std::string_view text);

  const EmbeddingShape& shape() const { return shape_; }
  const std::vector<Permutation>& parts() const { return parts_; }
  const Permutation& part(int tau) const { return parts_[tau]; }

  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;
  int length() const;
  bool is_identity() const;

  std::string to_string() const;

  bool operator==(const WeylElement& other) const = default;
  // Canonical order: length first, then lexicographic on parts.
  bool operator<(const WeylElement& other) const;

 private:
  EmbeddingShape shape_;
  std::vector<Permutation> parts_;
};

// h[tau][i], tau < sigma, i < n.
struct IntegralWeight {
  std::vector<std::vector<long long>> rows;

  IntegralWeight() = default;
  explicit IntegralWeight(std::vector<std::vector<long long>> r) : rows(std::move(r)) {}
  static IntegralWeight zero(const EmbeddingShape& shape);
  static IntegralWeight rho(const EmbeddingShape& shape);

  EmbeddingShape shape() const;
  bool operator==(const IntegralWeight&) const = default;
};

int length(const WeylElement& w);
bool bruhat_leq(const WeylElement& x, const WeylElement& y);
WeylElement longest_element(const EmbeddingShape& shape);
WeylElement identity_element(const EmbeddingShape& shape);

// All elements, canonical order.
std::vector<WeylElement> all_elements(const EmbeddingShape& shape);
// {w' : w <= w'}, canonical order.
std::vector<WeylElement> upper_interval(const WeylElement& w);
// {w' : w' <= w}, canonical order.
std::vector<WeylElement> lower_interval(const WeylElement& w);
// {w' : lo <= w' <= hi}, canonical order.
std::vector<WeylElement> bruhat_interval(const WeylElement& lo, const WeylElement& hi);
std::vector<WeylElement> bruhat_covers(const WeylElement& w);

// (w . h)_{tau, i} = h_{tau, w^{-1}(i)}.
IntegralWeight apply_to_weights(const WeylElement& w, const IntegralWeight& h);
// w . lambda = w(lambda + rho) - rho, rho = (n-1, ..., 1, 0).
IntegralWeight dot_action(const WeylElement& w, const IntegralWeight& lambda);

// True when w is a product of pairwise distinct simple reflections.
bool is_distinct_simple_product(const WeylElement& w);

struct Diamond {
  WeylElement w1, w2, w3;
};
// w1, w2 cover w, w3 covers both; the open interval (w, w3) is exactly {w1, w2}.
// w3 is the first length-(lg(w)+2) element above w in canonical order.
Diamond diamond(const WeylElement& w);
// Every eligible w3 above w with its open interval, for exhaustive checks.
std::vector<Diamond> all_diamonds(const WeylElement& w);

void require_same_shape(const EmbeddingShape& a, const EmbeddingShape& b, const char* what);

}  // namespace trilocal
