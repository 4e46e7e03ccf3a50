#pragma once

// Kazhdan-Lusztig polynomials P_{x,y} for products of symmetric groups.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "trilocal/weyl.hpp"

namespace trilocal {

// Integer polynomial in q, coefficient k stored at index k, trailing zeros trimmed.
class KLPolynomial {
 public:
  KLPolynomial() = default;
  explicit KLPolynomial(std::vector<long long> coeffs);
  static KLPolynomial one() { return KLPolynomial({1}); }
  static KLPolynomial monomial(int degree, long long c = 1);

  const std::vector<long long>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  long long coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0; }
  long long at_one() const;

  KLPolynomial operator+(const KLPolynomial& o) const;
  KLPolynomial operator-(const KLPolynomial& o) const;
  KLPolynomial operator*(const KLPolynomial& o) const;
  KLPolynomial shifted(int k) const;
  // Terms of degree <= d.
  KLPolynomial truncated(int d) const;

  // "0", "1", "1+q", "1+2q+q^2".
  std::string to_string() const;
  bool operator==(const KLPolynomial&) const = default;

 private:
  void trim();
  std::vector<long long> c_;
};

class KLEngine {
 public:
  KLEngine();
  ~KLEngine();
  KLEngine(const KLEngine&) = delete;
  KLEngine& operator=(const KLEngine&) = delete;

  static KLEngine& shared();

  KLPolynomial polynomial(const Permutation& x, const Permutation& y);
  // Product of the per-embedding polynomials.
  KLPolynomial polynomial(const WeylElement& x, const WeylElement& y);
  // Coefficient of q^{(l(y)-l(x)-1)/2}; zero unless x < y.
  long long mu(const Permutation& x, const Permutation& y);

  std::size_t cached_entries() const;
  void clear();
  // Cache file: JSON object {"version": 1, "entries": {"n:x:y": [c0, c1, ...]}}.
  void load_cache(const std::string& path);
  void save_cache(const std::string& path) const;

 private:
  struct Table;
  Table& table(int n);
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

KLPolynomial kl_polynomial(const WeylElement& x, const WeylElement& y);
KLPolynomial kl_polynomial(const Permutation& x, const Permutation& y);

// P_{w0 w, w0 w'}(1).
long long verma_multiplicity(const WeylElement& w, const WeylElement& wp);
// Multiplicity of the irreducible constituent indexed by w' in Pi_w; same value.
long long pi_multiplicity(const WeylElement& w, const WeylElement& wp);

}  // namespace trilocal
