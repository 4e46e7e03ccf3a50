#pragma once

// Exact linear algebra over Q (GMP rationals) and Bareiss rank over Z.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace trilocal {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix operator-(const RationalMatrix& other) const;
  RationalMatrix scaled(const Rational& s) const;
  bool operator==(const RationalMatrix& other) const;

  RationalMatrix transposed() const;
  RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  RationalMatrix select(const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) const;
  RationalMatrix hconcat(const RationalMatrix& right) const;

  std::size_t rank() const;
  Rational determinant() const;
  // Throws SingularMatrixError.
  RationalMatrix inverse() const;
  // Basis of {x : A x = 0}, one column per basis vector.
  RationalMatrix nullspace() const;

  bool is_upper_triangular() const;
  bool is_strictly_upper_triangular() const;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

// Fraction-free Gaussian elimination.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m);
std::size_t bareiss_rank(const std::vector<std::vector<long long>>& m);

}  // namespace trilocal
