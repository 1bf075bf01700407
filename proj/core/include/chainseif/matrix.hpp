#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "chainseif/numeric.hpp"

namespace chainseif {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  /// Zero matrix; both dimensions must be positive.
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const BigInt> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  bool is_upper_unitriangular() const;
  bool is_identity() const;

  bool operator==(const IntMatrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(const BigInt& s, const IntMatrix& a);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
std::vector<BigInt> mat_vec(const IntMatrix& a, std::span<const BigInt> v);
IntMatrix mat_transpose(const IntMatrix& a);

/// Reflection across the anti-diagonal: B(i,j) = A(n-1-j, m-1-i).
IntMatrix anti_transpose(const IntMatrix& a);

/// Exact inverse; requires a square matrix with determinant +-1.
IntMatrix mat_inverse_unimodular(const IntMatrix& a);

/// a^e for any integer e; negative exponents require a unimodular base.
IntMatrix mat_pow(const IntMatrix& a, long long e);

/// Fraction-free (Bareiss) determinant.
BigInt determinant(const IntMatrix& a);

/// Coefficients of det(tI - A), lowest degree first; the last entry is 1.
/// Faddeev-LeVerrier with exact division, O(n^4).
std::vector<BigInt> characteristic_polynomial(const IntMatrix& a);

}  // namespace chainseif
