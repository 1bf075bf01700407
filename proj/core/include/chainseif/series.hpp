#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "chainseif/matrix.hpp"
#include "chainseif/numeric.hpp"

namespace chainseif {

/// An element of Z[[t]] / (t^order). Immutable value type.
class TruncatedSeries {
 public:
  /// Zero series; `order` must be positive.
  explicit TruncatedSeries(std::size_t order);
  /// order = coeffs.size(), which must be positive.
  explicit TruncatedSeries(std::vector<BigInt> coeffs);
  /// Polynomial given by low-order-first coefficients, zero padded or truncated to `order`.
  TruncatedSeries(std::initializer_list<long> poly, std::size_t order);

  static TruncatedSeries one(std::size_t order);
  /// 1 - t^r mod t^order (r >= 1).
  static TruncatedSeries one_minus_t_pow(std::size_t r, std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const BigInt> coeffs() const { return coeffs_; }

  bool is_unit() const;
  /// Reduction to a smaller order.
  TruncatedSeries truncated(std::size_t order) const;

  bool operator==(const TruncatedSeries& other) const = default;
  std::string to_string() const;

 private:
  std::vector<BigInt> coeffs_;
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_inv(const TruncatedSeries& a);
TruncatedSeries series_int_pow(const TruncatedSeries& a, long long e);

/// Id_k + sum beta_i N_k^i, stored by its colors beta_1..beta_{k-1}.
class RainbowMatrix {
 public:
  /// colors.size() must equal size - 1; size must be positive.
  RainbowMatrix(std::size_t size, std::vector<BigInt> colors);

  static RainbowMatrix identity(std::size_t size);

  std::size_t size() const { return size_; }
  std::span<const BigInt> colors() const { return colors_; }
  /// 1-based color index, 1 <= i < size.
  const BigInt& color(std::size_t i) const { return colors_.at(i - 1); }

  IntMatrix dense() const;
  /// 1 + beta_1 t + ... mod t^size.
  TruncatedSeries as_series() const;

  bool operator==(const RainbowMatrix& other) const = default;

 private:
  std::size_t size_;
  std::vector<BigInt> colors_;
};

/// Image of s under t -> N_k. Requires s.order() >= k and constant term 1.
RainbowMatrix substitute_nilpotent(const TruncatedSeries& s, std::size_t k);
RainbowMatrix rainbow_invert(const RainbowMatrix& a);
RainbowMatrix rainbow_mul(const RainbowMatrix& a, const RainbowMatrix& b);
/// l-rainbow extension: pads colors with zeros; requires l >= a.size().
RainbowMatrix rainbow_extend(const RainbowMatrix& a, std::size_t l);

/// Recovers the rainbow structure of a dense matrix, if it has one.
bool is_rainbow(const IntMatrix& m);
RainbowMatrix rainbow_from_dense(const IntMatrix& m);

}  // namespace chainseif
