#include "chainseif/series.hpp"

#include <sstream>
#include <utility>

#include "chainseif/errors.hpp"

namespace chainseif {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order) {
  if (order == 0) throw InvalidArgument("series order must be positive");
}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("series order must be positive");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<long> poly, std::size_t order) : coeffs_(order) {
  if (order == 0) throw InvalidArgument("series order must be positive");
  std::size_t i = 0;
  for (long c : poly) {
    if (i >= order) break;
    coeffs_[i++] = c;
  }
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::one_minus_t_pow(std::size_t r, std::size_t order) {
  if (r == 0) throw InvalidArgument("one_minus_t_pow: exponent must be positive");
  TruncatedSeries s = one(order);
  if (r < order) s.coeffs_[r] = -1;
  return s;
}

bool TruncatedSeries::is_unit() const { return abs(coeffs_[0]) == 1; }

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order == 0 || order > coeffs_.size()) throw InvalidArgument("truncated: order out of range");
  return TruncatedSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)));
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << coeffs_[i].get_str();
  os << "] mod t^" << coeffs_.size();
  return os.str();
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw InvalidArgument("series_mul: orders differ");
  const std::size_t k = a.order();
  std::vector<BigInt> c(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j < k; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_inv(const TruncatedSeries& a) {
  if (!a.is_unit()) throw InvalidArgument("series_inv: constant term is not a unit");
  const std::size_t k = a.order();
  const BigInt u = a[0];  // u = u^{-1} for u = +-1
  std::vector<BigInt> b(k);
  b[0] = u;
  for (std::size_t n = 1; n < k; ++n) {
    BigInt acc = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (sgn(a[i]) == 0 || sgn(b[n - i]) == 0) continue;
      mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[n - i].get_mpz_t());
    }
    b[n] = -u * acc;
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries series_int_pow(const TruncatedSeries& a, long long e) {
  if (e < 0) return series_int_pow(series_inv(a), -e);
  TruncatedSeries result = TruncatedSeries::one(a.order());
  TruncatedSeries base = a;
  while (e > 0) {
    if (e & 1) result = series_mul(result, base);
    e >>= 1;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

RainbowMatrix::RainbowMatrix(std::size_t size, std::vector<BigInt> colors)
    : size_(size), colors_(std::move(colors)) {
  if (size == 0) throw InvalidArgument("rainbow matrix size must be positive");
  if (colors_.size() != size - 1) throw InvalidArgument("rainbow matrix needs size-1 colors");
}

RainbowMatrix RainbowMatrix::identity(std::size_t size) {
  if (size == 0) throw InvalidArgument("rainbow matrix size must be positive");
  return RainbowMatrix(size, std::vector<BigInt>(size - 1));
}

IntMatrix RainbowMatrix::dense() const {
  IntMatrix m = IntMatrix::identity(size_);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = i + 1; j < size_; ++j) m(i, j) = colors_[j - i - 1];
  return m;
}

TruncatedSeries RainbowMatrix::as_series() const {
  std::vector<BigInt> c(size_);
  c[0] = 1;
  for (std::size_t i = 1; i < size_; ++i) c[i] = colors_[i - 1];
  return TruncatedSeries(std::move(c));
}

RainbowMatrix substitute_nilpotent(const TruncatedSeries& s, std::size_t k) {
  if (k == 0) throw InvalidArgument("substitute_nilpotent: size must be positive");
  if (s.order() < k) throw InvalidArgument("substitute_nilpotent: series order below matrix size");
  if (s[0] != 1) throw InvalidArgument("substitute_nilpotent: constant term must be 1");
  return RainbowMatrix(k, std::vector<BigInt>(s.coeffs().begin() + 1, s.coeffs().begin() + static_cast<std::ptrdiff_t>(k)));
}

RainbowMatrix rainbow_invert(const RainbowMatrix& a) {
  return substitute_nilpotent(series_inv(a.as_series()), a.size());
}

RainbowMatrix rainbow_mul(const RainbowMatrix& a, const RainbowMatrix& b) {
  if (a.size() != b.size()) throw InvalidArgument("rainbow_mul: sizes differ");
  return substitute_nilpotent(series_mul(a.as_series(), b.as_series()), a.size());
}

RainbowMatrix rainbow_extend(const RainbowMatrix& a, std::size_t l) {
  if (l < a.size()) throw InvalidArgument("rainbow_extend: target size below current size");
  std::vector<BigInt> colors(a.colors().begin(), a.colors().end());
  colors.resize(l - 1);
  return RainbowMatrix(l, std::move(colors));
}

bool is_rainbow(const IntMatrix& m) {
  if (!m.is_upper_unitriangular()) return false;
  for (std::size_t i = 1; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(0, j - i)) return false;
  return true;
}

RainbowMatrix rainbow_from_dense(const IntMatrix& m) {
  if (!is_rainbow(m)) throw InvalidArgument("rainbow_from_dense: matrix is not a rainbow matrix");
  std::vector<BigInt> colors(m.cols() - 1);
  for (std::size_t j = 1; j < m.cols(); ++j) colors[j - 1] = m(0, j);
  return RainbowMatrix(m.rows(), std::move(colors));
}

}  // namespace chainseif
