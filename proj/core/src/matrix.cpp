#include "chainseif/matrix.hpp"

#include <sstream>
#include <utility>

#include "chainseif/errors.hpp"

namespace chainseif {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw InvalidArgument("IntMatrix dimensions must be positive");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw InvalidArgument("ragged rows in IntMatrix::from_rows");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

bool IntMatrix::is_upper_unitriangular() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, i) != 1) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (sgn((*this)(i, j)) != 0) return false;
  }
  return true;
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

void require_same_shape(const IntMatrix& a, const IntMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument(std::string(what) + ": shape mismatch");
  }
}

void require_square(const IntMatrix& a, const char* what) {
  if (!a.is_square()) throw InvalidArgument(std::string(what) + ": matrix is not square");
}

bool is_lower_unitriangular(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 1) return false;
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0) return false;
  }
  return true;
}

// Back substitution for an upper unitriangular matrix: columns of the inverse
// are solved one at a time, X(i, j) = -sum_{i<k<=j} A(i, k) X(k, j).
IntMatrix upper_unitriangular_inverse(const IntMatrix& a) {
  const std::size_t n = a.rows();
  IntMatrix x = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t ii = j; ii-- > 0;) {
      BigInt acc = 0;
      for (std::size_t k = ii + 1; k <= j; ++k) {
        if (sgn(a(ii, k)) == 0 || sgn(x(k, j)) == 0) continue;
        mpz_addmul(acc.get_mpz_t(), a(ii, k).get_mpz_t(), x(k, j).get_mpz_t());
      }
      x(ii, j) = -acc;
    }
  }
  return x;
}

}  // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  require_same_shape(a, b, "matrix addition");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  require_same_shape(a, b, "matrix subtraction");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = -c(i, j);
  return c;
}

IntMatrix operator*(const BigInt& s, const IntMatrix& a) {
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("mat_mul: inner dimensions differ");
  IntMatrix c(a.rows(), b.cols());
  // Zero entries are skipped; companion and triangular operands are mostly zero.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const BigInt& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
      }
    }
  }
  return c;
}

std::vector<BigInt> mat_vec(const IntMatrix& a, std::span<const BigInt> v) {
  if (a.cols() != v.size()) throw InvalidArgument("mat_vec: dimension mismatch");
  std::vector<BigInt> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) mpz_addmul(out[i].get_mpz_t(), a(i, k).get_mpz_t(), v[k].get_mpz_t());
  return out;
}

IntMatrix mat_transpose(const IntMatrix& a) {
  IntMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

IntMatrix anti_transpose(const IntMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  IntMatrix t(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = a(n - 1 - j, m - 1 - i);
  return t;
}

IntMatrix mat_inverse_unimodular(const IntMatrix& a) {
  require_square(a, "mat_inverse_unimodular");
  if (a.is_upper_unitriangular()) return upper_unitriangular_inverse(a);
  if (is_lower_unitriangular(a)) return mat_transpose(upper_unitriangular_inverse(mat_transpose(a)));

  const BigInt det = determinant(a);
  if (abs(det) != 1) throw InvalidArgument("mat_inverse_unimodular: determinant is " + det.get_str());

  // Gauss-Jordan over Q; the result is integral because det = +-1.
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = Rational(a(i, j));
    w[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(w[pivot][col]) == 0) ++pivot;
    if (pivot == n) throw InternalInconsistency("singular matrix with unit determinant");
    std::swap(w[pivot], w[col]);
    const Rational inv = 1 / w[col][col];
    for (auto& x : w[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(w[r][col]) == 0) continue;
      const Rational f = w[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) w[r][j] -= f * w[col][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& q = w[i][n + j];
      if (q.get_den() != 1) throw InternalInconsistency("non-integral inverse of a unimodular matrix");
      inv(i, j) = q.get_num();
    }
  }
  return inv;
}

IntMatrix mat_pow(const IntMatrix& a, long long e) {
  require_square(a, "mat_pow");
  if (e < 0) return mat_pow(mat_inverse_unimodular(a), -e);
  IntMatrix result = IntMatrix::identity(a.rows());
  IntMatrix base = a;
  while (e > 0) {
    if (e & 1) result = mat_mul(result, base);
    e >>= 1;
    if (e > 0) base = mat_mul(base, base);
  }
  return result;
}

BigInt determinant(const IntMatrix& a) {
  require_square(a, "determinant");
  const std::size_t n = a.rows();
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(m(swap_row, k)) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<BigInt> characteristic_polynomial(const IntMatrix& a) {
  require_square(a, "characteristic_polynomial");
  const std::size_t n = a.rows();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = mat_mul(a, m);
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    const IntMatrix am = mat_mul(a, next);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    BigInt q = -trace;
    const BigInt kk(static_cast<unsigned long>(k));
    if (sgn(q % kk) != 0) throw InternalInconsistency("Faddeev-LeVerrier: inexact division");
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), kk.get_mpz_t());
    c[n - k] = q;
    m = std::move(next);
  }
  return c;
}

}  // namespace chainseif
