#include "chainseif/numeric.hpp"

#include <cmath>

#include "chainseif/errors.hpp"

namespace chainseif {

std::size_t to_size(const BigInt& value, std::size_t limit) {
  if (sgn(value) < 0) throw InvalidArgument("negative value used as a size: " + value.get_str());
  if (value > BigInt(static_cast<unsigned long>(limit))) {
    throw InvalidArgument("size " + value.get_str() + " exceeds limit " + std::to_string(limit));
  }
  return static_cast<std::size_t>(value.get_ui());
}

double log_abs(const BigInt& z) {
  if (sgn(z) == 0) throw InvalidArgument("log_abs of zero");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double log_abs(const Rational& q) {
  return log_abs(BigInt(q.get_num())) - log_abs(BigInt(q.get_den()));
}

}  // namespace chainseif
