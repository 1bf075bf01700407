#include "chainseif/identities.hpp"

#include <sstream>

#include "chainseif/errors.hpp"

namespace chainseif {

namespace {

struct ChainData {
  std::size_t mu;
  long long n;
  IntMatrix s;
  IntMatrix m;
};

ChainData load(const ChainTuple& a) {
  const RainbowMatrix s = seifert_series(a);
  return {s.size(), static_cast<long long>(a.size()), s.dense(), companion_matrix(a)};
}

// M(a) has at most two nonzero entries per row, so repeated left multiplication costs
// O(mu^2) per step and beats squaring for the exponents used here.
IntMatrix companion_power(const IntMatrix& m, std::size_t e) {
  IntMatrix acc = IntMatrix::identity(m.rows());
  for (std::size_t i = 0; i < e; ++i) acc = mat_mul(m, acc);
  return acc;
}

CheckReport make(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, std::move(detail)};
}

}  // namespace

MonodromyIdentityReport verify_monodromy_identity(const ChainTuple& a) {
  const ChainData c = load(a);
  MonodromyIdentityReport r;
  r.companion_power = companion_power(c.m, c.mu);
  r.monodromy = BigInt(sign_power(c.n)) * mat_mul(mat_inverse_unimodular(c.s), mat_transpose(c.s));
  r.holds = r.companion_power == r.monodromy;
  return r;
}

CheckReport verify_periodicity(const ChainTuple& a) {
  const IntMatrix m = companion_matrix(a);
  const std::size_t d = to_size(degree_d(a), kMaxMilnorNumber * 4);
  const bool ok = companion_power(m, d).is_identity();
  return make("periodicity", ok, ok ? "" : "M^d is not the identity");
}

CheckReport verify_alpha_prime_symmetry(const ChainTuple& a) {
  const TruncatedSeries ap = alpha_prime_poly(a);
  const std::size_t mu = ap.order() - 1;
  const int sign = sign_power(static_cast<long long>(a.size()) - 1);
  for (std::size_t i = 0; i <= mu; ++i) {
    if (ap[mu - i] != sign * ap[i]) {
      std::ostringstream os;
      os << "alpha'_" << (mu - i) << " = " << ap[mu - i].get_str() << " but (-1)^(n-1) alpha'_" << i << " = "
         << BigInt(sign * ap[i]).get_str();
      return make("alpha_prime_symmetry", false, os.str());
    }
  }
  return make("alpha_prime_symmetry", true);
}

CheckReport verify_inverse_coefficients(const ChainTuple& a) {
  const RainbowMatrix inv = rainbow_invert(seifert_series(a));
  const TruncatedSeries ap = alpha_prime_poly(a);
  for (std::size_t i = 1; i < inv.size(); ++i) {
    if (inv.color(i) != ap[i]) {
      return make("inverse_coefficients", false, "color " + std::to_string(i) + " of S^-1 differs from alpha'");
    }
  }
  return make("inverse_coefficients", true);
}

CheckReport verify_transport_congruence(const ChainTuple& a) {
  const std::size_t n = a.size();
  const BigInt mu = milnor_number(a);
  const BigInt d = degree_d(a);
  for (std::size_t k = 1; k <= n; ++k) {
    Rational lhs(-mu * sign_power(static_cast<long long>(k) - 1) * degree_d(a.first(k - 1)), d);
    lhs.canonicalize();
    Rational w(milnor_number(a.last(n - k)), degree_d(a.last(n - k + 1)));
    w.canonicalize();
    const Rational diff = lhs - w;
    if (diff.get_den() != 1) {
      return make("transport_congruence", false,
                  "k=" + std::to_string(k) + ": " + lhs.get_str() + " - " + w.get_str() + " is not an integer");
    }
  }
  return make("transport_congruence", true);
}

CheckReport verify_gram_invariance(const ChainTuple& a) {
  const ChainData c = load(a);
  const bool ok = mat_mul(mat_transpose(c.m), mat_mul(c.s, c.m)) == c.s;
  return make("gram_invariance", ok, ok ? "" : "M^T S M differs from S");
}

CheckReport verify_petal_windows(const ChainTuple& a) {
  const ChainData c = load(a);
  const std::size_t d = to_size(degree_d(a), kMaxMilnorNumber * 4);
  const IntMatrix minv = mat_inverse_unimodular(c.m);

  // Columns of u are u_0..u_{d-1}; u_d must return to u_0.
  IntMatrix u(c.mu, d);
  std::vector<BigInt> cur(c.mu);
  cur[0] = 1;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < c.mu; ++i) u(i, j) = cur[i];
    cur = mat_vec(minv, cur);
  }
  for (std::size_t i = 0; i < c.mu; ++i)
    if (cur[i] != (i == 0 ? 1 : 0)) return make("petal_windows", false, "u_d differs from u_0");

  const IntMatrix gram = mat_mul(mat_transpose(u), mat_mul(c.s, u));
  for (std::size_t w = 0; w < d; ++w) {
    for (std::size_t i = 0; i < c.mu; ++i) {
      for (std::size_t j = 0; j < c.mu; ++j) {
        if (gram((w + i) % d, (w + j) % d) != c.s(i, j)) {
          return make("petal_windows", false, "window starting at " + std::to_string(w) + " has a different Gram matrix");
        }
      }
    }
  }

  const IntMatrix h = BigInt(sign_power(c.n)) * mat_mul(mat_inverse_unimodular(c.s), mat_transpose(c.s));
  const IntMatrix hu = mat_mul(h, u);
  for (std::size_t j = 0; j < d; ++j) {
    const std::size_t target = (j + d - c.mu % d) % d;
    for (std::size_t i = 0; i < c.mu; ++i) {
      if (hu(i, j) != u(i, target)) {
        return make("petal_windows", false, "monodromy does not shift u_" + std::to_string(j) + " by -mu");
      }
    }
  }
  return make("petal_windows", true);
}

CheckReport verify_characteristic_polynomial(const ChainTuple& a) {
  const IntMatrix m = companion_matrix(a);
  const TruncatedSeries ap = alpha_prime_poly(a);
  const std::size_t mu = m.rows();
  const std::vector<BigInt> cp = characteristic_polynomial(m);
  for (std::size_t i = 0; i <= mu; ++i) {
    if (cp[mu - i] != ap[i]) return make("characteristic_polynomial", false, "coefficient of t^" + std::to_string(mu - i));
  }
  return make("characteristic_polynomial", true);
}

std::vector<CheckReport> run_identity_suite(const ChainTuple& a, std::size_t charpoly_mu_limit) {
  std::vector<CheckReport> out;
  const MonodromyIdentityReport mono = verify_monodromy_identity(a);
  out.push_back(make("monodromy_identity", mono.holds, mono.holds ? "" : "M^mu differs from (-1)^n S^-1 S^T"));
  out.push_back(verify_periodicity(a));
  out.push_back(verify_alpha_prime_symmetry(a));
  out.push_back(verify_inverse_coefficients(a));
  out.push_back(verify_transport_congruence(a));
  out.push_back(verify_gram_invariance(a));
  out.push_back(verify_petal_windows(a));
  if (to_size(milnor_number(a), kMaxMilnorNumber) <= charpoly_mu_limit) {
    out.push_back(verify_characteristic_polynomial(a));
  } else {
    out.push_back(make("characteristic_polynomial", true, "skipped"));
  }
  return out;
}

}  // namespace chainseif
