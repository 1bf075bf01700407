#pragma once

#include <string>
#include <vector>

#include "chainseif/chain.hpp"
#include "chainseif/matrix.hpp"

namespace chainseif {

struct CheckReport {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct MonodromyIdentityReport {
  bool holds = false;
  IntMatrix companion_power{1, 1};  // M(a)^mu
  IntMatrix monodromy{1, 1};        // (-1)^n S^{-1} S^T
};

MonodromyIdentityReport verify_monodromy_identity(const ChainTuple& a);
/// M(a)^{d(a)} == Id.
CheckReport verify_periodicity(const ChainTuple& a);
/// alpha'_{mu-i} == (-1)^{n-1} alpha'_i for 0 <= i <= mu, alpha'_0 = 1.
CheckReport verify_alpha_prime_symmetry(const ChainTuple& a);
/// Colors of S(a)^{-1} are alpha'_1..alpha'_{mu-1}.
CheckReport verify_inverse_coefficients(const ChainTuple& a);
/// -mu(a) (-1)^{k-1} d(f_{k-1}a) / d(a) == mu(l_{n-k}a) / (a_k...a_n) mod 1 for every k.
CheckReport verify_transport_congruence(const ChainTuple& a);
/// M(a)^T S(a) M(a) == S(a).
CheckReport verify_gram_invariance(const ChainTuple& a);
/// With u_j = M(a)^{-j} e_0 (j mod d), every window of mu consecutive u_j has Gram matrix S(a),
/// and the monodromy maps u_j to u_{j-mu}.
CheckReport verify_petal_windows(const ChainTuple& a);
/// det(tI - M(a)) == t^mu * alpha'(1/t).
CheckReport verify_characteristic_polynomial(const ChainTuple& a);

/// All of the above, in a fixed order. Expensive checks are skipped (passed, detail "skipped")
/// when mu exceeds the given bound.
std::vector<CheckReport> run_identity_suite(const ChainTuple& a, std::size_t charpoly_mu_limit = 60);

}  // namespace chainseif
