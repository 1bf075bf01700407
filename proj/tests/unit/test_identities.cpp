#include <gtest/gtest.h>

#include "chainseif/identities.hpp"

using namespace chainseif;

namespace {
ChainTuple T(const char* s) { return ChainTuple::parse(s); }
}  // namespace

TEST(MonodromyIdentity, Examples) {
  const MonodromyIdentityReport r3 = verify_monodromy_identity(T("3"));
  EXPECT_TRUE(r3.holds);
  EXPECT_EQ(r3.companion_power, IntMatrix::from_rows({{0, -1}, {1, -1}}));
  EXPECT_EQ(r3.monodromy, IntMatrix::from_rows({{0, -1}, {1, -1}}));
  const MonodromyIdentityReport r2 = verify_monodromy_identity(T("2"));
  EXPECT_TRUE(r2.holds);
  EXPECT_EQ(r2.monodromy, IntMatrix::from_rows({{-1}}));
  EXPECT_TRUE(verify_monodromy_identity(T("2,3")).holds);
}

TEST(Periodicity, Examples) {
  EXPECT_TRUE(verify_periodicity(T("3")).passed);
  EXPECT_TRUE(verify_periodicity(T("2")).passed);
  EXPECT_TRUE(verify_periodicity(T("2,3")).passed);
}

TEST(AlphaPrimeSymmetry, Examples) {
  EXPECT_TRUE(verify_alpha_prime_symmetry(T("2,3")).passed);
  EXPECT_TRUE(verify_alpha_prime_symmetry(T("3")).passed);
  EXPECT_TRUE(verify_alpha_prime_symmetry(T("2")).passed);
}

TEST(InverseCoefficients, Examples) {
  EXPECT_TRUE(verify_inverse_coefficients(T("2,3")).passed);
  EXPECT_TRUE(verify_inverse_coefficients(T("3")).passed);
  EXPECT_TRUE(verify_inverse_coefficients(T("2")).passed);
}

TEST(TransportCongruence, Examples) {
  EXPECT_TRUE(verify_transport_congruence(T("2,3")).passed);
  EXPECT_TRUE(verify_transport_congruence(T("2")).passed);
  EXPECT_TRUE(verify_transport_congruence(T("3,4,2")).passed);
}

TEST(GramLevel, InvarianceAndPetalWindows) {
  for (const char* s : {"2", "3", "2,3", "2,2,2", "3,2,4", "4,4"}) {
    EXPECT_TRUE(verify_gram_invariance(T(s)).passed) << s;
    EXPECT_TRUE(verify_petal_windows(T(s)).passed) << s;
  }
}

TEST(CharacteristicPolynomial, MatchesAlphaPrime) {
  for (const char* s : {"2", "3", "2,3", "2,2,2", "3,3", "5"}) EXPECT_TRUE(verify_characteristic_polynomial(T(s)).passed) << s;
}

TEST(IdentitySuite, AllPassOnSamples) {
  for (const char* s : {"5", "2,3", "2,2,2", "1,2,3", "4,3,2"}) {
    for (const CheckReport& r : run_identity_suite(T(s))) EXPECT_TRUE(r.passed) << s << ' ' << r.name << ' ' << r.detail;
  }
}

TEST(IdentitySuite, LargeTupleSkipsCharacteristicPolynomial) {
  const auto reports = run_identity_suite(T("4,4,4"), 10);
  EXPECT_EQ(reports.back().name, "characteristic_polynomial");
  EXPECT_EQ(reports.back().detail, "skipped");
  for (const CheckReport& r : reports) EXPECT_TRUE(r.passed) << r.name;
}
