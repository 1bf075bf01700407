#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chainseif/matrix.hpp"
#include "chainseif/numeric.hpp"
#include "chainseif/series.hpp"

namespace chainseif {

/// Exponent tuple a = (a_1, ..., a_n) of the chain polynomial
/// z_1^{a_1} z_2 + ... + z_{n-1}^{a_{n-1}} z_n + z_n^{a_n}. The empty tuple is allowed.
class ChainTuple {
 public:
  ChainTuple() = default;
  /// Every entry must be >= 1.
  explicit ChainTuple(std::vector<long> entries);

  /// Comma separated positive integers, e.g. "2,3". Whitespace around entries is ignored;
  /// the empty string gives the empty tuple.
  static ChainTuple parse(std::string_view text);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const long> entries() const { return entries_; }
  /// 1-based access, matching a_1..a_n.
  long entry(std::size_t k) const { return entries_.at(k - 1); }

  /// f_k a = (a_1, ..., a_k).
  ChainTuple first(std::size_t k) const;
  /// l_k a = (a_{n-k+1}, ..., a_n).
  ChainTuple last(std::size_t k) const;
  /// (a_2, ..., a_n); the empty tuple stays empty.
  ChainTuple tail() const;
  /// (a_0, a_1, ..., a_n).
  ChainTuple prepend(long a0) const;

  /// a_n >= 2 (or the empty tuple).
  bool has_isolated_singularity() const;
  bool all_entries_at_least(long bound) const;

  std::string to_string() const;
  bool operator==(const ChainTuple&) const = default;

 private:
  std::vector<long> entries_;
};

/// a_1...a_n - a_2...a_n + ... + (-1)^n for an arbitrary integer sequence.
BigInt milnor_polynomial(std::span<const long> entries);

BigInt milnor_number(const ChainTuple& a);
BigInt degree_d(const ChainTuple& a);
/// r_0, ..., r_n with r_i = a_{n-i+1} ... a_n.
std::vector<BigInt> r_sequence(const ChainTuple& a);

/// prod_i (1 - t^{r_i})^{(-1)^{i+n-1}} mod t^mu.
TruncatedSeries alpha_series(const ChainTuple& a);
/// prod_i (1 - t^{r_i})^{(-1)^{i+n}}, which is a polynomial of degree mu; returned with order mu+1.
TruncatedSeries alpha_prime_poly(const ChainTuple& a);

/// q_k = mu(l_{n-k} a) * d(f_{k-1} a), k = 1..n.
std::vector<BigInt> quasi_weights(const ChainTuple& a);
/// Every monomial of p_a has weighted degree d(a) under quasi_weights.
bool is_quasi_homogeneous(const ChainTuple& a, std::span<const BigInt> weights);

RainbowMatrix seifert_series(const ChainTuple& a);
/// Recursive construction from S(a_2..a_n); needs every entry >= 2 (UnsupportedInput otherwise).
RainbowMatrix seifert_inductive(const ChainTuple& a);

/// mu x mu matrix with first column -alpha'_1..-alpha'_mu and ones on the superdiagonal.
IntMatrix companion_matrix(const ChainTuple& a);

struct InvariantBundle {
  BigInt mu;
  BigInt d;
  std::vector<BigInt> r;
  std::vector<BigInt> alpha;        // alpha_1..alpha_{mu-1}
  std::vector<BigInt> alpha_prime;  // alpha'_1..alpha'_mu
  std::vector<BigInt> q;
};

InvariantBundle invariants(const ChainTuple& a);

/// Largest mu accepted by the series and matrix routes.
inline constexpr std::size_t kMaxMilnorNumber = std::size_t{1} << 16;

}  // namespace chainseif
