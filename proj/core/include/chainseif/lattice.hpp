#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "chainseif/chain.hpp"
#include "chainseif/matrix.hpp"
#include "chainseif/numeric.hpp"
#include "chainseif/series.hpp"

namespace chainseif {

using LatticeVector = std::vector<BigInt>;

/// Free lattice of rank r with an upper unitriangular Seifert pairing; `n` is the
/// complex dimension, only its parity matters.
class SeifertLattice {
 public:
  SeifertLattice(IntMatrix seif, int n);
  static SeifertLattice from_rainbow(const RainbowMatrix& s, int n);

  std::size_t rank() const { return seif_.rows(); }
  const IntMatrix& seif() const { return seif_; }
  int n() const { return n_; }
  /// (-1)^n
  int sign() const { return n_ % 2 == 0 ? 1 : -1; }

 private:
  IntMatrix seif_;
  int n_;
};

/// Class T_plus - T_minus of a matching cycle between two thimbles.
struct PetalChain {
  std::size_t plus_index;
  std::size_t minus_index;
};

LatticeVector basis_vector(std::size_t rank, std::size_t i);
LatticeVector petal_vector(std::size_t rank, const PetalChain& p);

/// v^T Seif w.
BigInt seifert_pair(const SeifertLattice& l, std::span<const BigInt> v, std::span<const BigInt> w);

/// Seif + (-1)^n Seif^T, the form preserved by the monodromy.
IntMatrix intersection_form(const SeifertLattice& l);
/// Seif - (-1)^n Seif^T, the fibre pairing that enters the twist formula.
IntMatrix twist_form(const SeifertLattice& l);

/// tau_c(v) = v - (c.v) c with c.v = c^T twist_form v. c should satisfy c^T Seif c = 1.
LatticeVector pl_twist(const SeifertLattice& l, std::span<const BigInt> c, std::span<const BigInt> v);
/// tau_c^{-1}(v) = v + (-1)^n (c.v) c.
LatticeVector pl_twist_inverse(const SeifertLattice& l, std::span<const BigInt> c, std::span<const BigInt> v);

/// (-1)^n Seif^{-1} Seif^T.
IntMatrix monodromy_matrix(const SeifertLattice& l);

enum class TwistPairing { intersection, fibre };
enum class TwistOrder { ascending, descending };

struct TwistConvention {
  TwistPairing pairing;
  TwistOrder order;
  bool operator==(const TwistConvention&) const = default;
};

/// The convention fixed by calibrate_twist_convention: fibre pairing, tau_1 o ... o tau_r.
inline constexpr TwistConvention kTwistConvention{TwistPairing::fibre, TwistOrder::ascending};

/// Composition of the basis twists as a matrix acting on coordinate columns.
IntMatrix monodromy_as_twists(const SeifertLattice& l, TwistConvention conv = kTwistConvention);

/// Tries every convention on the A_2 lattice (Seif = [[1,-1],[0,1]], n odd) and returns the
/// conventions whose twist composition equals [[0,-1],[1,-1]].
std::vector<TwistConvention> calibrate_twist_convention();

/// A distinguished basis: rows of `basis` are the basis vectors in coordinates of the
/// original lattice, `seif` is their Seifert matrix.
struct BasisState {
  IntMatrix basis;
  IntMatrix seif;
  bool operator==(const BasisState&) const = default;
};

BasisState initial_basis(const SeifertLattice& l);
/// 0-based i < rank-1. Left: (x_i, x_{i+1}) -> (x_{i+1} - v x_i, x_i) with v = Seif(i, i+1).
BasisState mutate_left(const BasisState& s, std::size_t i);
/// Right: (x_i, x_{i+1}) -> (x_{i+1}, x_i - v x_{i+1}).
BasisState mutate_right(const BasisState& s, std::size_t i);
/// Gram matrix of the rows of `basis` under the pairing of `l`.
IntMatrix gram_matrix(const SeifertLattice& l, const IntMatrix& basis);

/// Anti-transpose of the inverse of the leading r_sub x r_sub block.
IntMatrix duality_transform(const IntMatrix& seif, std::size_t r_sub);
IntMatrix duality_transform(const SeifertLattice& l, std::size_t r_sub);

/// (b._l b, a._l b) for thimbles a, b over a shared matching path: (1, 1 + (-1)^n).
std::pair<BigInt, BigInt> petal_self_and_adjacent_pairings(int n);

/// k x k rainbow matrix of petal pairings. Colors below mu_petal come from the duals of the
/// thimbles of S_below, color mu_petal is the adjacent-petal pairing and higher colors vanish.
/// Requires mu_petal == S_below.size().
RainbowMatrix petal_pairing(const RainbowMatrix& s_below, int n, std::size_t mu_petal, std::size_t k);

/// S(a) built by petal_pairing from S(a_2..a_n), starting from S(empty) = [[1]].
RainbowMatrix seifert_lattice_route(const ChainTuple& a);

}  // namespace chainseif
