#include "chainseif/lattice.hpp"

#include "chainseif/errors.hpp"

namespace chainseif {

SeifertLattice::SeifertLattice(IntMatrix seif, int n) : seif_(std::move(seif)), n_(n) {
  if (!seif_.is_upper_unitriangular()) throw InvalidArgument("Seifert matrix must be upper unitriangular");
}

SeifertLattice SeifertLattice::from_rainbow(const RainbowMatrix& s, int n) { return SeifertLattice(s.dense(), n); }

LatticeVector basis_vector(std::size_t rank, std::size_t i) {
  if (i >= rank) throw InvalidArgument("basis index out of range");
  LatticeVector v(rank);
  v[i] = 1;
  return v;
}

LatticeVector petal_vector(std::size_t rank, const PetalChain& p) {
  if (p.plus_index == p.minus_index) throw InvalidArgument("petal chain needs distinct indices");
  LatticeVector v = basis_vector(rank, p.plus_index);
  v.at(p.minus_index) = -1;
  return v;
}

namespace {

void require_dim(const SeifertLattice& l, std::span<const BigInt> v) {
  if (v.size() != l.rank()) throw InvalidArgument("lattice vector has wrong dimension");
}

BigInt form_pair(const IntMatrix& form, std::span<const BigInt> v, std::span<const BigInt> w) {
  BigInt acc = 0;
  for (std::size_t i = 0; i < form.rows(); ++i) {
    if (sgn(v[i]) == 0) continue;
    BigInt row = 0;
    for (std::size_t j = 0; j < form.cols(); ++j)
      if (sgn(w[j]) != 0 && sgn(form(i, j)) != 0) mpz_addmul(row.get_mpz_t(), form(i, j).get_mpz_t(), w[j].get_mpz_t());
    mpz_addmul(acc.get_mpz_t(), v[i].get_mpz_t(), row.get_mpz_t());
  }
  return acc;
}

IntMatrix symmetrize(const SeifertLattice& l, int sign) {
  return l.seif() + BigInt(sign) * mat_transpose(l.seif());
}

void check_index(const BasisState& s, std::size_t i) {
  if (i + 1 >= s.seif.rows()) throw InvalidArgument("mutation index out of range");
}

}  // namespace

BigInt seifert_pair(const SeifertLattice& l, std::span<const BigInt> v, std::span<const BigInt> w) {
  require_dim(l, v);
  require_dim(l, w);
  return form_pair(l.seif(), v, w);
}

IntMatrix intersection_form(const SeifertLattice& l) { return symmetrize(l, l.sign()); }

IntMatrix twist_form(const SeifertLattice& l) { return symmetrize(l, -l.sign()); }

LatticeVector pl_twist(const SeifertLattice& l, std::span<const BigInt> c, std::span<const BigInt> v) {
  require_dim(l, c);
  require_dim(l, v);
  const BigInt cv = form_pair(twist_form(l), c, v);
  LatticeVector out(v.begin(), v.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= cv * c[i];
  return out;
}

LatticeVector pl_twist_inverse(const SeifertLattice& l, std::span<const BigInt> c, std::span<const BigInt> v) {
  require_dim(l, c);
  require_dim(l, v);
  const BigInt cv = form_pair(twist_form(l), c, v) * l.sign();
  LatticeVector out(v.begin(), v.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += cv * c[i];
  return out;
}

IntMatrix monodromy_matrix(const SeifertLattice& l) {
  return BigInt(l.sign()) * mat_mul(mat_inverse_unimodular(l.seif()), mat_transpose(l.seif()));
}

IntMatrix monodromy_as_twists(const SeifertLattice& l, TwistConvention conv) {
  const IntMatrix q = conv.pairing == TwistPairing::fibre ? twist_form(l) : intersection_form(l);
  const std::size_t r = l.rank();
  // P <- P T_i with T_i = I - e_i q_i, i.e. P <- P - (P e_i) q_i: a rank-one update.
  IntMatrix p = IntMatrix::identity(r);
  std::vector<BigInt> col(r);
  for (std::size_t step = 0; step < r; ++step) {
    const std::size_t i = conv.order == TwistOrder::ascending ? step : r - 1 - step;
    for (std::size_t row = 0; row < r; ++row) col[row] = p(row, i);
    for (std::size_t row = 0; row < r; ++row) {
      if (sgn(col[row]) == 0) continue;
      for (std::size_t j = 0; j < r; ++j)
        if (sgn(q(i, j)) != 0) mpz_submul(p(row, j).get_mpz_t(), col[row].get_mpz_t(), q(i, j).get_mpz_t());
    }
  }
  return p;
}

std::vector<TwistConvention> calibrate_twist_convention() {
  const SeifertLattice a2(IntMatrix::from_rows({{1, -1}, {0, 1}}), 1);
  const IntMatrix target = IntMatrix::from_rows({{0, -1}, {1, -1}});
  std::vector<TwistConvention> hits;
  for (TwistPairing p : {TwistPairing::intersection, TwistPairing::fibre})
    for (TwistOrder o : {TwistOrder::ascending, TwistOrder::descending})
      if (monodromy_as_twists(a2, {p, o}) == target) hits.push_back({p, o});
  return hits;
}

BasisState initial_basis(const SeifertLattice& l) { return {IntMatrix::identity(l.rank()), l.seif()}; }

BasisState mutate_left(const BasisState& s, std::size_t i) {
  check_index(s, i);
  const std::size_t r = s.seif.rows();
  const BigInt v = s.seif(i, i + 1);
  BasisState out = s;
  for (std::size_t c = 0; c < r; ++c) {
    out.basis(i, c) = s.basis(i + 1, c) - v * s.basis(i, c);
    out.basis(i + 1, c) = s.basis(i, c);
  }
  out.seif(i, i + 1) = -v;
  for (std::size_t j = 0; j < i; ++j) {
    out.seif(j, i) = s.seif(j, i + 1) - v * s.seif(j, i);
    out.seif(j, i + 1) = s.seif(j, i);
  }
  for (std::size_t j = i + 2; j < r; ++j) {
    out.seif(i, j) = s.seif(i + 1, j) - v * s.seif(i, j);
    out.seif(i + 1, j) = s.seif(i, j);
  }
  return out;
}

BasisState mutate_right(const BasisState& s, std::size_t i) {
  check_index(s, i);
  const std::size_t r = s.seif.rows();
  const BigInt v = s.seif(i, i + 1);
  BasisState out = s;
  for (std::size_t c = 0; c < r; ++c) {
    out.basis(i, c) = s.basis(i + 1, c);
    out.basis(i + 1, c) = s.basis(i, c) - v * s.basis(i + 1, c);
  }
  out.seif(i, i + 1) = -v;
  for (std::size_t j = 0; j < i; ++j) {
    out.seif(j, i) = s.seif(j, i + 1);
    out.seif(j, i + 1) = s.seif(j, i) - v * s.seif(j, i + 1);
  }
  for (std::size_t j = i + 2; j < r; ++j) {
    out.seif(i, j) = s.seif(i + 1, j);
    out.seif(i + 1, j) = s.seif(i, j) - v * s.seif(i + 1, j);
  }
  return out;
}

IntMatrix gram_matrix(const SeifertLattice& l, const IntMatrix& basis) {
  if (basis.cols() != l.rank()) throw InvalidArgument("gram_matrix: basis has wrong dimension");
  return mat_mul(basis, mat_mul(l.seif(), mat_transpose(basis)));
}

IntMatrix duality_transform(const IntMatrix& seif, std::size_t r_sub) {
  if (!seif.is_square() || r_sub == 0 || r_sub > seif.rows()) throw InvalidArgument("duality_transform: bad block size");
  IntMatrix block(r_sub, r_sub);
  for (std::size_t i = 0; i < r_sub; ++i)
    for (std::size_t j = 0; j < r_sub; ++j) block(i, j) = seif(i, j);
  return anti_transpose(mat_inverse_unimodular(block));
}

IntMatrix duality_transform(const SeifertLattice& l, std::size_t r_sub) { return duality_transform(l.seif(), r_sub); }

std::pair<BigInt, BigInt> petal_self_and_adjacent_pairings(int n) {
  return {BigInt(1), BigInt(1 + (n % 2 == 0 ? 1 : -1))};
}

RainbowMatrix petal_pairing(const RainbowMatrix& s_below, int n, std::size_t mu_petal, std::size_t k) {
  if (mu_petal != s_below.size()) {
    throw InvalidArgument("petal_pairing: mu_petal must equal the size of the lower Seifert matrix");
  }
  if (k == 0) throw InvalidArgument("petal_pairing: size must be positive");
  std::vector<BigInt> colors(k - 1);

  // Petals shorter than mu_petal pair like the dual thimble basis of the lower fibration.
  const IntMatrix dual = duality_transform(s_below.dense(), s_below.size());
  for (std::size_t j = 1; j < std::min(mu_petal, k); ++j) colors[j - 1] = dual(0, j);

  // Petals of length mu_petal share one endpoint: with thimbles a, b, c over consecutive
  // critical values, (a - b)._l (b - c) where only a and b are joined by a matching path.
  if (mu_petal < k) {
    const auto [self, adjacent] = petal_self_and_adjacent_pairings(n);
    IntMatrix seif = IntMatrix::identity(3);
    seif(0, 0) = self;
    seif(1, 1) = self;
    seif(0, 1) = adjacent;
    const SeifertLattice three(std::move(seif), n);
    const LatticeVector ab = petal_vector(3, {0, 1});
    const LatticeVector bc = petal_vector(3, {1, 2});
    colors[mu_petal - 1] = seifert_pair(three, ab, bc);
  }
  return RainbowMatrix(k, std::move(colors));
}

RainbowMatrix seifert_lattice_route(const ChainTuple& a) {
  if (!a.has_isolated_singularity()) throw InvalidArgument("lattice route needs a_n >= 2, got " + a.to_string());
  RainbowMatrix s = RainbowMatrix::identity(1);
  const std::size_t n = a.size();
  for (std::size_t len = 1; len <= n; ++len) {
    const ChainTuple sub = a.last(len);
    const std::size_t mu = to_size(milnor_number(sub), kMaxMilnorNumber);
    s = petal_pairing(s, static_cast<int>(len), s.size(), mu);
  }
  return s;
}

}  // namespace chainseif
