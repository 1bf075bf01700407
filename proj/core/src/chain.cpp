#include "chainseif/chain.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "chainseif/errors.hpp"

namespace chainseif {

ChainTuple::ChainTuple(std::vector<long> entries) : entries_(std::move(entries)) {
  for (long e : entries_)
    if (e < 1) throw InvalidArgument("chain tuple entries must be positive, got " + std::to_string(e));
}

ChainTuple ChainTuple::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::vector<long> entries;
  if (text.empty()) return ChainTuple();
  while (true) {
    const std::size_t comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    long value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InvalidArgument("cannot parse tuple entry '" + std::string(item) + "'");
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return ChainTuple(std::move(entries));
}

ChainTuple ChainTuple::first(std::size_t k) const {
  if (k > size()) throw InvalidArgument("first: k exceeds tuple length");
  return ChainTuple(std::vector<long>(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(k)));
}

ChainTuple ChainTuple::last(std::size_t k) const {
  if (k > size()) throw InvalidArgument("last: k exceeds tuple length");
  return ChainTuple(std::vector<long>(entries_.end() - static_cast<std::ptrdiff_t>(k), entries_.end()));
}

ChainTuple ChainTuple::tail() const { return empty() ? ChainTuple() : last(size() - 1); }

ChainTuple ChainTuple::prepend(long a0) const {
  std::vector<long> e;
  e.reserve(size() + 1);
  e.push_back(a0);
  e.insert(e.end(), entries_.begin(), entries_.end());
  return ChainTuple(std::move(e));
}

bool ChainTuple::has_isolated_singularity() const { return empty() || entries_.back() >= 2; }

bool ChainTuple::all_entries_at_least(long bound) const {
  for (long e : entries_)
    if (e < bound) return false;
  return true;
}

std::string ChainTuple::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

BigInt milnor_polynomial(std::span<const long> entries) {
  // Horner from the right: mu(a_k..a_n) = a_k * d(a_{k+1}..a_n) - mu(a_{k+1}..a_n).
  BigInt mu = 1;
  BigInt d = 1;
  for (std::size_t i = entries.size(); i-- > 0;) {
    d *= entries[i];
    mu = d - mu;
  }
  return mu;
}

BigInt milnor_number(const ChainTuple& a) { return milnor_polynomial(a.entries()); }

BigInt degree_d(const ChainTuple& a) {
  BigInt d = 1;
  for (long e : a.entries()) d *= e;
  return d;
}

std::vector<BigInt> r_sequence(const ChainTuple& a) {
  const std::size_t n = a.size();
  std::vector<BigInt> r(n + 1);
  r[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) r[i] = r[i - 1] * a.entry(n - i + 1);
  return r;
}

namespace {

std::size_t checked_mu(const ChainTuple& a) {
  const BigInt mu = milnor_number(a);
  if (sgn(mu) <= 0) throw InvalidArgument("Milnor number of " + a.to_string() + " is not positive");
  return to_size(mu, kMaxMilnorNumber);
}

// Multiplies s in place by (1 - t^r)^{+1} or (1 - t^r)^{-1}; both are O(order).
void apply_factor(std::vector<BigInt>& s, const BigInt& r, int exponent) {
  if (r >= BigInt(static_cast<unsigned long>(s.size()))) return;
  const std::size_t rr = r.get_ui();
  if (exponent > 0) {
    for (std::size_t i = s.size(); i-- > rr;) s[i] -= s[i - rr];
  } else {
    for (std::size_t i = rr; i < s.size(); ++i) s[i] += s[i - rr];
  }
}

// prod_{i=0}^n (1 - t^{r_i})^{sign * (-1)^{i+n}} mod t^order.
std::vector<BigInt> r_product(const ChainTuple& a, int sign, std::size_t order) {
  std::vector<BigInt> s(order);
  s[0] = 1;
  const auto r = r_sequence(a);
  const long long n = static_cast<long long>(a.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    apply_factor(s, r[i], sign * sign_power(static_cast<long long>(i) + n));
  }
  return s;
}

}  // namespace

TruncatedSeries alpha_series(const ChainTuple& a) {
  const std::size_t mu = checked_mu(a);
  return TruncatedSeries(r_product(a, -1, mu));
}

TruncatedSeries alpha_prime_poly(const ChainTuple& a) {
  const std::size_t mu = checked_mu(a);
  std::vector<BigInt> s = r_product(a, +1, mu + 2);
  if (sgn(s[mu + 1]) != 0 || sgn(s[mu]) == 0) {
    throw InternalInconsistency("alpha' of " + a.to_string() + " is not a polynomial of degree mu");
  }
  s.pop_back();
  return TruncatedSeries(std::move(s));
}

std::vector<BigInt> quasi_weights(const ChainTuple& a) {
  const std::size_t n = a.size();
  std::vector<BigInt> q(n);
  for (std::size_t k = 1; k <= n; ++k) q[k - 1] = milnor_number(a.last(n - k)) * degree_d(a.first(k - 1));
  return q;
}

bool is_quasi_homogeneous(const ChainTuple& a, std::span<const BigInt> weights) {
  const std::size_t n = a.size();
  if (weights.size() != n) throw InvalidArgument("is_quasi_homogeneous: weight count differs from tuple length");
  const BigInt d = degree_d(a);
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt w = a.entry(k) * weights[k - 1];
    if (k < n) w += weights[k];
    if (w != d) return false;
  }
  return true;
}

RainbowMatrix seifert_series(const ChainTuple& a) {
  const std::size_t mu = checked_mu(a);
  return substitute_nilpotent(alpha_series(a), mu);
}

RainbowMatrix seifert_inductive(const ChainTuple& a) {
  if (a.empty()) throw UnsupportedInput("seifert_inductive needs a nonempty tuple");
  if (!a.all_entries_at_least(2)) {
    throw UnsupportedInput("seifert_inductive needs every entry >= 2, got " + a.to_string());
  }
  const std::size_t mu = checked_mu(a);
  if (a.size() == 1) {
    std::vector<BigInt> colors(mu - 1);
    if (mu > 1) colors[0] = -1;
    return RainbowMatrix(mu, std::move(colors));
  }
  const ChainTuple rest = a.tail();
  const RainbowMatrix inv = rainbow_invert(seifert_inductive(rest));
  RainbowMatrix b = rainbow_extend(inv, mu);
  const std::size_t mu_rest = to_size(milnor_number(rest), kMaxMilnorNumber);
  std::vector<BigInt> colors(b.colors().begin(), b.colors().end());
  if (mu_rest < mu) colors[mu_rest - 1] = sign_power(static_cast<long long>(a.size()));
  return RainbowMatrix(mu, std::move(colors));
}

IntMatrix companion_matrix(const ChainTuple& a) {
  const TruncatedSeries ap = alpha_prime_poly(a);
  const std::size_t mu = ap.order() - 1;
  IntMatrix m(mu, mu);
  for (std::size_t i = 0; i < mu; ++i) {
    m(i, 0) = -ap[i + 1];
    if (i + 1 < mu) m(i, i + 1) = 1;
  }
  return m;
}

InvariantBundle invariants(const ChainTuple& a) {
  InvariantBundle b;
  b.mu = milnor_number(a);
  b.d = degree_d(a);
  b.r = r_sequence(a);
  b.q = quasi_weights(a);
  if (sgn(b.mu) > 0) {
    const TruncatedSeries al = alpha_series(a);
    b.alpha.assign(al.coeffs().begin() + 1, al.coeffs().end());
    const TruncatedSeries ap = alpha_prime_poly(a);
    b.alpha_prime.assign(ap.coeffs().begin() + 1, ap.coeffs().end());
  }
  return b;
}

}  // namespace chainseif
