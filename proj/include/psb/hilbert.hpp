#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "psb/error.hpp"
#include "psb/exponent.hpp"
#include "psb/rational.hpp"

namespace psb {

/// An upward-closed subset of N^n given by its minimal generators, kept as an
/// antichain sorted lexicographically ascending.
class Staircase {
 public:
  explicit Staircase(std::size_t n = 0) : n_(n) {}
  Staircase(std::size_t n, std::vector<ExponentVector> gens) : n_(n) {
    for (const auto& g : gens)
      if (g.size() != n_) throw DimensionError("staircase generator of wrong length");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < gens.size() && minimal; ++j)
        if (i != j && gens[j].divides(gens[i])) minimal = false;
      if (minimal) gens_.push_back(gens[i]);
    }
  }

  std::size_t nvars() const noexcept { return n_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  bool empty() const noexcept { return gens_.empty(); }
  bool contains(const ExponentVector& a) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return g.divides(a); });
  }
  std::int64_t max_degree() const noexcept {
    std::int64_t d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  std::string to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "," : "") + gens_[i].to_string();
    return s + ">";
  }

  friend bool operator==(const Staircase&, const Staircase&) = default;
  friend bool operator<(const Staircase& a, const Staircase& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.gens_ < b.gens_;
  }

 private:
  std::size_t n_;
  std::vector<ExponentVector> gens_;
};

/// C(a, b); zero when b < 0 or a < b.
inline Integer binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b || a < 0) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

inline Integer binomial(const Integer& a, std::int64_t b) {
  if (b < 0 || a < b || a < 0) return 0;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
  return r;
}

/// #{a in N^n \ E : |a| <= r}, by enumeration.
inline std::int64_t hs_function(const Staircase& E, std::int64_t r) {
  const std::size_t n = E.nvars();
  if (r < 0) return 0;
  if (n == 0) return E.empty() ? 1 : 0;
  std::int64_t count = 0;
  std::vector<std::int32_t> a(n, 0);
  std::int64_t deg = 0;
  for (;;) {
    if (!E.contains(ExponentVector(a))) ++count;
    std::size_t i = 0;
    for (; i < n; ++i) {
      ++a[i];
      if (++deg <= r) break;
      deg -= a[i];
      a[i] = 0;
    }
    if (i == n) break;
  }
  return count;
}

/// A univariate polynomial over Q, integer-valued on N, with the least r0
/// from which it agrees with the function it describes.
struct NumericalPolynomial {
  std::vector<Rational> coeffs;  // coeffs[k] multiplies r^k
  std::int64_t stability_threshold = 0;

  Rational operator()(std::int64_t r) const {
    Rational acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * r + coeffs[k];
    return acc;
  }
  std::int64_t degree() const {
    for (std::size_t k = coeffs.size(); k-- > 0;)
      if (coeffs[k] != 0) return static_cast<std::int64_t>(k);
    return -1;
  }
};

namespace detail {

// Coefficients of C(r + s, n) as a polynomial in r: prod_{i=1..n} (r + s - n + i) / n!.
inline std::vector<Rational> shifted_binomial(std::int64_t s, std::size_t n) {
  std::vector<Rational> p{Rational(1)};
  for (std::size_t i = 1; i <= n; ++i) {
    const Rational c = Rational(static_cast<long>(s - static_cast<std::int64_t>(n) + static_cast<std::int64_t>(i)));
    std::vector<Rational> q(p.size() + 1, Rational(0));
    for (std::size_t k = 0; k < p.size(); ++k) {
      q[k + 1] += p[k];
      q[k] += p[k] * c;
    }
    p = std::move(q);
  }
  Rational f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<long>(i);
  for (auto& c : p) c /= f;
  return p;
}

inline std::size_t env_cap(const char* name, std::size_t fallback) {
  if (const char* v = std::getenv(name)) {
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && end != v) return static_cast<std::size_t>(x);
  }
  return fallback;
}

}  // namespace detail

/// Upper limit on the number of staircase generators for inclusion-exclusion.
inline std::size_t subset_cap() { return detail::env_cap("PSB_SUBSET_CAP", 20); }

/// The polynomial P with P(r) = hs_function(E, r) for r >= n*delta, by
/// inclusion-exclusion over subsets of generators:
///   P(r) = C(r+n, n) + sum_{T nonempty} (-1)^|T| C(r + n - |lcm T|, n).
inline NumericalPolynomial affine_hilbert_poly(const Staircase& E, std::size_t cap = subset_cap()) {
  const std::size_t n = E.nvars();
  const auto& g = E.generators();
  if (g.size() > cap)
    throw SizeCapError("staircase has " + std::to_string(g.size()) + " generators, cap is " + std::to_string(cap));
  NumericalPolynomial P;
  P.coeffs.assign(n + 1, Rational(0));
  auto add = [&](std::int64_t e, int sign) {
    const auto b = detail::shifted_binomial(static_cast<std::int64_t>(n) - e, n);
    for (std::size_t k = 0; k < b.size(); ++k) P.coeffs[k] += sign * b[k];
  };
  add(0, 1);
  const std::size_t q = g.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << q); ++mask) {
    ExponentVector l(n);
    int bits = 0;
    for (std::size_t i = 0; i < q; ++i)
      if (mask >> i & 1u) {
        l = lcm(l, g[i]);
        ++bits;
      }
    add(l.degree(), bits % 2 ? -1 : 1);
  }
  // least r0 such that the function agrees with P on [r0, n*delta]
  const std::int64_t top = static_cast<std::int64_t>(n) * E.max_degree();
  std::int64_t r0 = top;
  while (r0 > 0 && P(r0 - 1) == hs_function(E, r0 - 1)) --r0;
  P.stability_threshold = r0;
  return P;
}

/// The homogeneous Hilbert function from the affine one: aHf(r) - aHf(r-1).
inline std::int64_t homogeneous_hilbert_function(const Staircase& E, std::int64_t r) {
  return hs_function(E, r) - hs_function(E, r - 1);
}

/// D(n, d) = 2 ((d^2 + 2d) / 2)^(2^(n-1)) as an exact rational; it is
/// integral except for odd d with n >= 2, where a half-integer power survives.
inline Rational degree_bound_exact(std::int64_t n, std::int64_t d) {
  if (n < 1 || d < 1) throw DimensionError("degree bound needs n, d >= 1");
  if (n > 24) throw SizeCapError("degree bound exponent 2^(n-1) too large");
  const Rational base = make_rational(Integer(d * d + 2 * d), 2);
  Integer num, den;
  const unsigned long e = 1ul << (n - 1);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  return make_rational(2 * num, den);
}

/// The largest integer degree allowed by D(n, d), i.e. its floor.
inline Integer degree_bound(std::int64_t n, std::int64_t d) {
  const Rational D = degree_bound_exact(n, d);
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), D.get_num_mpz_t(), D.get_den_mpz_t());
  return f;
}

inline std::size_t hf_product_cap() { return detail::env_cap("PSB_HF_CAP", 100000); }

struct HSCountBounds {
  Integer hp_count;
  std::optional<Integer> hf_count;  // absent when the product length exceeds the cap
};

/// C(nD+n, n) and C(nD+n, n) * prod_{k=0}^{nD} (1 + C(k+n-1, n-1)), D = D(n, d).
/// Throws SizeCapError for hf_count past the cap unless `allow_partial`.
inline HSCountBounds hs_count_bounds(std::int64_t n, std::int64_t d, bool allow_partial = false,
                                     std::size_t cap = hf_product_cap()) {
  const Integer D = degree_bound(n, d);
  const Integer nD = D * n;
  HSCountBounds out{binomial(Integer(nD + n), n), std::nullopt};
  if (nD > cap) {
    if (allow_partial) return out;
    throw SizeCapError("hf_count product length " + nD.get_str() + " exceeds cap " + std::to_string(cap));
  }
  Integer prod = out.hp_count;
  const std::int64_t top = nD.get_si();
  for (std::int64_t k = 0; k <= top; ++k) prod *= 1 + binomial(k + n - 1, n - 1);
  out.hf_count = prod;
  return out;
}

}  // namespace psb
