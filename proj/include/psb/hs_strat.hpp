#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "psb/stratify.hpp"

namespace psb {

/// Strata sharing one Hilbert-Samuel function. `staircases` lists every
/// distinct staircase among the regions (more than one only after merging by
/// equal HS functions).
struct HSStratum {
  std::vector<Stratum> regions;
  std::vector<Staircase> staircases;
  std::vector<std::int64_t> hs_values;  // HSf(0..r_max)
  NumericalPolynomial hs_polynomial;

  const Staircase& staircase() const { return staircases.front(); }
};

struct HSStratification {
  RingPtr xring, yring;
  std::vector<ParamPolynomial> shifted;  // f(x+y) for each input generator
  StratificationResult stratification;
  std::vector<HSStratum> strata;

  /// The merged stratum whose first matching region holds the point.
  const HSStratum* locate(std::span<const Rational> point) const {
    for (const auto& s : stratification.strata)
      if (s.contains(point))
        for (const auto& h : strata)
          for (const auto& r : h.regions)
            if (r.staircase == s.staircase && r.Q == s.Q && r.h_factors == s.h_factors) return &h;
    return nullptr;
  }
};

struct HSOptions {
  Engine engine = Engine::modified;
  Variant variant = Variant::exp2;
  std::size_t workers = 1;
  std::int64_t r_max = 8;
  bool merge_by_function = true;
  bool trace = false;
};

inline std::vector<std::int64_t> hs_values(const Staircase& E, std::int64_t r_max) {
  std::vector<std::int64_t> v;
  for (std::int64_t r = 0; r <= r_max; ++r) v.push_back(hs_function(E, r));
  return v;
}

/// Stratifies affine space by the local Hilbert-Samuel function of <F>:
/// J = sum Q[x,y] f(x+y) is stratified under the x-order of F's ring (which
/// must be valuation-compatible for the HS interpretation), then strata with
/// equal staircases are merged, then strata with equal HS functions.
inline HSStratification hs_stratify(const std::vector<Polynomial>& F, const HSOptions& opt = {}) {
  if (F.empty() || std::all_of(F.begin(), F.end(), [](const Polynomial& f) { return f.is_zero(); }))
    throw InputError("hs-strat needs at least one nonzero generator");
  const RingPtr xring = F.front().ring();
  const std::size_t n = xring->nvars();
  const RingPtr yring = make_ring(indexed_names("y", n), MonomialOrder::deglex(n));
  std::vector<ParamPolynomial> shifted;
  for (const auto& f : F)
    if (!f.is_zero()) shifted.push_back(taylor_shift(f, yring));

  StratifyOptions so;
  so.engine = opt.engine;
  so.variant = opt.variant;
  so.workers = opt.workers;
  so.trace = opt.trace;
  HSStratification out{xring, yring, shifted, stratify(shifted, yring, so), {}};
  if (!out.stratification.vanishing_ideal.is_unit())
    throw EngineError("vanishing locus is nonempty although the input ideal is nonzero");

  for (const auto& s : out.stratification.strata) {
    auto it = std::find_if(out.strata.begin(), out.strata.end(),
                           [&](const HSStratum& h) { return h.staircase() == s.staircase; });
    if (it != out.strata.end()) {
      it->regions.push_back(s);
      continue;
    }
    out.strata.push_back({{s}, {s.staircase}, hs_values(s.staircase, opt.r_max), affine_hilbert_poly(s.staircase)});
  }
  if (opt.merge_by_function) {
    std::vector<HSStratum> merged;
    for (auto& h : out.strata) {
      auto it = std::find_if(merged.begin(), merged.end(), [&](const HSStratum& m) {
        return m.hs_values == h.hs_values && m.hs_polynomial.coeffs == h.hs_polynomial.coeffs;
      });
      if (it == merged.end()) {
        merged.push_back(std::move(h));
        continue;
      }
      it->regions.insert(it->regions.end(), h.regions.begin(), h.regions.end());
      it->staircases.insert(it->staircases.end(), h.staircases.begin(), h.staircases.end());
    }
    out.strata = std::move(merged);
  }
  return out;
}

/// f(x + p), expanded by substituting x_i -> x_i + p_i.
inline Polynomial translate(const Polynomial& f, std::span<const Rational> p) {
  if (p.size() != f.nvars()) throw InputError("point has the wrong dimension");
  const auto& ring = f.ring();
  std::vector<Polynomial> lin;
  for (std::size_t i = 0; i < f.nvars(); ++i)
    lin.push_back(Polynomial::variable(ring, i) + Polynomial::constant(ring, p[i]));
  Polynomial out(ring);
  for (const auto& t : f.terms()) {
    Polynomial m = Polynomial::constant(ring, t.coeff);
    for (std::size_t i = 0; i < f.nvars(); ++i)
      if (t.exp[i] > 0) m *= lin[i].pow(static_cast<unsigned>(t.exp[i]));
    out += m;
  }
  return out;
}

/// Staircase of the ideal generated by F at x0: a classical standard basis of
/// <f(x + x0)> under the order of F's ring, leading exponents minimized.
inline Staircase staircase_at_point(const std::vector<Polynomial>& F, std::span<const Rational> x0) {
  std::vector<Polynomial> T;
  for (const auto& f : F)
    if (!f.is_zero()) T.push_back(translate(f, x0));
  const std::size_t n = F.front().nvars();
  std::vector<ExponentVector> e;
  for (const auto& g : standard_basis(T)) e.push_back(g.lead_exp());
  return Staircase(n, std::move(e));
}

/// HSf(0..r_max) of <F> localized at x0, computed directly at the point.
inline std::vector<std::int64_t> hs_at_point(const std::vector<Polynomial>& F, std::span<const Rational> x0,
                                             std::int64_t r_max = 8) {
  if (F.empty()) throw InputError("hs-at needs at least one generator");
  return hs_values(staircase_at_point(F, x0), r_max);
}

// ---------------------------------------------------------------------------
// Rational points on V(Q) \ V(h)

namespace detail {

inline std::vector<Integer> divisors(Integer a) {
  if (a < 0) a = -a;
  std::vector<Integer> d;
  if (a == 0 || a > Integer("1000000000000")) return d;
  for (Integer k = 1; k * k <= a; ++k)
    if (a % k == 0) {
      d.push_back(k);
      if (k * k != a) d.push_back(a / k);
    }
  return d;
}

// Rational roots of a univariate polynomial given by coefficients c[k] of t^k.
inline std::vector<Rational> rational_roots(std::vector<Rational> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::vector<Rational> roots;
  if (c.size() <= 1) return roots;
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  if (c.size() <= 1) return roots;
  Integer den = 1;
  for (const auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> z;
  for (const auto& q : c) z.push_back(Integer(q * den));
  auto eval = [&](const Rational& t) {
    Rational acc = 0;
    for (std::size_t k = z.size(); k-- > 0;) acc = acc * t + Rational(z[k]);
    return acc;
  };
  for (const auto& p : divisors(z.front()))
    for (const auto& q : divisors(z.back()))
      for (int s : {1, -1}) {
        const Rational t = make_rational(Integer(s * p), q);
        if (eval(t) == 0 && std::find(roots.begin(), roots.end(), t) == roots.end()) roots.push_back(t);
      }
  return roots;
}

inline RingPtr lex_ring(const RingPtr& base, const std::vector<std::size_t>& perm) {
  std::vector<MonomialOrder::Row> rows;
  for (auto v : perm) {
    MonomialOrder::Row r(base->nvars(), 0);
    r[v] = 1;
    rows.push_back(std::move(r));
  }
  return make_ring(base->names, MonomialOrder(std::move(rows), "lex"));
}

}  // namespace detail

/// Up to `count` distinct rational points of V(Q) \ V(h) found by randomized
/// back-substitution through lexicographic Groebner bases of Q under several
/// variable orders; free variables get random small integers. May return
/// fewer points (possibly none) when rational points are hard to find.
inline std::vector<std::vector<Rational>> sample_points(const ParamIdeal& Q, const std::vector<Polynomial>& h,
                                                        std::size_t count, std::uint64_t seed = 1,
                                                        std::size_t attempts = 400) {
  std::vector<std::vector<Rational>> found;
  if (Q.is_unit()) return found;
  const auto& ring = Q.ring();
  const std::size_t m = ring->nvars();
  std::mt19937_64 rng(seed);

  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()) && perms.size() < 24);

  std::vector<std::vector<Polynomial>> bases;
  for (const auto& p : perms) {
    const auto R = detail::lex_ring(ring, p);
    std::vector<Polynomial> F;
    for (const auto& g : Q.groebner()) F.push_back(g.with_ring(R));
    bases.push_back(groebner_basis(F));
  }

  for (std::size_t a = 0; a < attempts && found.size() < count; ++a) {
    const std::size_t k = a % perms.size();
    const auto& order = perms[k];  // order[0] is the largest lex variable
    const std::int64_t range = 3 + static_cast<std::int64_t>(a / perms.size());
    std::uniform_int_distribution<std::int64_t> pick(-range, range);
    std::vector<Rational> point(m, Rational(0));
    std::vector<bool> set(m, false);
    bool ok = true;
    // assign variables from the smallest lex variable upward
    for (std::size_t idx = m; idx-- > 0 && ok;) {
      const std::size_t v = order[idx];
      std::optional<std::vector<Rational>> candidates;
      for (const auto& g : bases[k]) {
        // g must only involve v and variables already set
        bool usable = g.degree_in(v) > 0;
        for (std::size_t w = 0; w < m && usable; ++w)
          if (w != v && !set[w] && g.degree_in(w) > 0) usable = false;
        if (!usable) continue;
        std::vector<Rational> c(static_cast<std::size_t>(g.degree_in(v)) + 1, Rational(0));
        for (const auto& t : g.terms()) {
          Rational val = t.coeff;
          for (std::size_t w = 0; w < m; ++w)
            if (w != v)
              for (std::int32_t e = 0; e < t.exp[w]; ++e) val *= point[w];
          c[static_cast<std::size_t>(t.exp[v])] += val;
        }
        if (std::all_of(c.begin(), c.end(), [](const Rational& q) { return q == 0; })) continue;
        auto roots = detail::rational_roots(c);
        if (!candidates) {
          candidates = roots;
        } else {
          std::erase_if(*candidates, [&](const Rational& r) { return std::find(roots.begin(), roots.end(), r) == roots.end(); });
        }
        if (candidates->empty()) break;
      }
      if (!candidates) {
        point[v] = pick(rng);
      } else if (candidates->empty()) {
        ok = false;
      } else {
        std::uniform_int_distribution<std::size_t> which(0, candidates->size() - 1);
        point[v] = (*candidates)[which(rng)];
      }
      set[v] = true;
    }
    if (!ok) continue;
    bool inside = true;
    for (const auto& g : Q.groebner())
      if (g.evaluate(point) != 0) inside = false;
    for (const auto& f : h)
      if (f.evaluate(point) == 0) inside = false;
    if (inside && std::find(found.begin(), found.end(), point) == found.end()) found.push_back(point);
  }
  return found;
}

}  // namespace psb
