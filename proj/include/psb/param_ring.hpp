#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "psb/groebner.hpp"
#include "psb/parse.hpp"

namespace psb {

/// Content-free, integral, positive leading coefficient under the ring order.
inline Polynomial canonical_coefficient(const Polynomial& c) { return c.primitive(); }

inline void sort_unique_canonical(std::vector<Polynomial>& v) {
  std::sort(v.begin(), v.end(), canonical_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// An ideal of the parameter ring Q[y] under a global order. The reduced
/// Groebner basis is computed once on first use and shared between copies.
class ParamIdeal {
 public:
  explicit ParamIdeal(RingPtr ring, std::vector<Polynomial> generators = {})
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    if (!ring_->order.is_global() && ring_->nvars() > 0)
      throw EngineError("parameter ring order must be global");
    for (auto& g : generators) {
      if (g.nvars() != ring_->nvars()) throw DimensionError("ideal generator from another ring");
      if (!g.is_zero()) gens_.push_back(g.with_ring(ring_));
    }
  }

  static ParamIdeal zero(RingPtr ring) { return ParamIdeal(std::move(ring)); }
  static ParamIdeal unit(RingPtr ring) {
    auto one = Polynomial::constant(ring, 1);
    return ParamIdeal(std::move(ring), {one});
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  const std::vector<Polynomial>& groebner() const {
    std::call_once(cache_->once, [&] { cache_->basis = groebner_basis(gens_); });
    return cache_->basis;
  }

  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_unit() const {
    const auto& g = groebner();
    return g.size() == 1 && g.front().is_constant();
  }

  /// Fully reduced normal form; zero iff c is in the ideal.
  Polynomial normal_form(const Polynomial& c) const {
    if (gens_.empty() || c.is_zero()) return c;
    return nf_buchberger(c, groebner(), true);
  }
  bool contains(const Polynomial& c) const { return normal_form(c).is_zero(); }
  bool contains(const ParamIdeal& o) const {
    return std::all_of(o.gens_.begin(), o.gens_.end(), [&](const Polynomial& g) { return contains(g); });
  }

  ParamIdeal plus(const std::vector<Polynomial>& extra) const {
    auto g = groebner();
    g.insert(g.end(), extra.begin(), extra.end());
    return ParamIdeal(ring_, std::move(g));
  }
  ParamIdeal plus(const Polynomial& h) const { return plus(std::vector<Polynomial>{h}); }

  /// Canonical text of the reduced basis; equal ideals give equal keys.
  std::string key() const {
    std::string k;
    for (const auto& g : groebner()) k += to_string(g) + ";";
    return k;
  }

  friend bool operator==(const ParamIdeal& a, const ParamIdeal& b) {
    const auto& ga = a.groebner();
    const auto& gb = b.groebner();
    return ga.size() == gb.size() && std::equal(ga.begin(), ga.end(), gb.begin());
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

inline const std::vector<Polynomial>& groebner_y(const ParamIdeal& Q) { return Q.groebner(); }

inline Polynomial coeff_normal_form(const Polynomial& c, const ParamIdeal& Q) { return Q.normal_form(c); }

inline bool is_member(const Polynomial& h, const ParamIdeal& Q) { return Q.contains(h); }

namespace detail {

// Ring with one more variable named `t`, placed first (eliminated) or last.
inline RingPtr ring_with_t(const RingPtr& base, bool t_first) {
  auto names = base->names;
  const std::size_t m = names.size();
  if (t_first) {
    names.insert(names.begin(), "_t");
    auto inner = m == 0 ? MonomialOrder::empty() : base->order;
    return make_ring(std::move(names), MonomialOrder::block(MonomialOrder::lex(1), inner));
  }
  names.push_back("_t");
  return make_ring(std::move(names), MonomialOrder::deglex(m + 1));
}

inline Polynomial embed(const Polynomial& p, const RingPtr& ring, std::size_t offset) {
  std::vector<Term> ts;
  for (const auto& t : p.terms()) {
    std::vector<ExponentVector::value_type> e(ring->nvars(), 0);
    for (std::size_t i = 0; i < p.nvars(); ++i) e[offset + i] = t.exp[i];
    ts.push_back({ExponentVector(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

}  // namespace detail

/// h^i in Q for some i, decided by 1 in Q + <1 - t*h> (Rabinowitsch).
inline bool in_radical(const Polynomial& h, const ParamIdeal& Q) {
  if (h.is_zero() || Q.is_unit()) return true;
  if (h.is_constant()) return false;
  if (Q.contains(h)) return true;
  const auto R = detail::ring_with_t(Q.ring(), false);
  const std::size_t m = Q.ring()->nvars();
  std::vector<Polynomial> F;
  for (const auto& g : Q.groebner()) F.push_back(detail::embed(g, R, 0));
  const auto t = Polynomial::variable(R, m);
  F.push_back(Polynomial::constant(R, 1) - t * detail::embed(h, R, 0));
  const auto G = groebner_basis(F);
  return G.size() == 1 && G.front().is_constant();
}

/// A ∩ B by eliminating t from t*A + (1-t)*B.
inline ParamIdeal ideal_intersect(const ParamIdeal& A, const ParamIdeal& B) {
  if (A.is_zero_ideal() || B.is_zero_ideal()) return ParamIdeal::zero(A.ring());
  if (A.is_unit()) return B;
  if (B.is_unit()) return A;
  const auto R = detail::ring_with_t(A.ring(), true);
  const auto t = Polynomial::variable(R, 0);
  const auto one = Polynomial::constant(R, 1);
  std::vector<Polynomial> F;
  for (const auto& a : A.groebner()) F.push_back(t * detail::embed(a, R, 1));
  for (const auto& b : B.groebner()) F.push_back((one - t) * detail::embed(b, R, 1));
  std::vector<Polynomial> out;
  for (const auto& g : groebner_basis(F)) {
    if (g.degree_in(0) > 0) continue;
    std::vector<Term> ts;
    for (const auto& term : g.terms()) ts.push_back({term.exp.slice(1, A.ring()->nvars()), term.coeff});
    out.push_back(Polynomial::from_terms(A.ring(), std::move(ts)));
  }
  return ParamIdeal(A.ring(), std::move(out));
}

/// gcd over Q[y], normalized primitive; via lcm = generator of <a> ∩ <b>.
inline Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.ring(), 1);
  const auto meet = ideal_intersect(ParamIdeal(a.ring(), {a}), ParamIdeal(a.ring(), {b}));
  const auto& g = meet.groebner();
  if (g.size() != 1) throw EngineError("intersection of principal ideals is not principal");
  return divide_exact(a * b, g.front()).primitive();
}

/// f / gcd(f, df/dy_1, ..., df/dy_m), normalized.
inline Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_constant()) return f.is_zero() ? f : Polynomial::constant(f.ring(), 1);
  Polynomial g = f;
  for (std::size_t i = 0; i < f.nvars() && !g.is_constant(); ++i) {
    const auto d = f.derivative(i);
    if (!d.is_zero()) g = polynomial_gcd(g, d);
  }
  if (g.is_constant()) return f.primitive();
  return divide_exact(f, g).primitive();
}

/// Factors recorded for a leading coefficient: each parameter y_i dividing
/// every term, plus the squarefree part of what remains when not constant.
/// Canonical, sorted and deduplicated; empty for nonzero constants.
inline std::vector<Polynomial> coefficient_factors(const Polynomial& c) {
  if (c.is_zero()) throw EngineError("factors of the zero coefficient");
  std::vector<Polynomial> out;
  const std::size_t m = c.nvars();
  std::vector<ExponentVector::value_type> low(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    low[i] = c.terms().front().exp[i];
    for (const auto& t : c.terms()) low[i] = std::min(low[i], t.exp[i]);
  }
  const ExponentVector mono(low);
  std::vector<Term> rest;
  for (const auto& t : c.terms()) rest.push_back({t.exp - mono, t.coeff});
  const auto r = Polynomial::from_terms(c.ring(), std::move(rest));
  for (std::size_t i = 0; i < m; ++i)
    if (low[i] > 0) out.push_back(Polynomial::variable(c.ring(), i));
  if (!r.is_constant()) out.push_back(squarefree_part(r));
  sort_unique_canonical(out);
  return out;
}

}  // namespace psb
