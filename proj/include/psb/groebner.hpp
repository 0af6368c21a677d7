#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "psb/polynomial.hpp"

namespace psb {

// Classical standard bases over Q: Buchberger for global orders and Mora's
// tangent-cone normal form for arbitrary ones. These serve the parameter ring,
// the per-point oracle and the `sb` command.

/// Lead-term reduction w.r.t. a global order, then tail reduction when `full`.
inline Polynomial nf_buchberger(Polynomial f, const std::vector<Polynomial>& G, bool full = true) {
  Polynomial rem(f.ring());
  while (!f.is_zero()) {
    const auto& lt = f.terms().front();
    const Polynomial* div = nullptr;
    for (const auto& g : G)
      if (!g.is_zero() && g.lead_exp().divides(lt.exp)) {
        div = &g;
        break;
      }
    if (div) {
      f -= div->mul_term(lt.exp - div->lead_exp(), lt.coeff / div->lead_coeff());
    } else {
      if (!full) return f;
      rem += Polynomial::monomial(f.ring(), lt.exp, lt.coeff);
      f -= Polynomial::monomial(f.ring(), lt.exp, lt.coeff);
    }
  }
  return rem;
}

/// Exact quotient a / b (global order); throws if b does not divide a.
inline Polynomial divide_exact(Polynomial a, const Polynomial& b) {
  if (b.is_zero()) throw EngineError("division by zero polynomial");
  Polynomial q(a.ring());
  while (!a.is_zero()) {
    const auto& lt = a.terms().front();
    if (!b.lead_exp().divides(lt.exp)) throw EngineError("inexact polynomial division");
    Polynomial m = Polynomial::monomial(a.ring(), lt.exp - b.lead_exp(), lt.coeff / b.lead_coeff());
    a -= m * b;
    q += m;
  }
  return q;
}

/// a / b when b divides a exactly (under the ring's global order), else nullopt.
inline std::optional<Polynomial> try_divide(Polynomial a, const Polynomial& b) {
  if (b.is_zero()) return std::nullopt;
  Polynomial q(a.ring());
  while (!a.is_zero()) {
    const auto& lt = a.terms().front();
    if (!b.lead_exp().divides(lt.exp)) return std::nullopt;
    Polynomial m = Polynomial::monomial(a.ring(), lt.exp - b.lead_exp(), lt.coeff / b.lead_coeff());
    a -= m * b;
    q += m;
  }
  return q;
}

namespace detail {

struct CriticalPair {
  std::size_t i, j;
  ExponentVector lcm;
  std::size_t serial;
};

// Lowest total degree of the lcm first, then the smaller lcm under the order,
// then first-created.
inline std::size_t select_pair(const std::vector<CriticalPair>& pairs, const MonomialOrder& ord) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    const auto& a = pairs[k];
    const auto& b = pairs[best];
    const auto da = a.lcm.degree(), db = b.lcm.degree();
    if (da != db) {
      if (da < db) best = k;
      continue;
    }
    const auto c = ord.compare(a.lcm, b.lcm);
    if (c < 0 || (c == 0 && a.serial < b.serial)) best = k;
  }
  return best;
}

inline void drop_redundant_leads(std::vector<Polynomial>& G) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = G[j].lead_exp();
      const auto& b = G[i].lead_exp();
      if (a.divides(b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) out.push_back(G[i]);
  }
  G = std::move(out);
}

}  // namespace detail

/// Reduced Groebner basis under the ring's (global) order; elements primitive
/// with positive leading coefficient, sorted descending by leading exponent.
inline std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& F) {
  std::vector<Polynomial> G;
  for (const auto& f : F)
    if (!f.is_zero()) G.push_back(f.primitive());
  if (G.empty()) return G;
  const auto ring = G.front().ring();
  if (!ring->order.is_global()) throw EngineError("groebner_basis needs a global order");
  for (const auto& g : G)
    if (g.is_constant()) return {Polynomial::constant(ring, 1)};

  std::vector<detail::CriticalPair> pairs;
  std::size_t serial = 0;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto& a = G[i].lead_exp();
      const auto& b = G[j].lead_exp();
      if (coprime(a, b)) continue;
      pairs.push_back({i, j, lcm(a, b), serial++});
    }
  };
  for (std::size_t j = 1; j < G.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    const std::size_t k = detail::select_pair(pairs, ring->order);
    const auto p = pairs[k];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
    Polynomial h = nf_buchberger(s_polynomial(G[p.i], G[p.j]), G, false);
    if (h.is_zero()) continue;
    h = h.primitive();
    if (h.is_constant()) return {Polynomial::constant(ring, 1)};
    G.push_back(std::move(h));
    add_pairs_for(G.size() - 1);
  }

  detail::drop_redundant_leads(G);
  std::vector<Polynomial> R;
  for (std::size_t i = 0; i < G.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < G.size(); ++j)
      if (j != i) others.push_back(G[j]);
    const auto lt = G[i].terms().front();
    Polynomial tail = G[i] - Polynomial::monomial(ring, lt.exp, lt.coeff);
    R.push_back((Polynomial::monomial(ring, lt.exp, lt.coeff) + nf_buchberger(tail, others)).primitive());
  }
  std::sort(R.begin(), R.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->order.compare(a.lead_exp(), b.lead_exp()) > 0;
  });
  return R;
}

/// Mora's normal form for an arbitrary order: returns h with u*f - h in <G>,
/// u a unit of the localization, and exp(h) outside the staircase of G.
/// The divisor of minimal ecart is chosen; intermediate remainders join the
/// divisor set when their ecart is smaller than that of the chosen divisor.
inline Polynomial nf_mora(Polynomial h, const std::vector<Polynomial>& G) {
  std::vector<Polynomial> T;
  for (const auto& g : G)
    if (!g.is_zero()) T.push_back(g);
  const bool global = h.order().is_global();
  std::vector<std::int64_t> ecarts;
  for (const auto& g : T) ecarts.push_back(g.ecart());
  while (!h.is_zero()) {
    const auto& lead = h.lead_exp();
    std::optional<std::size_t> pick;
    for (std::size_t k = 0; k < T.size(); ++k) {
      if (!T[k].lead_exp().divides(lead)) continue;
      if (!pick || ecarts[k] < ecarts[*pick]) pick = k;
    }
    if (!pick) break;
    const std::int64_t eh = h.ecart();
    if (!global && ecarts[*pick] > eh) {
      T.push_back(h);
      ecarts.push_back(eh);
    }
    const Polynomial& g = T[*pick];
    h = (h * g.lead_coeff() - g.mul_term(lead - g.lead_exp(), h.lead_coeff()));
    if (!h.is_zero()) h = h.primitive();
  }
  return h;
}

/// Standard basis (not reduced) under the ring's order via Mora normal forms.
inline std::vector<Polynomial> standard_basis(const std::vector<Polynomial>& F) {
  std::vector<Polynomial> S;
  for (const auto& f : F)
    if (!f.is_zero()) S.push_back(f.primitive());
  if (S.empty()) return S;
  const auto ring = S.front().ring();
  if (ring->order.is_global()) return groebner_basis(S);

  std::vector<detail::CriticalPair> pairs;
  std::size_t serial = 0;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto& a = S[i].lead_exp();
      const auto& b = S[j].lead_exp();
      if (coprime(a, b)) continue;
      pairs.push_back({i, j, lcm(a, b), serial++});
    }
  };
  for (std::size_t j = 1; j < S.size(); ++j) add_pairs_for(j);
  while (!pairs.empty()) {
    const std::size_t k = detail::select_pair(pairs, ring->order);
    const auto p = pairs[k];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
    Polynomial h = nf_mora(s_polynomial(S[p.i], S[p.j]), S);
    if (h.is_zero()) continue;
    S.push_back(h.primitive());
    add_pairs_for(S.size() - 1);
  }
  detail::drop_redundant_leads(S);
  return S;
}

/// f in the ideal generated by a Groebner basis (global) or standard basis (any order).
inline bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& basis) {
  if (f.is_zero()) return true;
  if (f.order().is_global()) return nf_buchberger(f, basis, false).is_zero();
  return nf_mora(f, basis).is_zero();
}

}  // namespace psb
