#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "psb/mora_engine.hpp"

namespace psb {

/// g~ from the standard basis of <G1 u G2> under the block order, and a
/// representative g in <G1> with g~ - g in <G2>.
struct PairedBasisElement {
  ParamPolynomial g_tilde;
  ParamPolynomial g;
};

namespace detail {

inline ParamPolynomial homogenize_x(const ParamPolynomial& f, const RingPtr& hring) {
  const std::int64_t d = f.x_degree();
  std::vector<ParamTerm> ts;
  for (const auto& t : f.terms()) {
    std::vector<ExponentVector::value_type> e(t.exp.begin(), t.exp.end());
    e.push_back(static_cast<ExponentVector::value_type>(d - t.exp.degree()));
    ts.push_back({ExponentVector(std::move(e)), t.coeff});
  }
  return ParamPolynomial::from_terms(hring, f.yring(), std::move(ts));
}

inline ParamPolynomial dehomogenize_x(const ParamPolynomial& f, const RingPtr& base) {
  std::vector<ParamTerm> ts;
  for (const auto& t : f.terms()) ts.push_back({t.exp.slice(0, base->nvars()), t.coeff});
  return ParamPolynomial::from_terms(base, f.yring(), std::move(ts));
}

// Q[x,y] with x first, ordered by the block order (x-order, parameter order).
inline RingPtr joint_ring(const RingPtr& xring, const RingPtr& yring) {
  auto names = xring->names;
  names.insert(names.end(), yring->names.begin(), yring->names.end());
  const auto inner = yring->nvars() == 0 ? MonomialOrder::empty() : yring->order;
  return make_ring(std::move(names), MonomialOrder::block(xring->order, inner));
}

struct JointPair {
  Polynomial gt, g;
};

// Scales both members so that g~ is primitive with positive leading coefficient.
inline void normalize_pair(JointPair& p) {
  Rational c = p.gt.content();
  if (p.gt.lead_coeff() < 0) c = -c;
  const Rational inv = 1 / c;
  p.gt = p.gt * inv;
  p.g = p.g * inv;
}

// Reduces g~ by S (leading term only unless `full`), mirroring every step on g.
inline void reduce_pair(JointPair& h, const std::vector<JointPair>& S, bool full, std::size_t skip = SIZE_MAX) {
  Polynomial rem(h.gt.ring());
  while (!h.gt.is_zero()) {
    const auto& lt = h.gt.terms().front();
    const JointPair* div = nullptr;
    for (std::size_t k = 0; k < S.size(); ++k)
      if (k != skip && S[k].gt.lead_exp().divides(lt.exp)) {
        div = &S[k];
        break;
      }
    if (div) {
      const auto shift = lt.exp - div->gt.lead_exp();
      const Rational c = lt.coeff / div->gt.lead_coeff();
      h.gt -= div->gt.mul_term(shift, c);
      if (!div->g.is_zero()) h.g -= div->g.mul_term(shift, c);
    } else {
      if (!full) break;
      auto m = Polynomial::monomial(h.gt.ring(), lt.exp, lt.coeff);
      rem += m;
      h.gt -= m;
    }
  }
  if (full) h.gt = rem + h.gt;
}

}  // namespace detail

/// ModifiedStandard for G1 in Q[y][x] and G2 in Q[y] under the block order
/// (x-order, parameter order), returning a minimal interreduced standard
/// basis {g~} of <G1 u G2> with representatives g in <G1>, g~ - g in <G2>.
/// A non-global x-order is handled by homogenizing the x-part, completing
/// under the homogenizing order, and setting z = 1 at the end.
inline std::vector<PairedBasisElement> modified_standard(const std::vector<ParamPolynomial>& G1,
                                                         const std::vector<Polynomial>& G2, const RingPtr& xring,
                                                         const RingPtr& yring) {
  const bool homogenized = !xring->order.is_global();
  const RingPtr wring = homogenized ? homogenized_ring(xring, "_z") : xring;
  const RingPtr J = detail::joint_ring(wring, yring);
  const std::size_t nw = wring->nvars();

  std::vector<detail::JointPair> S;
  for (const auto& g : G1) {
    if (g.is_zero()) continue;
    auto w = homogenized ? detail::homogenize_x(g, wring) : g.with_xring(wring);
    auto p = w.to_joint(J);
    S.push_back({p, p});
  }
  const std::size_t first_seed = S.size();
  for (const auto& q : G2) {
    if (q.is_zero()) continue;
    std::vector<Term> ts;
    for (const auto& t : q.terms()) ts.push_back({concat(ExponentVector(nw), t.exp), t.coeff});
    S.push_back({Polynomial::from_terms(J, std::move(ts)), Polynomial(J)});
  }
  const std::size_t seed_end = S.size();
  for (std::size_t k = 0; k < first_seed; ++k) {
    // coefficients modulo <G2> first; the seeds carry zero shadows
    detail::JointPair p = S[k];
    std::vector<detail::JointPair> seeds(S.begin() + static_cast<std::ptrdiff_t>(first_seed), S.end());
    detail::reduce_pair(p, seeds, true);
    if (!p.gt.is_zero()) {
      detail::normalize_pair(p);
      S[k] = std::move(p);
    } else {
      S[k] = {Polynomial(J), Polynomial(J)};
    }
  }
  std::erase_if(S, [](const detail::JointPair& p) { return p.gt.is_zero(); });
  const std::size_t live_seeds_from = S.size() - (seed_end - first_seed);

  const auto& ord = J->order;
  std::vector<detail::CriticalPair> pairs;
  std::size_t serial = 0;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      // the seeds already form a Groebner basis among themselves
      if (i >= live_seeds_from && j >= live_seeds_from && j < live_seeds_from + (seed_end - first_seed)) continue;
      const auto& a = S[i].gt.lead_exp();
      const auto& b = S[j].gt.lead_exp();
      if (coprime(a, b)) continue;
      pairs.push_back({i, j, lcm(a, b), serial++});
    }
  };
  for (std::size_t j = 1; j < S.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto c = ord.compare(pairs[k].lcm, pairs[best].lcm);
      if (c < 0 || (c == 0 && pairs[k].serial < pairs[best].serial)) best = k;
    }
    const auto p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    // chain criterion: some element's lead divides the lcm and both partner pairs are gone
    bool chain = false;
    for (std::size_t k = 0; k < S.size() && !chain; ++k) {
      if (k == p.i || k == p.j || !S[k].gt.lead_exp().divides(p.lcm)) continue;
      auto pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return std::any_of(pairs.begin(), pairs.end(), [&](const auto& q) { return q.i == a && q.j == b; });
      };
      if (!pending(p.i, k) && !pending(p.j, k)) chain = true;
    }
    if (chain) continue;

    const auto& a = S[p.i];
    const auto& b = S[p.j];
    const auto sa = p.lcm - a.gt.lead_exp();
    const auto sb = p.lcm - b.gt.lead_exp();
    detail::JointPair h{a.gt.mul_term(sa, b.gt.lead_coeff()) - b.gt.mul_term(sb, a.gt.lead_coeff()),
                        a.g.mul_term(sa, b.gt.lead_coeff()) - b.g.mul_term(sb, a.gt.lead_coeff())};
    detail::reduce_pair(h, S, false);
    if (h.gt.is_zero()) continue;
    detail::normalize_pair(h);
    S.push_back(std::move(h));
    add_pairs_for(S.size() - 1);
  }

  // minimal basis, then tail reduction (mirrored)
  std::vector<detail::JointPair> M;
  for (std::size_t i = 0; i < S.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < S.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = S[j].gt.lead_exp();
      const auto& b = S[i].gt.lead_exp();
      if (a.divides(b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) M.push_back(S[i]);
  }
  for (std::size_t i = 0; i < M.size(); ++i) {
    detail::JointPair lead{Polynomial::monomial(J, M[i].gt.lead_exp(), M[i].gt.lead_coeff()), Polynomial(J)};
    detail::JointPair tail{M[i].gt - lead.gt, M[i].g};
    detail::reduce_pair(tail, M, true, i);
    M[i] = {lead.gt + tail.gt, tail.g};
    detail::normalize_pair(M[i]);
  }

  std::vector<PairedBasisElement> out;
  for (const auto& m : M) {
    auto gt = ParamPolynomial::from_joint(m.gt, wring, yring);
    auto g = ParamPolynomial::from_joint(m.g, wring, yring);
    if (homogenized) out.push_back({detail::dehomogenize_x(gt, xring), detail::dehomogenize_x(g, xring)});
    else out.push_back({gt.with_xring(xring), g.with_xring(xring)});
  }
  return out;
}

/// PSBmod': the g-components of ModifiedStandard(G, basis of Q) that are not
/// in Q[x,y]Q, with their mod-Q leading coefficients.
inline PseudoStandardBasis psb_mod_prime(const std::vector<ParamPolynomial>& G, const ParamIdeal& Q) {
  ModQContext ctx(Q);
  std::vector<ParamPolynomial> nz;
  for (const auto& g : G)
    if (!ctx.in_extension(g)) nz.push_back(g);
  if (nz.empty()) return {};
  const auto S = modified_standard(G, Q.groebner(), G.front().xring(), G.front().yring());
  std::vector<ParamPolynomial> kept;
  for (const auto& s : S)
    if (!ctx.in_extension(s.g)) kept.push_back(s.g.primitive());
  return detail::finish_basis(std::move(kept), Q);
}

}  // namespace psb
