#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "psb/param_polynomial.hpp"
#include "psb/param_ring.hpp"

namespace psb {

/// Leading data of f after dropping every term whose coefficient lies in Q.
struct ModQLeadData {
  ExponentVector exp_mod;
  Polynomial lc_mod;
  std::int64_t ecart_mod;
};

/// Memoized coefficient normal forms modulo one ideal; one per completion run.
class ModQContext {
 public:
  explicit ModQContext(ParamIdeal Q) : Q_(std::move(Q)) {}

  const ParamIdeal& ideal() const noexcept { return Q_; }

  bool vanishes(const Polynomial& c) {
    if (c.is_zero()) return true;
    if (Q_.is_zero_ideal()) return false;
    if (c.is_constant()) return Q_.is_unit();
    auto it = memo_.find(c);
    if (it != memo_.end()) return it->second;
    const bool v = Q_.contains(c);
    memo_.emplace(c, v);
    return v;
  }

  std::optional<ModQLeadData> lead(const ParamPolynomial& f) {
    const ParamTerm* top = nullptr;
    std::int64_t deg = -1;
    for (const auto& t : f.terms()) {
      if (vanishes(t.coeff)) continue;
      if (!top) top = &t;
      deg = std::max(deg, t.exp.degree());
    }
    if (!top) return std::nullopt;
    return ModQLeadData{top->exp, top->coeff, deg - top->exp.degree()};
  }

  /// True when every coefficient of f lies in Q, i.e. f in C[x]Q.
  bool in_extension(const ParamPolynomial& f) {
    for (const auto& t : f.terms())
      if (!vanishes(t.coeff)) return false;
    return true;
  }

 private:
  ParamIdeal Q_;
  std::unordered_map<Polynomial, bool, PolynomialHash> memo_;
};

inline std::optional<ModQLeadData> lead_mod(const ParamPolynomial& f, const ParamIdeal& Q) {
  ModQContext ctx(Q);
  return ctx.lead(f);
}

namespace detail {

inline ParamPolynomial s_poly_mod(const ParamPolynomial& f, const ModQLeadData& lf, const ParamPolynomial& g,
                                  const ModQLeadData& lg) {
  const ExponentVector gamma = lcm(lf.exp_mod, lg.exp_mod);
  return f.mul_term(gamma - lf.exp_mod, lg.lc_mod) - g.mul_term(gamma - lg.exp_mod, lf.lc_mod);
}

}  // namespace detail

/// lc^modQ(g) x^(gamma-alpha) f - lc^modQ(f) x^(gamma-beta) g.
inline ParamPolynomial s_poly_mod(const ParamPolynomial& f, const ParamPolynomial& g, const ParamIdeal& Q) {
  ModQContext ctx(Q);
  auto lf = ctx.lead(f);
  auto lg = ctx.lead(g);
  if (!lf || !lg) throw UndefinedLeadError("S-polynomial modulo Q of an element of C[x]Q");
  return detail::s_poly_mod(f, *lf, g, *lg);
}

/// u f = sum_k quotients[k] G[k] + q_part + remainder.
struct DivisionCertificate {
  ParamPolynomial unit_u;
  std::vector<ParamPolynomial> quotients;
  ParamPolynomial q_part;
  ParamPolynomial remainder;
};

struct NormalFormResult {
  ParamPolynomial remainder;
  std::optional<DivisionCertificate> certificate;
};

struct MoraLimits {
  std::size_t max_steps = 200000;
};

namespace detail {

struct Divisor {
  ParamPolynomial poly;
  ModQLeadData lead;
  std::vector<ParamPolynomial> coords;  // poly = coords[0] f + sum coords[k+1] G[k]
};

inline NormalFormResult nf_mora_mod(ModQContext& ctx, const ParamPolynomial& f, const std::vector<ParamPolynomial>& G,
                                    bool certify, const MoraLimits& limits = {}) {
  const auto& xr = f.xring();
  const auto& yr = f.yring();
  const ParamPolynomial zero(xr, yr);
  const auto one = ParamPolynomial::constant(xr, yr, Polynomial::constant(yr, 1));
  const std::size_t width = certify ? G.size() + 1 : 0;

  std::vector<Divisor> T;
  for (std::size_t k = 0; k < G.size(); ++k) {
    auto l = ctx.lead(G[k]);
    if (!l) continue;
    std::vector<ParamPolynomial> c;
    if (certify) {
      c.assign(width, zero);
      c[k + 1] = one;
    }
    T.push_back({G[k], std::move(*l), std::move(c)});
  }

  ParamPolynomial h = f;
  std::vector<ParamPolynomial> hc;
  if (certify) {
    hc.assign(width, zero);
    hc[0] = one;
  }
  const bool global = f.order().is_global();
  std::size_t steps = 0;

  for (;;) {
    auto lh = ctx.lead(h);
    if (!lh) break;
    std::optional<std::size_t> pick;
    for (std::size_t k = 0; k < T.size(); ++k) {
      const auto& lk = T[k].lead;
      if (!lk.exp_mod.divides(lh->exp_mod)) continue;
      if (!pick) {
        pick = k;
        continue;
      }
      const auto& lp = T[*pick].lead;
      if (lk.ecart_mod < lp.ecart_mod ||
          (lk.ecart_mod == lp.ecart_mod && f.order().compare(lk.exp_mod, lp.exp_mod) < 0))
        pick = k;
    }
    if (!pick) break;
    if (++steps > limits.max_steps) throw EngineError("normal form modulo Q exceeded the step limit");
    if (!global && T[*pick].lead.ecart_mod > lh->ecart_mod) T.push_back({h, *lh, hc});

    const Divisor& g = T[*pick];
    const ExponentVector shift = lh->exp_mod - g.lead.exp_mod;
    // h := a h - b x^shift g with a/b = lc(g)/lc(h), cancelled when lc(g) divides lc(h).
    Polynomial a = g.lead.lc_mod;
    Polynomial b = lh->lc_mod;
    if (auto q = try_divide(b, a)) {
      a = Polynomial::constant(yr, 1);
      b = *q;
    }
    h = h.mul_term(ExponentVector(h.xring()->nvars()), a) - g.poly.mul_term(shift, b);
    if (certify)
      for (std::size_t k = 0; k < width; ++k)
        hc[k] = hc[k].mul_term(ExponentVector(xr->nvars()), a) - g.coords[k].mul_term(shift, b);
    if (!h.is_zero()) {
      const Rational c = h.content();
      if (c != 1) {
        h = h.scale(Rational(1 / c));
        if (certify)
          for (auto& v : hc) v = v.scale(Rational(1 / c));
      }
    }
  }

  NormalFormResult res{h, std::nullopt};
  if (certify) {
    DivisionCertificate cert{hc[0], {}, zero, h};
    for (std::size_t k = 0; k < G.size(); ++k) cert.quotients.push_back(-hc[k + 1]);
    res.certificate = std::move(cert);
  }
  return res;
}

}  // namespace detail

/// Pseudo normal form of f modulo Q by Mora's ecart-driven division: choose a
/// divisor of minimal ecart^modQ, then the smaller exp^modQ, then the first
/// inserted; intermediate remainders join the divisor set when their ecart is
/// below the chosen divisor's.
inline NormalFormResult nf_mora_mod(const ParamPolynomial& f, const std::vector<ParamPolynomial>& G,
                                    const ParamIdeal& Q, bool certify = true) {
  ModQContext ctx(Q);
  return detail::nf_mora_mod(ctx, f, G, certify);
}

struct StandardModResult {
  std::vector<ParamPolynomial> basis;
  std::vector<bool> in_q;  // element lies in C[x]Q; callers filter these out
};

namespace detail {

struct ModPair {
  std::size_t i, j;
  ExponentVector lcm;
  std::size_t serial;
};

}  // namespace detail

/// Completion Standard^modQ. Pairs are taken lowest lcm degree first, then the
/// smaller lcm under the order, then first-created.
inline StandardModResult standard_mod(const std::vector<ParamPolynomial>& G, const ParamIdeal& Q,
                                      const MoraLimits& limits = {}) {
  ModQContext ctx(Q);
  StandardModResult res;
  std::vector<std::optional<ModQLeadData>> leads;
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    auto l = ctx.lead(g);
    res.basis.push_back(g.primitive());
    res.in_q.push_back(!l);
    leads.push_back(std::move(l));
  }
  if (res.basis.empty()) return res;
  const auto& ord = res.basis.front().order();

  std::vector<detail::ModPair> pairs;
  std::size_t serial = 0;
  auto unit_lc = [&](std::size_t k) { return Q.normal_form(leads[k]->lc_mod).is_constant(); };
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!leads[i]) continue;
      const auto& a = leads[i]->exp_mod;
      const auto& b = leads[j]->exp_mod;
      if (coprime(a, b) && unit_lc(i) && unit_lc(j)) continue;
      pairs.push_back({i, j, lcm(a, b), serial++});
    }
  };
  for (std::size_t j = 0; j < res.basis.size(); ++j)
    if (leads[j]) add_pairs_for(j);

  auto active = [&] {
    std::vector<ParamPolynomial> v;
    for (std::size_t k = 0; k < res.basis.size(); ++k)
      if (leads[k]) v.push_back(res.basis[k]);
    return v;
  };

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto& a = pairs[k];
      const auto& b = pairs[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      const auto c = ord.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && a.serial < b.serial)) best = k;
    }
    const auto p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    const auto s = detail::s_poly_mod(res.basis[p.i], *leads[p.i], res.basis[p.j], *leads[p.j]);
    auto h = detail::nf_mora_mod(ctx, s, active(), false, limits).remainder;
    auto lh = ctx.lead(h);
    if (!lh) continue;
    h = h.primitive();
    res.basis.push_back(h);
    res.in_q.push_back(false);
    leads.push_back(ctx.lead(h));
    add_pairs_for(res.basis.size() - 1);
  }
  return res;
}

/// A pseudo standard basis modulo Q with its mod-Q leading data.
struct PseudoStandardBasis {
  std::vector<ParamPolynomial> basis;
  std::vector<ExponentVector> exps;     // exp^modQ per element
  std::vector<Polynomial> lcs;          // canonical normal form of lc^modQ per element
  std::vector<Polynomial> H;            // the distinct lcs, sorted
};

namespace detail {

inline PseudoStandardBasis finish_basis(std::vector<ParamPolynomial> basis, const ParamIdeal& Q) {
  ModQContext ctx(Q);
  PseudoStandardBasis out;
  for (auto& g : basis) {
    auto l = ctx.lead(g);
    if (!l) continue;
    out.exps.push_back(l->exp_mod);
    out.lcs.push_back(canonical_coefficient(Q.normal_form(l->lc_mod)));
    out.basis.push_back(std::move(g));
  }
  out.H = out.lcs;
  sort_unique_canonical(out.H);
  return out;
}

}  // namespace detail

/// PSBmod: empty when every generator lies in C[x]Q; otherwise the completion
/// with elements of C[x]Q removed, plus H = {lc^modQ(g)} represented by
/// normal forms modulo Q.
inline PseudoStandardBasis psb_mod(const std::vector<ParamPolynomial>& G, const ParamIdeal& Q,
                                   const MoraLimits& limits = {}) {
  auto sm = standard_mod(G, Q, limits);
  std::vector<ParamPolynomial> kept;
  for (std::size_t k = 0; k < sm.basis.size(); ++k)
    if (!sm.in_q[k]) kept.push_back(std::move(sm.basis[k]));
  if (kept.empty()) return {};
  return detail::finish_basis(std::move(kept), Q);
}

}  // namespace psb
