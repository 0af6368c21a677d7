#pragma once

#include <algorithm>
#include <deque>
#include <future>
#include <iostream>
#include <span>
#include <string>
#include <vector>

#include "psb/hilbert.hpp"
#include "psb/modified_standard.hpp"
#include "psb/mora_engine.hpp"

namespace psb {

enum class Engine { mora, modified };
enum class Variant { exp1, exp2 };

/// The constructible set V(Q) \ V(h) with h the product of `h_factors`, and a
/// pseudo standard basis valid on it.
struct Stratum {
  ParamIdeal Q;
  std::vector<Polynomial> h_factors;  // canonical and sorted; empty means h = 1
  std::vector<ParamPolynomial> basis;
  std::vector<ExponentVector> exps;   // exp^modQ of each basis element
  Staircase staircase;
  std::size_t depth = 0;

  Polynomial h() const {
    Polynomial p = Polynomial::constant(Q.ring(), 1);
    for (const auto& f : h_factors) p *= f;
    return p;
  }

  bool contains(std::span<const Rational> point) const {
    for (const auto& g : Q.groebner())
      if (g.evaluate(point) != 0) return false;
    for (const auto& f : h_factors)
      if (f.evaluate(point) == 0) return false;
    return true;
  }
};

struct StratificationResult {
  std::vector<Stratum> strata;
  ParamIdeal vanishing_ideal;
  std::size_t max_depth = 0;

  /// First stratum (in stored order) whose region holds the point.
  const Stratum* locate(std::span<const Rational> point) const {
    for (const auto& s : strata)
      if (s.contains(point)) return &s;
    return nullptr;
  }
};

struct StratifyOptions {
  Engine engine = Engine::mora;
  Variant variant = Variant::exp2;
  std::size_t workers = 1;
  bool canonicalize = true;
  std::size_t max_branches = 20000;
  bool trace = false;  // one line per processed branch on std::clog
};

inline PseudoStandardBasis pseudo_standard_basis(const std::vector<ParamPolynomial>& G, const ParamIdeal& Q,
                                                 Engine engine) {
  return engine == Engine::mora ? psb_mod(G, Q) : psb_mod_prime(G, Q);
}

namespace detail {

inline std::vector<std::string> factor_keys(const std::vector<Polynomial>& fs) {
  std::vector<std::string> k;
  for (const auto& f : fs) k.push_back(to_string(f));
  return k;
}

inline void canonicalize(std::vector<Stratum>& strata) {
  std::stable_sort(strata.begin(), strata.end(), [](const Stratum& a, const Stratum& b) {
    const auto& ga = a.Q.groebner();
    const auto& gb = b.Q.groebner();
    if (ga.size() != gb.size()) return ga.size() < gb.size();
    for (std::size_t i = 0; i < ga.size(); ++i) {
      if (canonical_less(ga[i], gb[i])) return true;
      if (canonical_less(gb[i], ga[i])) return false;
    }
    return std::lexicographical_compare(a.h_factors.begin(), a.h_factors.end(), b.h_factors.begin(),
                                        b.h_factors.end(), canonical_less);
  });
  std::vector<Stratum> out;
  for (auto& s : strata) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](const Stratum& t) {
      return t.staircase == s.staircase && t.Q == s.Q && t.h_factors == s.h_factors;
    });
    if (!dup) out.push_back(std::move(s));
  }
  strata = std::move(out);
}

}  // namespace detail

/// The stratification loop over a FIFO queue of parameter ideals, starting at <0>.
///
/// At each Q a pseudo standard basis is computed. If every generator lies in
/// C[x]Q the branch contributes Q to the vanishing ideal. Otherwise the mod-Q
/// leading coefficients are split into canonical factors h'. StratExp1 emits
/// (Q, h) and enqueues Q + <h'> for every factor. StratExp2 additionally drops
/// empty strata: when some factors are nilpotent modulo Q, V(Q) lies inside
/// all of their zero sets, so no stratum is emitted and the single branch
/// Q + <nilpotent factors> is enqueued; otherwise the stratum is emitted when
/// h is not in the radical of Q and every factor is enqueued.
inline StratificationResult stratify(const std::vector<ParamPolynomial>& G, const RingPtr& yring,
                                     const StratifyOptions& opt = {}) {
  struct Branch {
    ParamIdeal Q;
    std::size_t depth;
  };
  StratificationResult res{{}, ParamIdeal::unit(yring), 0};
  std::vector<ParamPolynomial> gens;
  for (const auto& g : G)
    if (!g.is_zero()) gens.push_back(g);
  const std::size_t n = G.empty() ? 0 : G.front().xring()->nvars();

  std::deque<Branch> queue;
  queue.push_back({ParamIdeal::zero(yring), 0});
  std::size_t processed = 0;

  auto enqueue = [&](const ParamIdeal& Q, const std::vector<Polynomial>& extra, std::size_t depth) {
    for (const auto& f : extra)
      if (Q.contains(f)) throw EngineError("branch ideal would not grow: " + to_string(f) + " already in Q");
    queue.push_back({Q.plus(extra), depth + 1});
  };

  while (!queue.empty()) {
    std::vector<Branch> batch;
    const std::size_t take = std::max<std::size_t>(1, opt.workers);
    while (!queue.empty() && batch.size() < take) {
      batch.push_back(std::move(queue.front()));
      queue.pop_front();
    }
    processed += batch.size();
    if (processed > opt.max_branches) throw SizeCapError("stratification exceeded the branch cap");

    std::vector<PseudoStandardBasis> bases(batch.size());
    if (batch.size() == 1) {
      bases[0] = gens.empty() ? PseudoStandardBasis{} : pseudo_standard_basis(gens, batch[0].Q, opt.engine);
    } else {
      std::vector<std::future<PseudoStandardBasis>> jobs;
      for (const auto& b : batch)
        jobs.push_back(std::async(std::launch::async, [&gens, &b, &opt] {
          return gens.empty() ? PseudoStandardBasis{} : pseudo_standard_basis(gens, b.Q, opt.engine);
        }));
      for (std::size_t k = 0; k < jobs.size(); ++k) bases[k] = jobs[k].get();
    }

    for (std::size_t k = 0; k < batch.size(); ++k) {
      auto& br = batch[k];
      auto& psb = bases[k];
      res.max_depth = std::max(res.max_depth, br.depth);
      if (opt.trace) {
        std::clog << "branch depth " << br.depth << " Q=<" << br.Q.key() << "> basis " << psb.basis.size()
                  << " H";
        for (const auto& c : psb.H) std::clog << ' ' << to_string(c);
        std::clog << '\n';
      }
      if (psb.basis.empty()) {
        res.vanishing_ideal = ideal_intersect(res.vanishing_ideal, br.Q);
        continue;
      }
      std::vector<Polynomial> factors;
      for (const auto& c : psb.H)
        for (auto& f : coefficient_factors(c)) factors.push_back(std::move(f));
      sort_unique_canonical(factors);

      Stratum s{br.Q, factors, psb.basis, psb.exps, Staircase(n, psb.exps), br.depth};
      if (opt.variant == Variant::exp1) {
        res.strata.push_back(std::move(s));
        for (const auto& f : factors) enqueue(br.Q, {f}, br.depth);
        continue;
      }
      std::vector<Polynomial> nilpotent;
      for (const auto& f : factors)
        if (in_radical(f, br.Q)) nilpotent.push_back(f);
      if (!nilpotent.empty()) {
        enqueue(br.Q, nilpotent, br.depth);
        continue;
      }
      if (!in_radical(s.h(), br.Q)) res.strata.push_back(std::move(s));
      for (const auto& f : factors) enqueue(br.Q, {f}, br.depth);
    }
  }
  if (opt.canonicalize) detail::canonicalize(res.strata);
  return res;
}

inline StratificationResult strat_exp1(const std::vector<ParamPolynomial>& G, const RingPtr& yring,
                                       Engine engine = Engine::mora) {
  return stratify(G, yring, {engine, Variant::exp1});
}

inline StratificationResult strat_exp2(const std::vector<ParamPolynomial>& G, const RingPtr& yring,
                                       Engine engine = Engine::mora) {
  return stratify(G, yring, {engine, Variant::exp2});
}

/// Union of the strata bases with duplicates removed.
inline std::vector<ParamPolynomial> comprehensive_basis(const StratificationResult& R) {
  std::vector<ParamPolynomial> out;
  for (const auto& s : R.strata)
    for (const auto& g : s.basis) {
      const auto c = g.primitive();
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
  return out;
}

}  // namespace psb
