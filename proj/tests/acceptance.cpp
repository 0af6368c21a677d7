// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles/naive_buchberger.hpp"

using namespace psb;
using fixtures::Fixture;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Run {
  HSStratification R;
  double seconds;
};

// Each fixture is stratified once (default engine) and shared by the criteria.
const Run& run_of(const Fixture& f) {
  static std::map<std::string, Run> cache;
  auto it = cache.find(f.name);
  if (it == cache.end()) {
    const auto t0 = std::chrono::steady_clock::now();
    auto R = hs_stratify(fixtures::inputs(f));
    it = cache.emplace(f.name, Run{std::move(R), seconds_since(t0)}).first;
  }
  return it->second;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixtures::all())
    if (f.name == name) return f;
  throw std::runtime_error("no fixture " + name);
}

// Golden lines matched exactly, every computed stratum accounted for, stratum count and runtime.
Outcome exact_fixture(const std::string& name, std::size_t expected, double limit) {
  Outcome o;
  const auto& f = fixture(name);
  const auto& run = run_of(f);
  const auto& strata = run.R.stratification.strata;
  const auto golden = fixtures::dedup(fixtures::read_golden(f.golden, f.n));
  if (strata.size() != expected) o.fail(std::to_string(strata.size()) + " strata, expected " + std::to_string(expected));
  if (run.R.strata.size() != expected) o.fail(std::to_string(run.R.strata.size()) + " HS strata after merging");
  for (const auto& g : golden)
    if (std::none_of(strata.begin(), strata.end(), [&](const Stratum& s) { return fixtures::matches(g, s); }))
      o.fail("no stratum matches " + g.text);
  for (const auto& s : strata)
    if (std::none_of(golden.begin(), golden.end(), [&](const auto& g) { return fixtures::matches(g, s); }))
      o.fail("unexpected stratum " + stratum_line(s, run.R.xring->names));
  if (run.seconds >= limit) o.fail("runtime " + std::to_string(run.seconds) + " s");
  if (o.pass) {
    std::ostringstream d;
    d << strata.size() << " strata match the reference output exactly in " << run.seconds << " s";
    o.detail = d.str();
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto& f = fixture("line_and_cusp");
  const auto& run = run_of(f);
  const auto& strata = run.R.stratification.strata;
  const auto lines = fixtures::read_golden(f.golden, f.n);
  const auto golden = fixtures::dedup(lines);
  // the two required lines: the origin and V(x1,x2) \ V(x3)
  for (std::size_t k : {3u, 4u})
    if (std::none_of(strata.begin(), strata.end(), [&](const Stratum& s) { return fixtures::matches(lines[k], s); }))
      o.fail("no stratum matches " + lines[k].text);
  std::size_t exact = 0, points = 0;
  for (const auto& g : golden) {
    if (std::any_of(strata.begin(), strata.end(), [&](const Stratum& s) { return fixtures::matches(g, s); })) ++exact;
    // semantic check: points of each reference region get its reference staircase
    const auto pts = sample_points(ParamIdeal(g.ring, g.Q), g.H, 3, 11);
    if (pts.empty()) std::cerr << "warning: no rational point found for reference line " << g.text << '\n';
    for (const auto& p : pts) {
      ++points;
      const Stratum* s = run.R.stratification.locate(p);
      if (!s) o.fail("point " + fixtures::point_string(p) + " not covered");
      else if (s->staircase != g.staircase)
        o.fail("at " + fixtures::point_string(p) + " staircase " + s->staircase.to_string() + " vs reference " +
               g.staircase.to_string());
      if (staircase_at_point(fixtures::inputs(f), p) != g.staircase)
        o.fail("direct computation at " + fixtures::point_string(p) + " disagrees with reference line " + g.text);
    }
  }
  if (run.seconds >= 60) o.fail("runtime " + std::to_string(run.seconds) + " s");
  if (o.pass) {
    std::ostringstream d;
    d << "required lines present; " << exact << "/" << golden.size()
      << " distinct reference lines match symbolically, all agree on " << points << " sampled points; " << run.seconds
      << " s";
    o.detail = d.str();
  }
  return o;
}

// Sampled points per stratum region, shared by criteria 5 and 6.
std::vector<std::vector<Rational>> samples(const Stratum& s) {
  auto pts = sample_points(s.Q, s.h_factors, 3, 5);
  if (pts.size() < 3) {
    std::cerr << "warning: only " << pts.size() << " rational point(s) found on [" << s.Q.key() << "] minus h\n";
  }
  return pts;
}

Outcome criterion5() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& f : fixtures::all()) {
    const auto G = fixtures::shifted(f);
    const auto& run = run_of(f);
    for (const Engine e : {Engine::modified, Engine::mora}) {
      const auto R = e == Engine::modified ? run.R.stratification : stratify(G, fixtures::yring(f.n));
      for (const auto& s : R.strata)
        for (const auto& p : samples(s)) {
          ++checked;
          const auto why = fixtures::check_specialization(s, G, p);
          if (!why.empty()) o.fail(f.name + " at " + fixtures::point_string(p) + ": " + why);
        }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " specializations (both engines) are standard bases with the predicted leads";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& f : fixtures::all()) {
    const auto& run = run_of(f);
    const auto F = fixtures::inputs(f);
    for (const auto& h : run.R.strata)
      for (const auto& region : h.regions)
        for (const auto& p : samples(region)) {
          ++checked;
          const auto* located = run.R.locate(p);
          if (located != &h) o.fail(f.name + ": point " + fixtures::point_string(p) + " located in another stratum");
          if (hs_at_point(F, p, 8) != h.hs_values)
            o.fail(f.name + ": HS values differ at " + fixtures::point_string(p));
        }
  }
  if (o.pass) o.detail = std::to_string(checked) + " points agree for r <= 8";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 3, q = 1 + rng() % 5;
    std::vector<ExponentVector> gens;
    for (std::size_t k = 0; k < q; ++k) {
      const int deg = static_cast<int>(rng() % 7);
      std::vector<std::int32_t> e(n, 0);
      for (int d = 0; d < deg; ++d) ++e[rng() % n];
      gens.emplace_back(std::move(e));
    }
    const Staircase E(n, gens);
    const auto P = affine_hilbert_poly(E);
    const std::int64_t nd = static_cast<std::int64_t>(n) * E.max_degree();
    if (P.stability_threshold > nd) o.fail("threshold above n*delta for " + E.to_string());
    for (std::int64_t r = nd; r <= nd + 5; ++r)
      if (P(r) != hs_function(E, r)) o.fail("mismatch at r=" + std::to_string(r) + " for " + E.to_string());
  }
  for (std::int64_t n = 1; n <= 4; ++n)
    for (std::int64_t delta = 0; delta <= 6; ++delta) {
      // chains delta >= b1 >= ... >= bn >= 0
      std::function<std::int64_t(std::int64_t, std::int64_t)> chains = [&](std::int64_t left, std::int64_t top) {
        if (left == 0) return std::int64_t{1};
        std::int64_t c = 0;
        for (std::int64_t b = 0; b <= top; ++b) c += chains(left - 1, b);
        return c;
      };
      if (Integer(chains(n, delta)) != binomial(n + delta, n))
        o.fail("chain count differs for n=" + std::to_string(n) + " delta=" + std::to_string(delta));
    }
  const double s = seconds_since(t0);
  if (s >= 60) o.fail("runtime " + std::to_string(s) + " s");
  if (o.pass) o.detail = "200 random staircases and all chain counts agree in " + std::to_string(s) + " s";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const std::vector<std::tuple<int, int, int>> values{{1, 1, 3}, {1, 2, 8}, {2, 2, 32}, {3, 2, 512}};
  for (auto [n, d, D] : values)
    if (degree_bound(n, d) != D) o.fail("D(" + std::to_string(n) + "," + std::to_string(d) + ")");
  const auto b = hs_count_bounds(1, 1);
  if (b.hp_count != 4 || !b.hf_count || *b.hf_count != 64) o.fail("hs_count_bounds(1,1)");
  std::size_t bases = 0;
  for (const auto& f : fixtures::all()) {
    std::int64_t d = 0;
    for (const auto& p : fixtures::inputs(f)) d = std::max(d, p.total_degree());
    const Integer D = degree_bound(static_cast<std::int64_t>(f.n), d);
    for (const auto& s : run_of(f).R.stratification.strata) {
      ++bases;
      for (const auto& g : s.basis)
        if (g.x_degree() > D) o.fail(f.name + ": basis element of degree " + std::to_string(g.x_degree()));
    }
  }
  if (o.pass) o.detail = "formula values exact; " + std::to_string(bases) + " strata bases within D(n,d)";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t compared = 0;
  for (const auto& name : {"cusp", "quartic_x1x1x2", "quartic_x1x2"}) {
    const auto& f = fixture(name);
    const auto G = fixtures::shifted(f);
    std::vector<ParamIdeal> Qs;
    for (const auto& s : run_of(f).R.stratification.strata) Qs.push_back(s.Q);
    for (const auto& s : stratify(G, fixtures::yring(f.n)).strata) Qs.push_back(s.Q);
    for (const auto& Q : Qs) {
      ++compared;
      const auto a = psb_mod(G, Q), b = psb_mod_prime(G, Q);
      if (Staircase(f.n, a.exps) != Staircase(f.n, b.exps))
        o.fail(std::string(name) + " at Q=<" + Q.key() + ">: " + Staircase(f.n, a.exps).to_string() + " vs " +
               Staircase(f.n, b.exps).to_string());
    }
    const auto sa = stratify(G, fixtures::yring(f.n), {Engine::mora});
    const auto sb = stratify(G, fixtures::yring(f.n), {Engine::modified});
    auto stairs = [](const StratificationResult& R) {
      std::vector<Staircase> v;
      for (const auto& s : R.strata) v.push_back(s.staircase);
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    };
    if (stairs(sa) != stairs(sb)) o.fail(std::string(name) + ": engines produce different staircase sets");
  }
  if (o.pass) o.detail = std::to_string(compared) + " parameter ideals give identical staircases under both engines";
  return o;
}

oracle::Poly to_oracle(const Polynomial& p) {
  oracle::Poly q;
  for (const auto& t : p.terms()) q[oracle::Mono(t.exp.begin(), t.exp.end())] = t.coeff;
  return q;
}

Outcome criterion10() {
  Outcome o;
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const auto xr = make_ring("x", n, MonomialOrder::deglex(n));
    const auto yr = make_ring("y", 0);
    std::vector<Polynomial> F;
    const std::size_t count = 1 + rng() % 3;
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<Term> ts;
      const std::size_t terms = 1 + rng() % 4;
      for (std::size_t t = 0; t < terms; ++t) {
        std::vector<std::int32_t> e(n, 0);
        const int deg = static_cast<int>(rng() % 4);
        for (int d = 0; d < deg; ++d) ++e[rng() % n];
        ts.push_back({ExponentVector(std::move(e)), Rational(static_cast<long>(rng() % 7) - 3)});
      }
      F.push_back(Polynomial::from_terms(xr, std::move(ts)));
    }
    std::vector<ParamPolynomial> G;
    for (const auto& f : F) G.push_back(ParamPolynomial::from_x(f, yr));
    const auto sm = standard_mod(G, ParamIdeal::zero(yr));
    std::vector<Polynomial> B;
    for (const auto& g : sm.basis) B.push_back(g.specialize(std::vector<Rational>{}));
    const auto reduced = groebner_basis(B);

    std::vector<oracle::Poly> OF, OB, OR;
    for (const auto& f : F) OF.push_back(to_oracle(f));
    for (const auto& b : B) OB.push_back(to_oracle(b));
    for (const auto& b : reduced) OR.push_back(to_oracle(b));
    const auto gb = oracle::groebner(OF);
    for (const auto& b : OR)
      if (!oracle::member(b, gb)) o.fail("trial " + std::to_string(trial) + ": basis element outside the ideal");
    for (const auto& g : gb)
      if (!oracle::member(g, OR) || !oracle::member(g, OB))
        o.fail("trial " + std::to_string(trial) + ": ideal element not generated by the basis");
  }
  if (o.pass) o.detail = "50 random ideals agree with the naive Buchberger oracle";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"cusp fixture", [] { return exact_fixture("cusp", 3, 5); }},
      {"x1^4+x2^4+x3*x1^2*x2 fixture", [] { return exact_fixture("quartic_x1x1x2", 4, 30); }},
      {"x1^4+x2^4+x3*x1*x2 fixture", [] { return exact_fixture("quartic_x1x2", 4, 30); }},
      {"two-generator fixture", criterion4},
      {"specialization soundness", criterion5},
      {"oracle equivalence", criterion6},
      {"Hilbert module", criterion7},
      {"bounds", criterion8},
      {"engine cross-validation", criterion9},
      {"classical kernel regression", criterion10},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << "CRITERION " << k + 1 << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[k].first << ": "
              << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
