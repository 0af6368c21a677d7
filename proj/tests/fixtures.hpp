#pragma once

// Shared test data: the worked examples, golden-file reading, and the
// point-wise checks used by both the unit tests and the acceptance runner.

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "psb/psb.hpp"

namespace fixtures {

using namespace psb;

struct Fixture {
  std::string name;
  std::size_t n;
  std::string polys;
  std::string golden;  // file under PSB_GOLDEN_DIR
};

inline const std::vector<Fixture>& all() {
  static const std::vector<Fixture> f{
      {"cusp", 2, "x1^2+x2^3", "cusp.txt"},
      {"quartic_x1x1x2", 3, "x1^4+x2^4+x3*x1^2*x2", "quartic_x1x1x2.txt"},
      {"quartic_x1x2", 3, "x1^4+x2^4+x3*x1*x2", "quartic_x1x2.txt"},
      {"line_and_cusp", 3, "x1-x2, x1*(x2^2+x3^3)", "line_and_cusp.txt"},
  };
  return f;
}

inline RingPtr xring(std::size_t n) { return make_ring("x", n, MonomialOrder::valuation_compatible(n)); }
inline RingPtr yring(std::size_t n) { return make_ring("y", n); }

inline std::vector<Polynomial> inputs(const Fixture& f) { return parse_polynomial_list(f.polys, xring(f.n)); }

inline std::vector<ParamPolynomial> shifted(const Fixture& f) {
  std::vector<ParamPolynomial> G;
  for (const auto& p : inputs(f)) G.push_back(taylor_shift(p, yring(f.n)));
  return G;
}

/// The factor set of a list of coefficients, split the way the stratifier does.
inline std::vector<Polynomial> factor_set(const std::vector<Polynomial>& cs) {
  std::vector<Polynomial> out;
  for (const auto& c : cs)
    for (auto& f : coefficient_factors(c)) out.push_back(std::move(f));
  sort_unique_canonical(out);
  return out;
}

struct GoldenStratum {
  Staircase staircase;
  std::vector<Polynomial> Q;  // in the y ring
  std::vector<Polynomial> H;  // raw entries, 1's dropped
  RingPtr ring;
  std::string text;
};

namespace detail {

// Splits "a,b,[c,d]" at top-level commas, treating [], (), << >> as brackets.
inline std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '[' || c == '(' || (c == '<' && i + 1 < s.size() && s[i + 1] == '<')) ++depth;
    if (c == ']' || c == ')' || (c == '>' && i + 1 < s.size() && s[i + 1] == '>')) --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::string strip_brackets(std::string s) {
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') return s.substr(1, s.size() - 2);
  throw std::runtime_error("expected a bracketed list: " + s);
}

}  // namespace detail

/// Parses a printed strata block, dropping line numbers and whitespace.
inline std::vector<GoldenStratum> parse_golden(const std::string& block, std::size_t n) {
  std::string text = std::regex_replace(block, std::regex(R"(\(\d+\)\s)"), "");
  std::erase_if(text, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  while (!text.empty() && text.back() == '.') text.pop_back();

  const auto xr = make_ring("x", n);  // reference output prints parameters with x names
  const auto yr = yring(n);
  std::vector<GoldenStratum> out;
  for (const auto& line : detail::split_top(detail::strip_brackets(text))) {
    const auto parts = detail::split_top(detail::strip_brackets(line));
    if (parts.size() != 3) throw std::runtime_error("malformed golden line " + line);
    GoldenStratum g;
    g.text = line;
    g.ring = yr;
    std::vector<ExponentVector> exps;
    const std::regex mono(R"(<<([0-9,]+)>>)");
    for (auto it = std::sregex_iterator(parts[0].begin(), parts[0].end(), mono); it != std::sregex_iterator(); ++it) {
      std::vector<std::int32_t> e;
      std::stringstream es((*it)[1].str());
      for (std::string tok; std::getline(es, tok, ',');) e.push_back(std::stoi(tok));
      exps.emplace_back(std::move(e));
    }
    g.staircase = Staircase(n, std::move(exps));
    for (auto& p : parse_polynomial_list(detail::strip_brackets(parts[1]), xr))
      if (!p.is_zero()) g.Q.push_back(p.with_ring(yr));
    for (auto& p : parse_polynomial_list(detail::strip_brackets(parts[2]), xr))
      if (!(p.is_constant())) g.H.push_back(p.with_ring(yr));
    out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<GoldenStratum> read_golden(const std::string& file, std::size_t n) {
  std::ifstream in(std::string(PSB_GOLDEN_DIR) + "/" + file);
  if (!in) throw std::runtime_error("missing golden file " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_golden(ss.str(), n);
}

/// Distinct golden strata (after antichain minimization).
inline std::vector<GoldenStratum> dedup(std::vector<GoldenStratum> v) {
  std::vector<GoldenStratum> out;
  for (auto& g : v) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const GoldenStratum& o) {
      return o.staircase == g.staircase && ParamIdeal(o.ring, o.Q) == ParamIdeal(g.ring, g.Q) &&
             factor_set(o.H) == factor_set(g.H);
    });
    if (!seen) out.push_back(std::move(g));
  }
  return out;
}

inline bool matches(const GoldenStratum& g, const Stratum& s) {
  return g.staircase == s.staircase && ParamIdeal(s.Q.ring(), g.Q) == s.Q && factor_set(g.H) == s.h_factors;
}

/// Specialization check at one parameter point: the specialized basis has the
/// stratum's leading exponents, passes Buchberger's criterion with Mora
/// normal forms, and contains the specialized generators in its ideal.
inline std::string check_specialization(const Stratum& s, const std::vector<ParamPolynomial>& G,
                                        std::span<const Rational> point) {
  std::vector<Polynomial> B;
  for (std::size_t k = 0; k < s.basis.size(); ++k) {
    auto b = s.basis[k].specialize(point);
    if (b.is_zero() || b.lead_exp() != s.exps[k]) return "leading exponent differs from exp^modQ for element " + std::to_string(k);
    B.push_back(b);
  }
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i + 1; j < B.size(); ++j)
      if (!reduces_to_zero(s_polynomial(B[i], B[j]), B)) return "S-polynomial does not reduce to zero";
  for (const auto& g : G)
    if (!reduces_to_zero(g.specialize(point), B)) return "specialized generator not in the basis ideal";
  return "";
}

inline std::string point_string(std::span<const Rational> p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].get_str();
  return s + ")";
}

}  // namespace fixtures
