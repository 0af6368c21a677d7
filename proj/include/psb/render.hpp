#pragma once

#include <string>
#include <vector>

#include "psb/hs_strat.hpp"
#include "psb/parse.hpp"

namespace psb {

/// The same polynomial printed with other variable names (order unchanged).
inline std::string to_string_as(const Polynomial& p, const std::vector<std::string>& names) {
  return to_string(p.with_ring(make_ring(names, p.ring()->order)));
}

/// x-part then y-part in one polynomial, e.g. "y1*x1^2+x2".
inline std::string to_string(const ParamPolynomial& f) {
  const auto J = detail::joint_ring(f.xring(), f.yring());
  return to_string(f.to_joint(J));
}

namespace detail {

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

inline std::string bracket_exps(const std::vector<ExponentVector>& exps) {
  std::vector<std::string> parts;
  for (const auto& e : exps) {
    std::string s = "(1)*<<";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    parts.push_back(s + ">>");
  }
  return "[" + join(parts) + "]";
}

}  // namespace detail

/// One stratum as "[[(1)*<<e>>,...],[Q generators or 0],[h factors or 1]]".
/// `names` renames the parameters (reference output prints them with the x names).
inline std::string stratum_line(const Stratum& s, const std::vector<std::string>& names) {
  std::vector<std::string> q, h;
  for (const auto& g : s.Q.groebner()) q.push_back(to_string_as(g, names));
  for (const auto& f : s.h_factors) h.push_back(to_string_as(f, names));
  if (q.empty()) q.push_back("0");
  if (h.empty()) h.push_back("1");
  return "[" + detail::bracket_exps(s.staircase.generators()) + ",[" + detail::join(q) + "],[" + detail::join(h) + "]]";
}

inline std::string strata_text(const std::vector<Stratum>& strata, const std::vector<std::string>& names) {
  std::string out = "[";
  for (std::size_t i = 0; i < strata.size(); ++i)
    out += (i ? ",\n" : "") + stratum_line(strata[i], names);
  return out + "]\n";
}

/// Printed block for a whole HS stratification: every region of every
/// merged stratum, with parameters named like the input variables.
inline std::string strata_text(const HSStratification& R) {
  std::vector<Stratum> all;
  for (const auto& h : R.strata) all.insert(all.end(), h.regions.begin(), h.regions.end());
  return strata_text(all, R.xring->names);
}

inline std::string to_string(const NumericalPolynomial& P, const std::string& var = "r") {
  std::string s;
  for (std::size_t k = P.coeffs.size(); k-- > 0;) {
    Rational c = P.coeffs[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    s += neg ? "-" : (s.empty() ? "" : "+");
    if (k == 0) s += c.get_str();
    else {
      if (c != 1) s += c.get_str() + "*";
      s += var + (k > 1 ? "^" + std::to_string(k) : "");
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace psb
