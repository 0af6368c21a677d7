#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <vector>

#include "psb/polynomial.hpp"

namespace psb {

struct ParamTerm {
  ExponentVector exp;
  Polynomial coeff;
};

/// A polynomial in main variables x whose coefficients are polynomials over Q
/// in parameters y. Terms are sorted strictly descending under the x-order and
/// no coefficient is the zero polynomial.
class ParamPolynomial {
 public:
  ParamPolynomial(RingPtr xring, RingPtr yring) : xring_(std::move(xring)), yring_(std::move(yring)) {}

  static ParamPolynomial from_terms(RingPtr xring, RingPtr yring, std::vector<ParamTerm> terms) {
    ParamPolynomial p(std::move(xring), std::move(yring));
    for (const auto& t : terms) {
      if (t.exp.size() != p.xring_->nvars()) throw DimensionError("x-exponent length mismatch");
      if (t.coeff.nvars() != p.yring_->nvars()) throw DimensionError("coefficient ring mismatch");
    }
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }
  /// c * x^e.
  static ParamPolynomial monomial(RingPtr xring, RingPtr yring, ExponentVector e, Polynomial c) {
    std::vector<ParamTerm> ts;
    ts.push_back({std::move(e), std::move(c)});
    return from_terms(std::move(xring), std::move(yring), std::move(ts));
  }
  /// The coefficient c placed at x^0.
  static ParamPolynomial constant(RingPtr xring, RingPtr yring, Polynomial c) {
    ExponentVector zero(xring->nvars());
    return monomial(std::move(xring), std::move(yring), std::move(zero), std::move(c));
  }
  /// Embeds a polynomial over Q in x with constant coefficients.
  static ParamPolynomial from_x(const Polynomial& f, RingPtr yring) {
    std::vector<ParamTerm> ts;
    for (const auto& t : f.terms()) ts.push_back({t.exp, Polynomial::constant(yring, t.coeff)});
    return from_terms(f.ring(), std::move(yring), std::move(ts));
  }
  /// Splits a polynomial over the joint ring (x variables first, then y).
  static ParamPolynomial from_joint(const Polynomial& f, RingPtr xring, RingPtr yring) {
    const std::size_t n = xring->nvars(), m = yring->nvars();
    if (f.nvars() != n + m) throw DimensionError("joint polynomial has the wrong variable count");
    std::map<ExponentVector, std::vector<Term>> buckets;
    for (const auto& t : f.terms()) buckets[t.exp.slice(0, n)].push_back({t.exp.slice(n, m), t.coeff});
    std::vector<ParamTerm> ts;
    for (auto& [e, cs] : buckets) ts.push_back({e, Polynomial::from_terms(yring, std::move(cs))});
    return from_terms(std::move(xring), std::move(yring), std::move(ts));
  }
  Polynomial to_joint(const RingPtr& joint) const {
    if (joint->nvars() != xring_->nvars() + yring_->nvars())
      throw DimensionError("joint ring has the wrong variable count");
    std::vector<Term> ts;
    for (const auto& t : terms_)
      for (const auto& c : t.coeff.terms()) ts.push_back({concat(t.exp, c.exp), c.coeff});
    return Polynomial::from_terms(joint, std::move(ts));
  }

  const RingPtr& xring() const noexcept { return xring_; }
  const RingPtr& yring() const noexcept { return yring_; }
  const MonomialOrder& order() const noexcept { return xring_->order; }
  const std::vector<ParamTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  const ExponentVector& lead_exp() const {
    if (terms_.empty()) throw UndefinedLeadError("leading exponent of the zero polynomial");
    return terms_.front().exp;
  }
  const Polynomial& lead_coeff() const {
    if (terms_.empty()) throw UndefinedLeadError("leading coefficient of the zero polynomial");
    return terms_.front().coeff;
  }
  /// Max total x-degree; -1 for zero.
  std::int64_t x_degree() const noexcept {
    std::int64_t d = -1;
    for (const auto& t : terms_) d = std::max(d, t.exp.degree());
    return d;
  }
  Polynomial coefficient(const ExponentVector& e) const {
    for (const auto& t : terms_)
      if (t.exp == e) return t.coeff;
    return Polynomial(yring_);
  }

  ParamPolynomial operator-() const {
    ParamPolynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  friend ParamPolynomial operator+(const ParamPolynomial& a, const ParamPolynomial& b) { return combine(a, b, 1); }
  friend ParamPolynomial operator-(const ParamPolynomial& a, const ParamPolynomial& b) { return combine(a, b, -1); }
  ParamPolynomial& operator+=(const ParamPolynomial& o) { return *this = combine(*this, o, 1); }
  ParamPolynomial& operator-=(const ParamPolynomial& o) { return *this = combine(*this, o, -1); }

  /// c * x^e * p.
  ParamPolynomial mul_term(const ExponentVector& e, const Polynomial& c) const {
    ParamPolynomial r(xring_, yring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Polynomial prod = t.coeff * c;
      if (!prod.is_zero()) r.terms_.push_back({t.exp + e, std::move(prod)});
    }
    return r;
  }
  ParamPolynomial scale(const Rational& c) const {
    ParamPolynomial r(xring_, yring_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
  }
  friend ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b) {
    ParamPolynomial r(a.xring_, a.yring_);
    for (const auto& t : b.terms_) r += a.mul_term(t.exp, t.coeff);
    return r;
  }

  /// Positive rational c with every coefficient of p/c integral and the gcd of
  /// all integer coefficients 1.
  Rational content() const {
    if (terms_.empty()) return 0;
    Integer num = 0, den = 1;
    for (const auto& t : terms_)
      for (const auto& c : t.coeff.terms()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.coeff.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.coeff.get_den_mpz_t());
      }
    return make_rational(num, den);
  }
  /// Integral, content-free, and the leading coefficient of the leading
  /// coefficient positive.
  ParamPolynomial primitive() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    if (terms_.front().coeff.lead_coeff() < 0) c = -c;
    return scale(Rational(1 / c));
  }

  /// Substitutes y := point.
  Polynomial specialize(std::span<const Rational> point) const {
    std::vector<Term> ts;
    for (const auto& t : terms_) ts.push_back({t.exp, t.coeff.evaluate(point)});
    return Polynomial::from_terms(xring_, std::move(ts));
  }

  /// Same polynomial re-sorted under another x-ring with equal variable count.
  ParamPolynomial with_xring(RingPtr xring) const {
    ParamPolynomial r(std::move(xring), yring_);
    r.terms_ = terms_;
    r.normalize();
    return r;
  }

  friend bool operator==(const ParamPolynomial& a, const ParamPolynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].exp != b.terms_[i].exp || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return true;
  }

 private:
  static ParamPolynomial combine(const ParamPolynomial& a, const ParamPolynomial& b, int sign) {
    const auto& ord = a.order();
    ParamPolynomial r(a.xring_, a.yring_);
    std::size_t i = 0, j = 0;
    auto take_b = [&](const ParamTerm& t) {
      r.terms_.push_back({t.exp, sign > 0 ? t.coeff : -t.coeff});
    };
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size()) {
        take_b(b.terms_[j++]);
      } else if (auto c = ord.compare(a.terms_[i].exp, b.terms_[j].exp); c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        take_b(b.terms_[j++]);
      } else {
        Polynomial s = sign > 0 ? a.terms_[i].coeff + b.terms_[j].coeff : a.terms_[i].coeff - b.terms_[j].coeff;
        if (!s.is_zero()) r.terms_.push_back({a.terms_[i].exp, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void normalize() {
    const auto& ord = order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const ParamTerm& s, const ParamTerm& t) { return ord.compare(s.exp, t.exp) > 0; });
    std::vector<ParamTerm> out;
    for (auto& t : terms_) {
      if (!out.empty() && out.back().exp == t.exp) out.back().coeff += t.coeff;
      else out.push_back(std::move(t));
    }
    std::erase_if(out, [](const ParamTerm& t) { return t.coeff.is_zero(); });
    terms_ = std::move(out);
  }

  RingPtr xring_, yring_;
  std::vector<ParamTerm> terms_;
};

/// f(x + y) expanded in Q[y][x]; y must have as many variables as x.
inline ParamPolynomial taylor_shift(const Polynomial& f, const RingPtr& yring) {
  const std::size_t n = f.nvars();
  if (yring->nvars() != n) throw DimensionError("taylor shift needs one parameter per variable");
  std::map<ExponentVector, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) {
    // every j <= alpha componentwise: coefficient c * prod C(alpha_i, j_i) x^j y^(alpha-j)
    std::vector<std::int32_t> j(n, 0);
    for (;;) {
      Rational c = t.coeff;
      Integer b;
      for (std::size_t i = 0; i < n; ++i) {
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(t.exp[i]), static_cast<unsigned long>(j[i]));
        c *= b;
      }
      ExponentVector xe(std::vector<std::int32_t>(j.begin(), j.end()));
      buckets[xe].push_back({t.exp - xe, c});
      std::size_t i = 0;
      while (i < n && j[i] == t.exp[i]) j[i++] = 0;
      if (i == n) break;
      ++j[i];
    }
  }
  std::vector<ParamTerm> ts;
  for (auto& [e, cs] : buckets) ts.push_back({e, Polynomial::from_terms(yring, std::move(cs))});
  return ParamPolynomial::from_terms(f.ring(), yring, std::move(ts));
}

}  // namespace psb
