#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "psb/error.hpp"
#include "psb/exponent.hpp"
#include "psb/order.hpp"
#include "psb/rational.hpp"

namespace psb {

/// Variable names plus the active monomial order of a polynomial ring over Q.
struct PolyRing {
  std::vector<std::string> names;
  MonomialOrder order;

  std::size_t nvars() const noexcept { return names.size(); }
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline std::vector<std::string> indexed_names(const std::string& stem, std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

inline RingPtr make_ring(std::vector<std::string> names, MonomialOrder order) {
  if (order.nvars() != names.size())
    throw DimensionError("order has " + std::to_string(order.nvars()) + " variables, ring has " +
                         std::to_string(names.size()));
  return std::make_shared<const PolyRing>(PolyRing{std::move(names), std::move(order)});
}

/// Ring with variables stem1..stemN; deglex unless an order is given.
inline RingPtr make_ring(const std::string& stem, std::size_t n,
                         std::optional<MonomialOrder> order = std::nullopt) {
  if (!order) order = n == 0 ? MonomialOrder::empty() : MonomialOrder::deglex(n);
  return make_ring(indexed_names(stem, n), std::move(*order));
}

struct Term {
  ExponentVector exp;
  Rational coeff;
};

/// exp(f), lc(f); lt(f) = x^exp and lm(f) = lc(f) * lt(f).
struct LeadData {
  ExponentVector exp;
  Rational coeff;
};

/// Sparse polynomial over Q. Terms are kept sorted strictly descending under
/// the ring's order with no zero coefficients, so the leading term is front().
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({ExponentVector(p.nvars()), c});
    if (c != 0) p.terms_.back().coeff.canonicalize();
    return p;
  }
  static Polynomial monomial(RingPtr ring, ExponentVector e, const Rational& c = 1) {
    Polynomial p(std::move(ring));
    if (e.size() != p.nvars()) throw DimensionError("monomial exponent length mismatch");
    if (c != 0) p.terms_.push_back({std::move(e), c});
    if (c != 0) p.terms_.back().coeff.canonicalize();
    return p;
  }
  static Polynomial variable(RingPtr ring, std::size_t i) {
    const std::size_t n = ring->nvars();
    return monomial(std::move(ring), ExponentVector::unit(n, i));
  }
  /// Sorts and combines arbitrary terms.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    for (const auto& t : terms)
      if (t.exp.size() != p.nvars()) throw DimensionError("term exponent length mismatch");
    p.terms_ = std::move(terms);
    // callers may hand in unreduced fractions; arithmetic results are already canonical
    for (auto& t : p.terms_) t.coeff.canonicalize();
    p.normalize();
    return p;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return ring_->order; }
  std::size_t nvars() const noexcept { return ring_->nvars(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
  }
  /// The constant term (coefficient of x^0).
  Rational constant_term() const {
    for (const auto& t : terms_)
      if (t.exp.is_zero()) return t.coeff;
    return 0;
  }

  LeadData lead() const {
    if (terms_.empty()) throw UndefinedLeadError("leading data of the zero polynomial");
    return {terms_.front().exp, terms_.front().coeff};
  }
  const ExponentVector& lead_exp() const {
    if (terms_.empty()) throw UndefinedLeadError("leading exponent of the zero polynomial");
    return terms_.front().exp;
  }
  const Rational& lead_coeff() const {
    if (terms_.empty()) throw UndefinedLeadError("leading coefficient of the zero polynomial");
    return terms_.front().coeff;
  }

  /// Total degree; -1 for the zero polynomial.
  std::int64_t total_degree() const noexcept {
    std::int64_t d = -1;
    for (const auto& t : terms_) d = std::max(d, t.exp.degree());
    return d;
  }
  std::int64_t degree_in(std::size_t var) const noexcept {
    std::int64_t d = -1;
    for (const auto& t : terms_) d = std::max<std::int64_t>(d, t.exp[var]);
    return d;
  }
  /// deg(f) - deg(lt(f)).
  std::int64_t ecart() const { return total_degree() - lead_exp().degree(); }
  bool is_homogeneous() const noexcept {
    for (const auto& t : terms_)
      if (t.exp.degree() != terms_.front().exp.degree()) return false;
    return true;
  }

  /// Same polynomial re-sorted under another ring with the same variable count.
  Polynomial with_ring(RingPtr ring) const {
    if (ring->nvars() != nvars()) throw DimensionError("ring change must keep the variable count");
    Polynomial p(std::move(ring));
    p.terms_ = terms_;
    p.sort_terms();
    return p;
  }

  Polynomial operator-() const {
    Polynomial p(*this);
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = combine(*this, o, 1); }
  Polynomial& operator-=(const Polynomial& o) { return *this = combine(*this, o, -1); }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, 1); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, -1); }

  friend Polynomial operator*(const Polynomial& p, const Rational& c) {
    if (c == 0) return Polynomial(p.ring_);
    Polynomial r(p);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

  /// p * c * x^e. Order compatibility keeps the terms sorted.
  Polynomial mul_term(const ExponentVector& e, const Rational& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.exp + e, t.coeff * c});
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    if (b.size() == 1) return a.mul_term(b.terms_[0].exp, b.terms_[0].coeff);
    if (a.size() == 1) return b.mul_term(a.terms_[0].exp, a.terms_[0].coeff);
    std::vector<Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.exp + t.exp, s.coeff * t.coeff});
    Polynomial r(a.ring_);
    r.terms_ = std::move(prod);
    r.normalize();
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(ring_, 1);
    Polynomial base(*this);
    while (k) {
      if (k & 1u) r *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return r;
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars()) throw DimensionError("evaluation point has wrong dimension");
    Rational acc = 0;
    for (const auto& t : terms_) {
      Rational v = t.coeff;
      for (std::size_t i = 0; i < nvars(); ++i)
        for (std::int32_t k = 0; k < t.exp[i]; ++k) v *= point[i];
      acc += v;
    }
    return acc;
  }

  Polynomial derivative(std::size_t var) const {
    std::vector<Term> ts;
    for (const auto& t : terms_) {
      if (t.exp[var] == 0) continue;
      ExponentVector e = t.exp;
      e[var] -= 1;
      ts.push_back({std::move(e), t.coeff * t.exp[var]});
    }
    return from_terms(ring_, std::move(ts));
  }

  /// Positive rational c with p/c integral and content-free; 0 for p = 0.
  Rational content() const {
    if (terms_.empty()) return 0;
    Integer num = 0, den = 1;
    for (const auto& t : terms_) {
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    return make_rational(num, den);
  }

  /// Integral, content-free, positive leading coefficient.
  Polynomial primitive() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    if (terms_.front().coeff < 0) c = -c;
    return *this * Rational(1 / c);
  }

  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return *this * Rational(1 / terms_.front().coeff);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars() || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
  }

  void check_ring(const Polynomial& o) const {
    if (ring_ != o.ring_ && (nvars() != o.nvars() || !(order() == o.order())))
      throw DimensionError("polynomials from different rings");
  }

 private:
  static Polynomial combine(const Polynomial& a, const Polynomial& b, int sign) {
    a.check_ring(b);
    const auto& ord = a.order();
    Polynomial r(a.ring_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        r.terms_.push_back(a.terms_[i++]);
        continue;
      }
      if (i == a.size()) {
        r.terms_.push_back({b.terms_[j].exp, sign * b.terms_[j].coeff});
        ++j;
        continue;
      }
      auto c = ord.compare(a.terms_[i].exp, b.terms_[j].exp);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back({b.terms_[j].exp, sign * b.terms_[j].coeff});
        ++j;
      } else {
        Rational s = sign > 0 ? Rational(a.terms_[i].coeff + b.terms_[j].coeff)
                              : Rational(a.terms_[i].coeff - b.terms_[j].coeff);
        if (s != 0) r.terms_.push_back({a.terms_[i].exp, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void sort_terms() {
    const auto& ord = order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& s, const Term& t) { return ord.compare(s.exp, t.exp) > 0; });
  }

  void normalize() {
    sort_terms();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().exp == t.exp) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    terms_ = std::move(out);
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

struct PolynomialHash {
  std::size_t operator()(const Polynomial& p) const noexcept {
    std::size_t h = p.size();
    for (const auto& t : p.terms()) {
      h = h * 1000003u ^ ExponentHash{}(t.exp);
      h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_si(t.coeff.get_num_mpz_t()));
      h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_ui(t.coeff.get_den_mpz_t()));
    }
    return h;
  }
};

/// Total order on polynomials of one ring for canonical sorting: term by term,
/// exponents under the ring order, then coefficients; a proper prefix sorts first.
inline bool canonical_less(const Polynomial& a, const Polynomial& b) {
  const auto& ord = a.order();
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = a.terms()[i];
    const auto& t = b.terms()[i];
    if (auto c = ord.compare(s.exp, t.exp); c != 0) return c < 0;
    if (s.coeff != t.coeff) return s.coeff < t.coeff;
  }
  return a.size() < b.size();
}

inline LeadData leading_data(const Polynomial& f) { return f.lead(); }

/// lc(g) x^(gamma-alpha) f - lc(f) x^(gamma-beta) g with gamma = lcm of the leading exponents.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto lf = f.lead();
  const auto lg = g.lead();
  const ExponentVector gamma = lcm(lf.exp, lg.exp);
  return f.mul_term(gamma - lf.exp, lg.coeff) - g.mul_term(gamma - lg.exp, lf.coeff);
}

/// Ring with an extra last variable `z`, ordered by the homogenizing order of `base`.
inline RingPtr homogenized_ring(const RingPtr& base, const std::string& z = "z") {
  auto names = base->names;
  names.push_back(z);
  return make_ring(std::move(names), MonomialOrder::homogenizing(base->order));
}

/// sum c_a x^a z^(d-|a|), homogeneous of degree d = target_degree or deg(f).
inline Polynomial homogenize(const Polynomial& f, const RingPtr& hring,
                             std::optional<std::int64_t> target_degree = std::nullopt) {
  if (f.is_zero()) throw UndefinedLeadError("cannot homogenize the zero polynomial");
  if (hring->nvars() != f.nvars() + 1) throw DimensionError("homogenized ring needs one more variable");
  const std::int64_t deg = f.total_degree();
  const std::int64_t d = target_degree.value_or(deg);
  if (d < deg) throw DegreeError("target degree below the polynomial degree");
  std::vector<Term> ts;
  for (const auto& t : f.terms()) {
    std::vector<ExponentVector::value_type> e(t.exp.begin(), t.exp.end());
    e.push_back(static_cast<ExponentVector::value_type>(d - t.exp.degree()));
    ts.push_back({ExponentVector(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(hring, std::move(ts));
}

/// Sets the last variable to 1.
inline Polynomial dehomogenize(const Polynomial& f, const RingPtr& base) {
  if (base->nvars() + 1 != f.nvars()) throw DimensionError("dehomogenized ring needs one fewer variable");
  std::vector<Term> ts;
  for (const auto& t : f.terms()) ts.push_back({t.exp.slice(0, base->nvars()), t.coeff});
  return Polynomial::from_terms(base, std::move(ts));
}

}  // namespace psb
