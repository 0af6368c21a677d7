#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "psb/error.hpp"

namespace psb {

/// A point of N^n: the exponent of a monomial.
///
/// Entries are machine-width and every addition is checked; exact algebra
/// must never wrap around silently.
class ExponentVector {
 public:
  using value_type = std::int32_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<value_type> init) : e_(init) { check_nonnegative(); }
  explicit ExponentVector(std::vector<value_type> v) : e_(std::move(v)) { check_nonnegative(); }

  static ExponentVector unit(std::size_t n, std::size_t i, value_type power = 1) {
    ExponentVector r(n);
    r.e_[i] = power;
    return r;
  }

  std::size_t size() const noexcept { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  std::span<const value_type> entries() const noexcept { return e_; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  std::int64_t degree() const noexcept {
    return std::accumulate(e_.begin(), e_.end(), std::int64_t{0});
  }
  bool is_zero() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](value_type v) { return v == 0; });
  }

  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const ExponentVector& other) const {
    check_same_size(other);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  ExponentVector& operator+=(const ExponentVector& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < e_.size(); ++i) {
      value_type r;
      if (__builtin_add_overflow(e_[i], o.e_[i], &r))
        throw OverflowError("exponent overflow");
      e_[i] = r;
    }
    return *this;
  }
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }

  /// this - other; requires other to divide this.
  ExponentVector operator-(const ExponentVector& o) const {
    check_same_size(o);
    ExponentVector r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (o.e_[i] > e_[i]) throw DimensionError("exponent difference would be negative");
      r.e_[i] = e_[i] - o.e_[i];
    }
    return r;
  }

  friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    a.check_same_size(b);
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }

  friend bool coprime(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
  }

  /// Concatenation (x-part, y-part).
  friend ExponentVector concat(const ExponentVector& a, const ExponentVector& b) {
    std::vector<value_type> v(a.e_);
    v.insert(v.end(), b.e_.begin(), b.e_.end());
    return ExponentVector(std::move(v));
  }
  ExponentVector slice(std::size_t from, std::size_t count) const {
    return ExponentVector(std::vector<value_type>(e_.begin() + from, e_.begin() + from + count));
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  /// Plain lexicographic comparison of the entries; used for canonical sorting only.
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) { return a.e_ <=> b.e_; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(e_[i]);
    }
    return s + ")";
  }

 private:
  void check_same_size(const ExponentVector& o) const {
    if (o.e_.size() != e_.size()) throw DimensionError("exponent vectors of different length");
  }
  void check_nonnegative() const {
    for (auto v : e_)
      if (v < 0) throw DimensionError("negative exponent");
  }

  std::vector<value_type> e_;
};

struct ExponentHash {
  std::size_t operator()(const ExponentVector& e) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : e) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace psb
