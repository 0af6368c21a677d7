#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "psb/error.hpp"
#include "psb/exponent.hpp"
#include "psb/rational.hpp"

namespace psb {

enum class OrderClass { global, local, mixed };

/// A monomial order given by a full-rank integer weight matrix.
///
/// Two exponents are compared by evaluating the rows top-down; the first row
/// with differing weighted sums decides. Every order used here (deglex,
/// valuation-compatible, block, homogenizing) is built as such a matrix, so
/// one comparison kernel serves global, local and mixed orders alike.
class MonomialOrder {
 public:
  using Row = std::vector<std::int64_t>;

  MonomialOrder() = default;

  /// Validates the shape and rank of `rows`.
  explicit MonomialOrder(std::vector<Row> rows, std::string name = "matrix")
      : rows_(std::move(rows)), name_(std::move(name)) {
    if (rows_.empty()) throw DimensionError("monomial order needs at least one row");
    nvars_ = rows_.front().size();
    for (const auto& r : rows_)
      if (r.size() != nvars_) throw DimensionError("order rows of unequal length");
    if (rank() != nvars_) throw DimensionError("order matrix is not of full rank");
    classify();
  }

  /// Degree first, ties broken lexicographically with x1 > x2 > ... > xn.
  static MonomialOrder deglex(std::size_t n) {
    check_n(n);
    std::vector<Row> rows{Row(n, 1)};
    for (std::size_t i = 0; i + 1 < n; ++i) rows.push_back(unit_row(n, i, 1));
    return MonomialOrder(std::move(rows), "deglex");
  }

  static MonomialOrder lex(std::size_t n) {
    check_n(n);
    std::vector<Row> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(unit_row(n, i, 1));
    return MonomialOrder(std::move(rows), "lex");
  }

  /// Degree first, ties broken by smaller exponent of the last variable.
  static MonomialOrder degrevlex(std::size_t n) {
    check_n(n);
    std::vector<Row> rows{Row(n, 1)};
    for (std::size_t i = n; i-- > 1;) rows.push_back(unit_row(n, i, -1));
    return MonomialOrder(std::move(rows), "degrevlex");
  }

  /// Local order refining the total degree downward: |a| > |b| implies x^a < x^b.
  ///
  /// Ties are broken reverse-lexicographically so that the monomial with the
  /// smaller exponent in x1, then x2, ... is the larger one (x2 > x1 on
  /// degree-one ties). This calibration reproduces the leading exponents of
  /// the published worked examples.
  static MonomialOrder valuation_compatible(std::size_t n) {
    check_n(n);
    std::vector<Row> rows{Row(n, -1)};
    for (std::size_t i = 0; i + 1 < n; ++i) rows.push_back(unit_row(n, i, -1));
    return MonomialOrder(std::move(rows), "valuation");
  }

  /// Block order: compare with `outer` on the first variables, then `inner` on the rest.
  static MonomialOrder block(const MonomialOrder& outer, const MonomialOrder& inner) {
    if (inner.nvars_ == 0) return outer;
    if (outer.nvars_ == 0) return inner;
    const std::size_t n = outer.nvars_ + inner.nvars_;
    std::vector<Row> rows;
    for (const auto& r : outer.rows_) {
      Row row(r);
      row.resize(n, 0);
      rows.push_back(std::move(row));
    }
    for (const auto& r : inner.rows_) {
      Row row(outer.nvars_, 0);
      row.insert(row.end(), r.begin(), r.end());
      rows.push_back(std::move(row));
    }
    return MonomialOrder(std::move(rows), "block(" + outer.name_ + "," + inner.name_ + ")");
  }

  /// The order on x^a z^k comparing |a|+k first and `base` on a on ties.
  /// The homogenizing variable z is appended last.
  static MonomialOrder homogenizing(const MonomialOrder& base) {
    const std::size_t n = base.nvars_ + 1;
    std::vector<Row> rows{Row(n, 1)};
    for (const auto& r : base.rows_) {
      Row row(r);
      row.push_back(0);
      rows.push_back(std::move(row));
    }
    return MonomialOrder(std::move(rows), "homogenizing(" + base.name_ + ")");
  }

  /// The order on the zero-variable monoid {1}; used for constant coefficient rings.
  static MonomialOrder empty() {
    MonomialOrder o;
    o.name_ = "empty";
    return o;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  OrderClass classification() const noexcept { return class_; }
  bool is_global() const noexcept { return class_ == OrderClass::global; }
  bool is_local() const noexcept { return class_ == OrderClass::local; }
  const std::string& name() const noexcept { return name_; }

  std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const {
    if (a.size() != nvars_ || b.size() != nvars_)
      throw DimensionError("exponent length does not match order");
    for (const auto& row : rows_) {
      std::int64_t d = 0;
      for (std::size_t i = 0; i < nvars_; ++i) d += row[i] * (std::int64_t{a[i]} - b[i]);
      if (d != 0) return d < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  bool less(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) { return a.rows_ == b.rows_; }

 private:
  static void check_n(std::size_t n) {
    if (n == 0) throw DimensionError("order needs at least one variable");
  }
  static Row unit_row(std::size_t n, std::size_t i, std::int64_t v) {
    Row r(n, 0);
    r[i] = v;
    return r;
  }

  std::size_t rank() const {
    std::vector<std::vector<Rational>> m;
    for (const auto& r : rows_) {
      std::vector<Rational> row;
      for (auto v : r) row.emplace_back(static_cast<long>(v));
      m.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < nvars_ && rank < m.size(); ++c) {
      std::size_t p = rank;
      while (p < m.size() && m[p][c] == 0) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[rank]);
      for (std::size_t r = 0; r < m.size(); ++r) {
        if (r == rank || m[r][c] == 0) continue;
        Rational f = m[r][c] / m[rank][c];
        for (std::size_t k = c; k < nvars_; ++k) m[r][k] -= f * m[rank][k];
      }
      ++rank;
    }
    return rank;
  }

  // global iff the first nonzero entry of every column is positive; local iff negative.
  void classify() {
    bool all_pos = true, all_neg = true;
    for (std::size_t c = 0; c < nvars_; ++c) {
      for (const auto& r : rows_) {
        if (r[c] == 0) continue;
        if (r[c] > 0) all_neg = false;
        else all_pos = false;
        break;
      }
    }
    class_ = all_pos ? OrderClass::global : all_neg ? OrderClass::local : OrderClass::mixed;
  }

  std::vector<Row> rows_;
  std::size_t nvars_ = 0;
  OrderClass class_ = OrderClass::global;
  std::string name_;
};

}  // namespace psb
