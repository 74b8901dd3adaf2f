#pragma once

// Power series in X, Y, Z truncated at a total-degree bound.
//
// Coefficients live in any commutative Q-algebra `C` providing +, -, *,
// multiplication by a Rational, equality and a free `is_zero(const C&)`.
// `TruncatedSeries` is the Rational instance used throughout.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "finitehyper/errors.hpp"
#include "finitehyper/exact.hpp"

namespace finitehyper {

struct Monomial {
  int x = 0;
  int y = 0;
  int z = 0;

  int degree() const { return x + y + z; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Total degree ascending, then lexicographic with X > Y > Z.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.x != b.x) return a.x > b.x;
    if (a.y != b.y) return a.y > b.y;
    return a.z > b.z;
  }
};

namespace detail {
template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}
}  // namespace detail

template <class C>
class BasicSeries {
 public:
  using Coeff = C;
  using Terms = std::map<Monomial, C, GradedLex>;

  explicit BasicSeries(int bound) : bound_(bound) {
    if (bound < 0) throw ConfigError("negative degree bound");
  }

  static BasicSeries constant(const C& c, int bound) {
    BasicSeries s(bound);
    s.add_term({}, c);
    return s;
  }
  static BasicSeries monomial(Monomial m, const C& c, int bound) {
    BasicSeries s(bound);
    s.add_term(m, c);
    return s;
  }
  static BasicSeries one(int bound) { return constant(C(Rational(1)), bound); }
  static BasicSeries X(int bound) { return monomial({1, 0, 0}, C(Rational(1)), bound); }
  static BasicSeries Y(int bound) { return monomial({0, 1, 0}, C(Rational(1)), bound); }
  static BasicSeries Z(int bound) { return monomial({0, 0, 1}, C(Rational(1)), bound); }

  int bound() const { return bound_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * m; terms above the bound are dropped, zero results erased.
  void add_term(const Monomial& m, const C& c) {
    if (m.degree() > bound_ || is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  C coefficient(const Monomial& m) const {
    if (m.x < 0 || m.y < 0 || m.z < 0 || m.degree() > bound_) {
      throw DegreeOutOfBound("monomial degree " + std::to_string(m.degree()) +
                             " exceeds bound " + std::to_string(bound_));
    }
    auto it = terms_.find(m);
    return it == terms_.end() ? C() : it->second;
  }

  C constant_term() const { return coefficient({}); }

  /// Drops terms above a smaller bound.
  BasicSeries truncated(int bound) const {
    if (bound > bound_) {
      throw BoundMismatch("cannot raise bound " + std::to_string(bound_) +
                          " to " + std::to_string(bound));
    }
    BasicSeries r(bound);
    for (const auto& [m, c] : terms_) {
      if (m.degree() > bound) break;
      r.terms_.emplace(m, c);
    }
    return r;
  }

  BasicSeries swapped_xy() const {
    BasicSeries r(bound_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.y, m.x, m.z}, c);
    return r;
  }

  BasicSeries& operator+=(const BasicSeries& o) {
    require_same_bound(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasicSeries& operator-=(const BasicSeries& o) {
    require_same_bound(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  BasicSeries operator-() const {
    BasicSeries r(bound_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend BasicSeries operator+(BasicSeries a, const BasicSeries& b) { return a += b; }
  friend BasicSeries operator-(BasicSeries a, const BasicSeries& b) { return a -= b; }

  friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) {
    a.require_same_bound(b);
    BasicSeries r(a.bound_);
    for (const auto& [ma, ca] : a.terms_) {
      const int room = a.bound_ - ma.degree();
      if (room < 0) break;
      for (const auto& [mb, cb] : b.terms_) {
        if (mb.degree() > room) break;
        r.add_term({ma.x + mb.x, ma.y + mb.y, ma.z + mb.z}, ca * cb);
      }
    }
    return r;
  }

  BasicSeries scaled(const Rational& k) const {
    BasicSeries r(bound_);
    if (k.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * k);
    return r;
  }

  /// Equality is only defined at a common bound.
  friend bool operator==(const BasicSeries& a, const BasicSeries& b) {
    a.require_same_bound(b);
    return a.terms_ == b.terms_;
  }

 private:
  static bool is_zero_coeff(const C& c) { return detail::coeff_is_zero(c); }

  void require_same_bound(const BasicSeries& o) const {
    if (o.bound_ != bound_) {
      throw BoundMismatch("degree bounds " + std::to_string(bound_) + " and " +
                          std::to_string(o.bound_));
    }
  }

  int bound_;
  Terms terms_;
};

using TruncatedSeries = BasicSeries<Rational>;

template <class C>
BasicSeries<C> series_add(const BasicSeries<C>& s, const BasicSeries<C>& t) {
  return s + t;
}

template <class C>
BasicSeries<C> series_mul(const BasicSeries<C>& s, const BasicSeries<C>& t) {
  return s * t;
}

/// exp(s) = sum_{j<=D} s^j / j!; requires a zero constant term.
template <class C>
BasicSeries<C> series_exp(const BasicSeries<C>& s) {
  if (!is_zero(s.constant_term())) {
    throw NonzeroConstantTerm("exp needs a zero constant term");
  }
  auto result = BasicSeries<C>::one(s.bound());
  auto power = result;
  for (int j = 1; j <= s.bound(); ++j) {
    power = (power * s).scaled(Rational(1, j));
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

/// 1/s by the geometric series in (1 - s/c0); requires c0 != 0.
TruncatedSeries series_invert(const TruncatedSeries& s);

/// log(s) = -sum_{j<=D} (1-s)^j / j; requires constant term 1.
TruncatedSeries series_log(const TruncatedSeries& s);

Rational coefficient(const TruncatedSeries& s, const Monomial& exponents);

/// Evaluates the (polynomial) truncation at a numeric point.
Rational evaluate(const TruncatedSeries& s, const Rational& x,
                  const Rational& y, const Rational& z);

/// Canonical text: graded-lex monomials with exact rational coefficients,
/// e.g. "1 + 2*X - 1/2*Y*Z^2"; the zero series is "0".
std::string render(const TruncatedSeries& s);

/// p_k = alpha^k + beta^k for alpha + beta = X + Y, alpha*beta = Z.
class PowerSumTable {
 public:
  PowerSumTable(int bound, std::vector<TruncatedSeries> sums)
      : bound_(bound), sums_(std::move(sums)) {}

  int bound() const { return bound_; }
  int max_power() const { return static_cast<int>(sums_.size()) - 1; }
  /// Valid for 0 <= k <= max_power() (p_0 = 2).
  const TruncatedSeries& p(int k) const { return sums_.at(static_cast<std::size_t>(k)); }

 private:
  int bound_;
  std::vector<TruncatedSeries> sums_;
};

/// Newton recurrence p_k = e1*p_{k-1} - e2*p_{k-2} with e1 = X+Y, e2 = Z,
/// for k <= max_power (default: bound). Since Z has total degree 1, p_k
/// keeps terms of degree ceil(k/2), so powers beyond the bound still matter.
PowerSumTable newton_power_sums(int bound, int max_power);
PowerSumTable newton_power_sums(int bound);

}  // namespace finitehyper
