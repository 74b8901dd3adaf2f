#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "finitehyper/exact.hpp"

namespace finitehyper {

/// Polynomial over Q in abstract symbols Z2, Z3, ... (Z_j of weight j).
/// Used as a series coefficient ring when truncated zeta values are kept
/// symbolic.
class ZetaPoly {
 public:
  /// exponents[i] is the power of Z_{i+2}; trailing zeros are trimmed.
  using Exponents = std::vector<int>;

  struct Order {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using Terms = std::map<Exponents, Rational, Order>;

  ZetaPoly() = default;
  explicit ZetaPoly(const Rational& c);

  /// The symbol Z_j, j >= 2.
  static ZetaPoly symbol(int j);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Exponents e, const Rational& c);

  /// Substitutes Z_j -> value(j).
  Rational evaluate(const std::function<Rational(int)>& value) const;

  /// "Z2", "1/2*Z2^2 - Z4", "0".
  std::string str() const;

  ZetaPoly& operator+=(const ZetaPoly& o);
  ZetaPoly& operator-=(const ZetaPoly& o);
  friend ZetaPoly operator+(ZetaPoly a, const ZetaPoly& b) { return a += b; }
  friend ZetaPoly operator-(ZetaPoly a, const ZetaPoly& b) { return a -= b; }
  friend ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b);
  friend ZetaPoly operator*(const ZetaPoly& a, const Rational& k);
  ZetaPoly operator-() const;
  friend bool operator==(const ZetaPoly& a, const ZetaPoly& b) { return a.terms_ == b.terms_; }

  static int weight(const Exponents& e);
  static int degree(const Exponents& e);

 private:
  Terms terms_;
};

inline bool is_zero(const ZetaPoly& p) { return p.is_zero(); }

}  // namespace finitehyper
