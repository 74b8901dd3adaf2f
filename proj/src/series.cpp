#include "finitehyper/series.hpp"

#include <sstream>

namespace finitehyper {

TruncatedSeries series_invert(const TruncatedSeries& s) {
  const Rational c0 = s.constant_term();
  if (c0.is_zero()) {
    throw NonUnitConstantTerm("cannot invert a series with zero constant term");
  }
  const Rational inv_c0 = c0.inverse();
  // s = c0 (1 - u)  =>  1/s = (1/c0) sum u^j
  TruncatedSeries u = TruncatedSeries::one(s.bound()) - s.scaled(inv_c0);
  TruncatedSeries result = TruncatedSeries::one(s.bound());
  TruncatedSeries power = result;
  for (int j = 1; j <= s.bound(); ++j) {
    power = power * u;
    if (power.is_zero()) break;
    result += power;
  }
  return result.scaled(inv_c0);
}

TruncatedSeries series_log(const TruncatedSeries& s) {
  if (s.constant_term() != Rational(1)) {
    throw ConstantTermNotOne("log needs constant term 1");
  }
  TruncatedSeries u = TruncatedSeries::one(s.bound()) - s;
  TruncatedSeries result(s.bound());
  TruncatedSeries power = TruncatedSeries::one(s.bound());
  for (int j = 1; j <= s.bound(); ++j) {
    power = power * u;
    if (power.is_zero()) break;
    result -= power.scaled(Rational(1, j));
  }
  return result;
}

Rational coefficient(const TruncatedSeries& s, const Monomial& exponents) {
  return s.coefficient(exponents);
}

namespace {

Rational power(const Rational& base, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Rational evaluate(const TruncatedSeries& s, const Rational& x,
                  const Rational& y, const Rational& z) {
  Rational total;
  for (const auto& [m, c] : s.terms()) {
    total += c * power(x, m.x) * power(y, m.y) * power(z, m.z);
  }
  return total;
}

std::string render(const TruncatedSeries& s) {
  if (s.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::string vars;
    auto append = [&vars](char name, int e) {
      if (e == 0) return;
      if (!vars.empty()) vars += '*';
      vars += name;
      if (e > 1) vars += '^' + std::to_string(e);
    };
    append('X', m.x);
    append('Y', m.y);
    append('Z', m.z);

    if (vars.empty()) {
      out << mag.str();
    } else if (mag == Rational(1)) {
      out << vars;
    } else {
      out << mag.str() << '*' << vars;
    }
  }
  return out.str();
}

PowerSumTable newton_power_sums(int bound) { return newton_power_sums(bound, bound); }

PowerSumTable newton_power_sums(int bound, int max_power) {
  if (bound < 1) throw ConfigError("power sum table needs bound >= 1");
  if (max_power < 1) throw ConfigError("power sum table needs max_power >= 1");
  const auto e1 = TruncatedSeries::X(bound) + TruncatedSeries::Y(bound);
  const auto e2 = TruncatedSeries::Z(bound);
  std::vector<TruncatedSeries> p;
  p.reserve(static_cast<std::size_t>(max_power) + 1);
  p.push_back(TruncatedSeries::constant(Rational(2), bound));
  p.push_back(e1);
  for (int k = 2; k <= max_power; ++k) {
    const auto& pk1 = p[static_cast<std::size_t>(k - 1)];
    const auto& pk2 = p[static_cast<std::size_t>(k - 2)];
    p.push_back(e1 * pk1 - e2 * pk2);
  }
  return {bound, std::move(p)};
}

}  // namespace finitehyper
