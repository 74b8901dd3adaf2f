#include "finitehyper/zeta_poly.hpp"

#include <algorithm>
#include <sstream>

namespace finitehyper {

namespace {

void trim(ZetaPoly::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

int ZetaPoly::weight(const Exponents& e) {
  int w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<int>(i + 2) * e[i];
  return w;
}

int ZetaPoly::degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

// Total degree ascending, then lexicographic with Z2 > Z3 > ...
bool ZetaPoly::Order::operator()(const Exponents& a, const Exponents& b) const {
  const int da = degree(a);
  const int db = degree(b);
  if (da != db) return da < db;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int ea = i < a.size() ? a[i] : 0;
    const int eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

ZetaPoly::ZetaPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

ZetaPoly ZetaPoly::symbol(int j) {
  if (j < 2) throw ConfigError("zeta symbols start at Z2");
  Exponents e(static_cast<std::size_t>(j - 1), 0);
  e.back() = 1;
  ZetaPoly p;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

void ZetaPoly::add_term(Exponents e, const Rational& c) {
  if (c.is_zero()) return;
  trim(e);
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational ZetaPoly::evaluate(const std::function<Rational(int)>& value) const {
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const Rational v = value(static_cast<int>(i + 2));
      for (int p = 0; p < e[i]; ++p) term *= v;
    }
    total += term;
  }
  return total;
}

std::string ZetaPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += 'Z' + std::to_string(i + 2);
      if (e[i] > 1) vars += '^' + std::to_string(e[i]);
    }
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

ZetaPoly& ZetaPoly::operator+=(const ZetaPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ZetaPoly& ZetaPoly::operator-=(const ZetaPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b) {
  ZetaPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ZetaPoly::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

ZetaPoly operator*(const ZetaPoly& a, const Rational& k) {
  ZetaPoly r;
  if (k.is_zero()) return r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * k);
  return r;
}

ZetaPoly ZetaPoly::operator-() const {
  ZetaPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

}  // namespace finitehyper
