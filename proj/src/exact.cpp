#include "finitehyper/exact.hpp"

#include <ostream>
#include <stdexcept>

namespace finitehyper {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
      s.remove_prefix(1);
    }
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);

  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) {
    throw ConfigError("malformed rational: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  return Rational(BigInt(std::string(num)), BigInt(std::string(den)));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational r;
  mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational rising_factorial(const Rational& a, unsigned m) {
  Rational result(1);
  Rational factor = a;
  for (unsigned j = 0; j < m; ++j) {
    result *= factor;
    if (result.is_zero()) return result;
    factor += 1;
  }
  return result;
}

bool rising_factorial_is_zero(const Rational& a, unsigned m) {
  if (m == 0 || !a.is_integer() || a.sign() > 0) return false;
  // a is an integer <= 0: a factor vanishes iff -a < m.
  const BigInt neg = -a.numerator();
  return neg < m;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return r;
}

}  // namespace

ResidueClass::ResidueClass(std::uint64_t value, std::uint64_t modulus)
    : value_(value % modulus), modulus_(modulus) {}

static void require_same_modulus(const ResidueClass& a,
                                 const ResidueClass& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("residue classes with different moduli");
  }
}

ResidueClass operator+(const ResidueClass& a, const ResidueClass& b) {
  require_same_modulus(a, b);
  return {(a.value_ + b.value_) % a.modulus_, a.modulus_};
}

ResidueClass operator-(const ResidueClass& a, const ResidueClass& b) {
  require_same_modulus(a, b);
  return {(a.value_ + a.modulus_ - b.value_) % a.modulus_, a.modulus_};
}

ResidueClass operator*(const ResidueClass& a, const ResidueClass& b) {
  require_same_modulus(a, b);
  return {mul_mod(a.value_, b.value_, a.modulus_), a.modulus_};
}

std::string ResidueClass::str() const {
  return std::to_string(value_) + " mod " + std::to_string(modulus_);
}

ResidueClass reduce_mod_p(const Rational& x, std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) +
                                " is not prime");
  }
  const BigInt den = x.denominator();
  const auto d = static_cast<std::uint64_t>(
      mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p)));
  if (d == 0) {
    throw DenominatorDivisibleByP(x.str() + " has denominator divisible by " +
                                  std::to_string(p));
  }
  const BigInt num = x.numerator();
  const auto n = static_cast<std::uint64_t>(
      mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(p)));
  return {mul_mod(n, pow_mod(d, p - 2, p), p), p};
}

}  // namespace finitehyper
