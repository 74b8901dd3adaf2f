#include "finitehyper/hyperfun.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace finitehyper {

namespace {

void require_nonzero_rising(const Rational& a, unsigned m, const std::string& label) {
  if (rising_factorial_is_zero(a, m)) {
    throw PoleError("(" + label + ")_" + std::to_string(m) + " with " + label +
                    "=" + a.str());
  }
}

/// (w-m)_m for all m <= n is nonzero iff w is not in {1, ..., n}.
void require_argument_pole_free(const Rational& w, unsigned n) {
  if (n > 0 && rising_factorial_is_zero(w - Rational(static_cast<long>(n)), n)) {
    throw PoleError("(w-m)_m with w=N/z=" + w.str() + " for some m <= " +
                    std::to_string(n));
  }
}

void require_positive(unsigned n, const char* what) {
  if (n == 0) throw ConfigError(std::string(what) + " needs N >= 1");
}

Rational to_rational(unsigned long v) { return Rational(static_cast<long>(v)); }

Rational factorial_q(unsigned long n) { return Rational(factorial(n)); }

/// (num)_m / (den)_m with the denominator already screened.
Rational rising_ratio(const Rational& num, const Rational& den, unsigned m) {
  return rising_factorial(num, m) / rising_factorial(den, m);
}

Rational argument_w(const Rational& z, unsigned n) {
  if (z.is_zero()) throw DegenerateArgument("argument z must be nonzero");
  return to_rational(n) / z;
}

}  // namespace

HyperParams::HyperParams(std::vector<Rational> upper, std::vector<Rational> lower,
                         Rational z, unsigned n)
    : upper_(std::move(upper)), lower_(std::move(lower)), z_(std::move(z)), n_(n) {
  w_ = argument_w(z_, n_);
}

bool HyperParams::well_posed() const {
  for (const auto& b : lower_) {
    if (rising_factorial_is_zero(b, n_)) return false;
  }
  return n_ == 0 || !rising_factorial_is_zero(w_ - to_rational(n_), n_);
}

Rational truncated_beta(const BetaParams& p) {
  require_positive(p.n, "truncated beta");
  require_nonzero_rising(p.a, p.n, "a");
  require_nonzero_rising(p.b, p.n, "b");
  return rising_factorial(p.a + p.b, p.n) * factorial_q(p.n - 1) /
         (rising_factorial(p.a, p.n) * rising_factorial(p.b, p.n));
}

Rational disc_beta_sum(const BetaParams& p) {
  require_positive(p.n, "discretized beta");
  const unsigned n_max = p.n;
  // (a+n)_{N-n} and (b+N-n)_n are tails of (a)_N and (b)_N.
  require_nonzero_rising(p.a, n_max, "a");
  require_nonzero_rising(p.b, n_max, "b");
  Rational sum;
  for (unsigned n = 0; n <= n_max; ++n) {
    const Rational nq = to_rational(n);
    const Rational rest = to_rational(n_max - n);
    sum += rising_ratio(1 + nq, p.a + nq, n_max - n) *
           rising_ratio(1 + rest, p.b + rest, n);
  }
  return sum / to_rational(n_max);
}

SidePair multivariate_disc_beta(std::span<const Rational> a, unsigned n) {
  if (a.size() < 2) throw ConfigError("multivariate beta needs d >= 2");
  require_positive(n, "multivariate beta");
  const auto d = a.size();

  Rational total;
  Rational denom(1);
  for (std::size_t i = 0; i < d; ++i) {
    require_nonzero_rising(a[i], n, "a" + std::to_string(i + 1));
    total += a[i];
    denom *= rising_factorial(a[i], n);
  }
  Rational closed = rising_factorial(total, n) / denom;
  const Rational fact = factorial_q(n - 1);
  for (std::size_t i = 1; i < d; ++i) closed *= fact;

  // weight[i][k] = (1+k)_{N-k} / (a_i+k)_{N-k}
  std::vector<std::vector<Rational>> weight(d);
  for (std::size_t i = 0; i < d; ++i) {
    weight[i].reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
      const Rational kq = to_rational(k);
      weight[i].push_back(rising_ratio(1 + kq, a[i] + kq, n - k));
    }
  }
  Rational sum;
  std::function<void(std::size_t, unsigned, const Rational&)> walk =
      [&](std::size_t i, unsigned left, const Rational& acc) {
        if (i + 1 == d) {
          sum += acc * weight[i][left];
          return;
        }
        for (unsigned k = 0; k <= left; ++k) walk(i + 1, left - k, acc * weight[i][k]);
      };
  walk(0, n, Rational(1));

  Rational scale(1);
  for (std::size_t i = 1; i < d; ++i) scale *= to_rational(n);
  return {closed, sum / scale};
}

Rational trunc_pFq_bracket(const HyperParams& p) {
  const unsigned n = p.n();
  for (std::size_t j = 0; j < p.lower().size(); ++j) {
    require_nonzero_rising(p.lower()[j], n, "b" + std::to_string(j + 1));
  }
  require_argument_pole_free(p.w(), n);

  Rational sum;
  for (unsigned m = 0; m <= n; ++m) {
    Rational term(1);
    for (const auto& a : p.upper()) term *= rising_factorial(a, m);
    if (term.is_zero()) continue;
    Rational den = factorial_q(m);
    for (const auto& b : p.lower()) den *= rising_factorial(b, m);
    const Rational mq = to_rational(m);
    term *= rising_ratio(to_rational(n + 1) - mq, p.w() - mq, m);
    sum += term / den;
  }
  return sum;
}

Rational trunc_2F1_paren(const Rational& a, const Rational& b, const Rational& c,
                         const Rational& z, unsigned n) {
  require_positive(n, "(N)-truncated 2F1");
  const Rational w = argument_w(z, n);
  require_nonzero_rising(c, n - 1, "c");
  require_argument_pole_free(w, n - 1);
  Rational sum;
  for (unsigned m = 0; m < n; ++m) {
    const Rational mq = to_rational(m);
    sum += rising_factorial(a, m) * rising_factorial(b, m) /
           (rising_factorial(c, m) * factorial_q(m)) *
           rising_ratio(to_rational(n) - mq, w - mq, m);
  }
  return sum;
}

Rational terminating_pFq_at_1(std::span<const Rational> upper,
                              std::span<const Rational> lower) {
  bool found = false;
  BigInt order;
  for (const auto& a : upper) {
    if (a.is_integer() && a.sign() <= 0) {
      const BigInt candidate = -a.numerator();
      if (!found || candidate < order) order = candidate;
      found = true;
    }
  }
  if (!found) {
    throw NotTerminating("no upper parameter is a non-positive integer");
  }
  if (!order.fits_uint_p()) throw ConfigError("termination order too large");
  const auto n = static_cast<unsigned>(order.get_ui());
  for (std::size_t j = 0; j < lower.size(); ++j) {
    require_nonzero_rising(lower[j], n, "b" + std::to_string(j + 1));
  }
  Rational sum;
  for (unsigned m = 0; m <= n; ++m) {
    Rational num(1);
    for (const auto& a : upper) num *= rising_factorial(a, m);
    if (num.is_zero()) continue;
    Rational den = factorial_q(m);
    for (const auto& b : lower) den *= rising_factorial(b, m);
    sum += num / den;
  }
  return sum;
}

Rational t1F0_closed_form(const Rational& a, const Rational& z, unsigned n) {
  if (n == 0) return Rational(1);
  const Rational w = argument_w(z, n);
  const Rational base = w - to_rational(n);
  require_nonzero_rising(base, n, "w-N");
  return rising_ratio(a + base, base, n);
}

Rational gen_tHG_int_rhs(const Rational& a, std::span<const Rational> inner_upper,
                         std::span<const Rational> inner_lower, const Rational& b,
                         const Rational& z, unsigned n) {
  if (n == 0) return Rational(1);
  if (z.is_zero()) throw DegenerateArgument("argument z must be nonzero");
  require_nonzero_rising(b, n, "b");
  require_nonzero_rising(a, n, "a");
  require_nonzero_rising(b - a, n, "b-a");

  const Rational nq = to_rational(n);
  const Rational prefactor = rising_factorial(a, n) * rising_factorial(b - a, n) /
                             (rising_factorial(b, n) * factorial_q(n));
  const std::vector<Rational> up(inner_upper.begin(), inner_upper.end());
  const std::vector<Rational> lo(inner_lower.begin(), inner_lower.end());

  Rational sum;
  for (unsigned k = 0; k <= n; ++k) {
    const Rational kq = to_rational(k);
    const Rational rest = nq - kq;
    Rational inner(1);
    if (k > 0) inner = trunc_pFq_bracket(HyperParams(up, lo, kq / nq * z, k));
    sum += rising_ratio(1 + kq, a + kq, n - k) *
           rising_ratio(1 + rest, b - a + rest, k) * inner;
  }
  return prefactor * sum;
}

Rational tHG_int_rhs(const Rational& a, const Rational& b, const Rational& c,
                     const Rational& z, unsigned n) {
  if (n == 0) return Rational(1);
  const Rational w = argument_w(z, n);
  require_nonzero_rising(c, n, "c");
  require_nonzero_rising(a, n, "a");
  require_nonzero_rising(c - a, n, "c-a");
  require_argument_pole_free(w, n);

  const Rational nq = to_rational(n);
  const Rational prefactor = rising_factorial(a, n) * rising_factorial(c - a, n) /
                             (rising_factorial(c, n) * factorial_q(n));
  Rational sum;
  for (unsigned k = 0; k <= n; ++k) {
    const Rational kq = to_rational(k);
    const Rational rest = nq - kq;
    sum += rising_ratio(1 + kq, a + kq, n - k) *
           rising_ratio(1 + rest, c - a + rest, k) *
           rising_ratio(b + w - kq, w - kq, k);
  }
  return prefactor * sum;
}

Rational chain_sum_pFp(std::span<const Rational> upper,
                       std::span<const Rational> lower, unsigned n) {
  if (upper.empty() || upper.size() != lower.size()) {
    throw ConfigError("chain sum needs p >= 1 upper and p lower parameters");
  }
  const std::size_t p = upper.size();
  for (std::size_t j = 0; j < p; ++j) {
    require_nonzero_rising(lower[j], n, "b" + std::to_string(j + 1));
  }
  // value[m] = total weight of partial chains with current endpoint m.
  std::vector<Rational> value(n + 1);
  value[0] = Rational(1);
  for (std::size_t j = 0; j < p; ++j) {
    const Rational& aj = upper[j];
    const Rational diff = lower[j] - aj;
    const unsigned lo_end = (j + 1 == p) ? n : 0;
    std::vector<Rational> next(n + 1);
    for (unsigned to = lo_end; to <= n; ++to) {
      const Rational inv_b = rising_factorial(lower[j], to).inverse();
      Rational acc;
      for (unsigned from = 0; from <= to; ++from) {
        if (value[from].is_zero()) continue;
        acc += value[from] * Rational(binomial(to, from)) *
               rising_factorial(aj, from) * rising_factorial(diff, to - from);
      }
      next[to] = acc * inv_b;
    }
    value = std::move(next);
  }
  return value[n];
}

SidePair transform_3F2_sides(const Rational& a, const Rational& b,
                             const Rational& d, const Rational& e, unsigned n) {
  const Rational minus_n = -to_rational(n);
  require_nonzero_rising(e, n, "e");
  const std::vector<Rational> up_l{a, b, minus_n};
  const std::vector<Rational> lo_l{d, e};
  const std::vector<Rational> up_r{a, d - b, minus_n};
  const std::vector<Rational> lo_r{d, a + 1 - to_rational(n) - e};
  const Rational lhs = terminating_pFq_at_1(up_l, lo_l);
  const Rational rhs = rising_ratio(e - a, e, n) * terminating_pFq_at_1(up_r, lo_r);
  return {lhs, rhs};
}

SidePair finite_gauss_sides(const Rational& a, const Rational& b,
                            const Rational& c, unsigned n) {
  if (n == 0) return {Rational(1), Rational(1)};
  const Rational shift = to_rational(n) + c - a - b;
  if (shift.is_zero()) throw DegenerateArgument("N+c-a-b = 0");
  require_nonzero_rising(c, n, "c");
  require_nonzero_rising(c - a - b, n, "c-a-b");
  const Rational lhs = trunc_pFq_bracket(HyperParams({a, b}, {c}, to_rational(n) / shift, n));
  const Rational rhs = rising_factorial(c - a, n) * rising_factorial(c - b, n) /
                       (rising_factorial(c, n) * rising_factorial(c - a - b, n));
  return {lhs, rhs};
}

SidePair finite_pfaff_sides(const Rational& a, const Rational& b,
                            const Rational& c, const Rational& z, unsigned n) {
  if (n == 0) return {Rational(1), Rational(1)};
  const Rational w = argument_w(z, n);
  const Rational nq = to_rational(n);
  const Rational shift = nq - w + 1 - b;
  if (shift.is_zero()) throw DegenerateArgument("N-w+1-b = 0");
  require_nonzero_rising(w - nq, n, "w-N");
  const Rational lhs = trunc_pFq_bracket(HyperParams({a, b}, {c}, z, n));
  const Rational rhs = rising_ratio(b + w - nq, w - nq, n) *
                       trunc_pFq_bracket(HyperParams({c - a, b}, {c}, nq / shift, n));
  return {lhs, rhs};
}

SidePair finite_euler_sides(const Rational& a, const Rational& b,
                            const Rational& c, const Rational& z, unsigned n) {
  if (n == 0) return {Rational(1), Rational(1)};
  const Rational w = argument_w(z, n);
  const Rational nq = to_rational(n);
  const Rational shift = w + a + b - c;
  if (shift.is_zero()) throw DegenerateArgument("w+a+b-c = 0");
  require_nonzero_rising(w - nq, n, "w-N");
  const Rational lhs = trunc_pFq_bracket(HyperParams({a, b}, {c}, z, n));
  const Rational rhs = rising_ratio(a + b - c + w - nq, w - nq, n) *
                       trunc_pFq_bracket(HyperParams({c - a, c - b}, {c}, nq / shift, n));
  return {lhs, rhs};
}

}  // namespace finitehyper
