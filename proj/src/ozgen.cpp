#include "finitehyper/ozgen.hpp"

#include <algorithm>
#include <functional>

#include "finitehyper/polylog.hpp"

namespace finitehyper {

namespace {

using Series = TruncatedSeries;

Series constant(const Rational& c, int bound) { return Series::constant(c, bound); }

// m^2 + (Y-X) m + Z - XY, i.e. (m + alpha - X)(m + beta - X).
Series shifted_quadratic(int m, int bound) {
  const Series x = Series::X(bound);
  const Series y = Series::Y(bound);
  return constant(Rational(m) * Rational(m), bound) + (y - x).scaled(Rational(m)) +
         Series::Z(bound) - x * y;
}

// n^2 - (X+Y) n + Z, i.e. (n - alpha)(n - beta).
Series root_quadratic(int n, int bound) {
  return constant(Rational(n) * Rational(n), bound) -
         (Series::X(bound) + Series::Y(bound)).scaled(Rational(n)) + Series::Z(bound);
}

Series linear_minus(int j, const Series& var) {
  return constant(Rational(j), var.bound()) - var;
}

void require_pole_free(const GenFunConfig& cfg) {
  if (cfg.symbolic()) return;
  const Rational w = Rational(cfg.n()) / cfg.z();
  for (int m = 1; m < cfg.n(); ++m) {
    if (rising_factorial_is_zero(w - Rational(m), static_cast<unsigned>(m))) {
      throw PoleError("(N/z-m)_m with N/z=" + w.str() + ", m=" + std::to_string(m));
    }
  }
}

// Shifts every term of s by the monomial and adds it into out.
void add_shifted(Series& out, const Series& s, const Monomial& shift) {
  for (const auto& [m, c] : s.terms()) {
    if (m.degree() + shift.degree() > out.bound()) break;
    out.add_term({m.x + shift.x, m.y + shift.y, m.z + shift.z}, c);
  }
}

// Visits every (k, r, h) whose monomial X^{k-r-h} Y^{r-h} Z^{h-1} has degree
// <= bound and whose depth r can contribute below N.
void for_each_grading(int n, int bound, const std::function<void(int, int, int)>& visit) {
  for (int h = 1; h - 1 <= bound && h < n; ++h) {
    for (int k = h + h; k - h - 1 <= bound; ++k) {
      for (int r = h; r <= k - h && r < n; ++r) visit(k, r, h);
    }
  }
}

template <class C>
BasicSeries<C> lift(const Series& s, const C& c) {
  BasicSeries<C> out(s.bound());
  for (const auto& [m, r] : s.terms()) out.add_term(m, c * r);
  return out;
}

// exp(sum_{k>=2} c_k / k * (X^k + Y^k - p_k)) - 1 at the given bound. The
// lowest total degree in p_k is ceil(k/2), so k runs to twice the bound.
template <class C>
BasicSeries<C> exp_form_numerator(int bound, const std::function<C(int)>& coeff) {
  const int k_max = 2 * bound;
  const auto sums = newton_power_sums(bound, k_max);
  BasicSeries<C> arg(bound);
  Series xk = Series::one(bound);
  Series yk = Series::one(bound);
  for (int k = 1; k <= k_max; ++k) {
    xk = xk * Series::X(bound);
    yk = yk * Series::Y(bound);
    if (k < 2) continue;
    const Series kernel = (xk + yk - sums.p(k)).scaled(Rational(1, k));
    arg += lift(kernel, coeff(k));
  }
  return series_exp(arg) - BasicSeries<C>::one(bound);
}

Series exp_form_numerator_rational(int n, int bound) {
  return exp_form_numerator<Rational>(bound, [n](int k) { return truncated_zeta(k, n); });
}

BasicSeries<ZetaPoly> exp_form_numerator_symbolic(int bound) {
  return exp_form_numerator<ZetaPoly>(bound, [](int k) { return ZetaPoly::symbol(k); });
}

template <class C>
BasicSeries<C> divided_or_throw(const BasicSeries<C>& numerator, int bound, const char* what) {
  auto q = divide_by_z_minus_xy(numerator, bound);
  if (!q.exact) throw DivisionFailure(std::string(what) + " is not a multiple of Z - XY");
  return std::move(q.quotient);
}

void require_triple(int k, int q, int h) {
  if (!valid_weight_triple(k, q, h)) {
    throw ConfigError("(k,q,h)=(" + std::to_string(k) + "," + std::to_string(q) + "," +
                      std::to_string(h) + ") does not index a monomial");
  }
}

Monomial triple_monomial(int k, int q, int h) { return {k - q - h, q - h, h - 1}; }

// Partitions of k into parts >= 2, as exponent vectors over Z2, Z3, ...
std::vector<ZetaPoly::Exponents> weight_basis(int k) {
  std::vector<ZetaPoly::Exponents> out;
  ZetaPoly::Exponents e(static_cast<std::size_t>(std::max(k - 1, 0)), 0);
  std::function<void(int, int)> fill = [&](int remaining, int largest) {
    if (remaining == 0) {
      auto copy = e;
      while (!copy.empty() && copy.back() == 0) copy.pop_back();
      out.push_back(std::move(copy));
      return;
    }
    for (int part = std::min(remaining, largest); part >= 2; --part) {
      ++e[static_cast<std::size_t>(part - 2)];
      fill(remaining - part, part);
      --e[static_cast<std::size_t>(part - 2)];
    }
  };
  fill(k, k);
  return out;
}

Rational monomial_value(const ZetaPoly::Exponents& e, int n) {
  Rational v(1);
  for (std::size_t i = 0; i < e.size(); ++i) {
    const Rational z = truncated_zeta(static_cast<int>(i + 2), n);
    for (int p = 0; p < e[i]; ++p) v *= z;
  }
  return v;
}

}  // namespace

GenFunConfig::GenFunConfig(int n, std::optional<Rational> z, int degree)
    : n_(n), z_(std::move(z)), degree_(degree) {
  if (n < 1) throw ConfigError("N must be positive");
  if (degree < 0) throw ConfigError("degree bound must be non-negative");
}

GenFunConfig GenFunConfig::numeric(int n, const Rational& z, int degree) {
  if (z.is_zero()) throw DegenerateArgument("argument z must be nonzero");
  return GenFunConfig(n, z, degree);
}

GenFunConfig GenFunConfig::special(int n, int degree) {
  return GenFunConfig(n, std::nullopt, degree);
}

const Rational& GenFunConfig::z() const {
  if (!z_) throw ConfigError("symbolic argument N/(N-Y) has no rational value");
  return *z_;
}

GenFunConfig GenFunConfig::with_degree(int degree) const { return GenFunConfig(n_, z_, degree); }

TruncatedSeries disc_factor(const GenFunConfig& cfg, int m, int bound) {
  const int n = cfg.n();
  if (m < 0) throw ConfigError("negative Pochhammer length");
  if (!cfg.symbolic()) {
    const Rational w = Rational(n) / cfg.z();
    const auto mu = static_cast<unsigned>(m);
    if (rising_factorial_is_zero(w - Rational(m), mu)) {
      throw PoleError("(N/z-m)_m with N/z=" + w.str() + ", m=" + std::to_string(m));
    }
    return constant(rising_factorial(Rational(n - m), mu) / rising_factorial(w - Rational(m), mu),
                    bound);
  }
  if (m >= n) return Series(bound);  // (N-m)_m vanishes
  Series out = Series::one(bound);
  const Series y = Series::Y(bound);
  for (int j = 1; j <= m; ++j) {
    // 1 - Y/(N-j)
    const Series factor = Series::one(bound) - y.scaled(Rational(1, n - j));
    out = out * series_invert(factor);
  }
  return out;
}

TruncatedSeries phi0_direct(const GenFunConfig& cfg) {
  require_pole_free(cfg);
  const int n = cfg.n();
  const int bound = cfg.degree();
  Series out(bound);
  if (!cfg.symbolic()) {
    for_each_grading(n, bound, [&](int k, int r, int h) {
      Rational g;
      for (const auto& idx : enumerate_I0(k, r, h)) g += truncated_mpl(idx, cfg.z(), n);
      out.add_term({k - r - h, r - h, h - 1}, g);
    });
    return out;
  }
  std::vector<Series> disc;
  for (int m = 0; m < n; ++m) disc.push_back(disc_factor(cfg, m, bound));
  for_each_grading(n, bound, [&](int k, int r, int h) {
    std::vector<Rational> tail(static_cast<std::size_t>(n));
    for (const auto& idx : enumerate_I0(k, r, h)) {
      const auto w = mzv_tail_weights(idx, n);
      for (int m = r; m < n; ++m) tail[m] += w[m];
    }
    Series coeff(bound);
    for (int m = r; m < n; ++m) {
      if (!tail[m].is_zero()) coeff += disc[m].scaled(tail[m]);
    }
    add_shifted(out, coeff, {k - r - h, r - h, h - 1});
  });
  return out;
}

TruncatedSeries phi0_product_form(const GenFunConfig& cfg) {
  require_pole_free(cfg);
  const int bound = cfg.degree();
  const Series x = Series::X(bound);
  Series out(bound);
  Series running = Series::one(bound);  // prod_{0<m<n} quad(m) / (m (m - X))
  for (int n = 1; n < cfg.n(); ++n) {
    if (n > 1) {
      const int m = n - 1;
      running = running * shifted_quadratic(m, bound) *
                series_invert(linear_minus(m, x).scaled(Rational(m)));
    }
    out += running * series_invert(linear_minus(n, x).scaled(Rational(n))) *
           disc_factor(cfg, n, bound);
  }
  return out;
}

TruncatedSeries phi0_closed_form(const GenFunConfig& cfg) {
  require_pole_free(cfg);
  const int bound = cfg.degree();
  const Series x = Series::X(bound);
  Series out(bound);
  Series numerator = Series::one(bound);    // prod_{m=1}^{n-1} quad(m)
  Series denominator = Series::one(bound);  // (1-X)_n n!
  for (int n = 1; n < cfg.n(); ++n) {
    if (n > 1) numerator = numerator * shifted_quadratic(n - 1, bound);
    denominator = denominator * linear_minus(n, x).scaled(Rational(n));
    out += numerator * series_invert(denominator) * disc_factor(cfg, n, bound);
  }
  return out;
}

TruncatedSeries oz_hypergeometric_numerator(const GenFunConfig& cfg) {
  require_pole_free(cfg);
  const int bound = cfg.degree() + 2;
  const Series x = Series::X(bound);
  Series out(bound);
  Series numerator = shifted_quadratic(0, bound);  // (alpha-X)(beta-X) = Z - XY
  Series denominator = Series::one(bound);
  for (int m = 1; m < cfg.n(); ++m) {
    if (m > 1) numerator = numerator * shifted_quadratic(m - 1, bound);
    denominator = denominator * linear_minus(m, x).scaled(Rational(m));
    out += numerator * series_invert(denominator) * disc_factor(cfg, m, bound);
  }
  return out;
}

bool divisibility_check(const GenFunConfig& cfg) {
  const auto q = divide_by_z_minus_xy(oz_hypergeometric_numerator(cfg), cfg.degree());
  return q.exact && q.quotient == phi0_closed_form(cfg);
}

SpecialSides tOZ_special_sides(int n, int degree) {
  if (n < 2) throw ConfigError("N must be at least 2");
  const auto cfg = GenFunConfig::special(n, degree);
  const int bound = degree + 2;

  Series product = Series::one(bound);
  const Series x = Series::X(bound);
  const Series y = Series::Y(bound);
  for (int j = 1; j < n; ++j) {
    product = product * root_quadratic(j, bound) *
              series_invert(linear_minus(j, x) * linear_minus(j, y));
  }
  product -= Series::one(bound);

  return {phi0_direct(cfg), divided_or_throw(product, degree, "gamma-product numerator"),
          divided_or_throw(exp_form_numerator_rational(n, bound), degree, "exp-form numerator")};
}

bool valid_weight_triple(int k, int q, int h) { return h >= 1 && q >= h && k - q - h >= 0; }

Rational tilde_index_sum(int k, int q, int h, int n) {
  require_triple(k, q, h);
  Rational sum;
  for (const auto& e : enumerate_I0_tilde(k, q, h)) sum += tilde_zeta(e.index, e.l, n);
  return sum;
}

SidePair prop54_sides(int k, int q, int h, int n) {
  require_triple(k, q, h);
  const int degree = k - h - 1;
  return prop54_sides(phi0_direct(GenFunConfig::special(n, degree)), k, q, h, n);
}

SidePair prop54_sides(const TruncatedSeries& phi0_special, int k, int q, int h, int n) {
  require_triple(k, q, h);
  return {phi0_special.coefficient(triple_monomial(k, q, h)), tilde_index_sum(k, q, h, n)};
}

SidePair symmetry_check(int k, int q, int h, int n) {
  require_triple(k, q, h);
  require_triple(k, k - q, h);
  return {tilde_index_sum(k, q, h, n), tilde_index_sum(k, k - q, h, n)};
}

ZetaPoly reconstruct_P(int k, int q, int h) {
  require_triple(k, q, h);
  const int degree = k - h - 1;
  const auto quotient =
      divided_or_throw(exp_form_numerator_symbolic(degree + 2), degree, "exp-form numerator");
  return quotient.coefficient(triple_monomial(k, q, h));
}

ZetaPoly fit_P_from_samples(int k, int q, int h, std::span<const int> samples) {
  require_triple(k, q, h);
  const auto basis = weight_basis(k);
  const std::size_t cols = basis.size();
  std::vector<std::vector<Rational>> rows;
  for (int n : samples) {
    std::vector<Rational> row;
    for (const auto& e : basis) row.push_back(monomial_value(e, n));
    row.push_back(tilde_index_sum(k, q, h, n));
    rows.push_back(std::move(row));
  }
  // Gauss-Jordan elimination over Q.
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational lead = rows[rank][col];
    for (auto& v : rows[rank]) v /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col];
      for (std::size_t c = col; c <= cols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivots.push_back(col);
    ++rank;
  }
  if (rank < cols) {
    throw UnderdeterminedSystem(std::to_string(samples.size()) + " samples determine " +
                                std::to_string(rank) + " of " + std::to_string(cols) +
                                " coefficients");
  }
  ZetaPoly p;
  for (std::size_t i = 0; i < rank; ++i) p.add_term(basis[pivots[i]], rows[i][cols]);
  return p;
}

bool Reconstruction::valid() const {
  if (!(polynomial == fitted)) return false;
  return std::all_of(checks.begin(), checks.end(), [](const SidePair& s) { return s.equal(); });
}

Reconstruction reconstruct_P(int k, int q, int h, std::span<const int> samples) {
  Reconstruction out{reconstruct_P(k, q, h), fit_P_from_samples(k, q, h, samples),
                     std::vector<int>(samples.begin(), samples.end()), {}};
  for (int n : samples) {
    const Rational value =
        out.polynomial.evaluate([n](int j) { return truncated_zeta(j, n); });
    out.checks.push_back({value, tilde_index_sum(k, q, h, n)});
  }
  return out;
}

}  // namespace finitehyper
