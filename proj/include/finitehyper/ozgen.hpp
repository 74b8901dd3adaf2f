#pragma once

// Generating functions of truncated multiple polylogarithms graded by
// weight, depth and height, in the variables X, Y, Z:
//
//   Phi0^(N)(X,Y,Z; z) = sum_{k,r,h} G0^(N)(k,r,h; z) X^{k-r-h} Y^{r-h} Z^{h-1}.
//
// Phi0 is computed three ways (index sums, an Euler-type product, and the
// already-divided 2F1^(N) form). The roots alpha, beta of
// t^2 - (X+Y) t + Z never appear individually: every product over them is
// expanded through the symmetric quadratics
//   (m + alpha - X)(m + beta - X) = m^2 + (Y-X) m + Z - XY,
//   (n - alpha)(n - beta)         = n^2 - (X+Y) n + Z,
// and power sums alpha^k + beta^k come from newton_power_sums.

#include <optional>
#include <span>
#include <vector>

#include "finitehyper/exact.hpp"
#include "finitehyper/series.hpp"
#include "finitehyper/zeta_poly.hpp"

namespace finitehyper {

/// Truncation order N, argument z and total-degree bound D. The argument is
/// either a nonzero rational or the special choice z = N/(N - Y), in which
/// case the Pochhammer ratio becomes prod_{n<=m} (1 - Y/(N-n))^{-1}.
class GenFunConfig {
 public:
  static GenFunConfig numeric(int n, const Rational& z, int degree);
  static GenFunConfig special(int n, int degree);

  int n() const { return n_; }
  int degree() const { return degree_; }
  bool symbolic() const { return !z_.has_value(); }
  /// Throws ConfigError for the symbolic argument.
  const Rational& z() const;

  GenFunConfig with_degree(int degree) const;

 private:
  GenFunConfig(int n, std::optional<Rational> z, int degree);

  int n_;
  std::optional<Rational> z_;
  int degree_;
};

/// (N-m)_m / (N z^{-1} - m)_m as a series at the given bound.
TruncatedSeries disc_factor(const GenFunConfig& cfg, int m, int bound);

/// Sum over (k,r,h) of G0^(N)(k,r,h; z) X^{k-r-h} Y^{r-h} Z^{h-1}.
TruncatedSeries phi0_direct(const GenFunConfig& cfg);

/// sum_{0<n<N} prod_{0<m<n} (m^2+(Y-X)m+Z-XY)/(m(m-X)) * 1/(n(n-X)) * disc(n),
/// with every division a series inversion.
TruncatedSeries phi0_product_form(const GenFunConfig& cfg);

/// sum_{0<n<N} (1+alpha-X)_{n-1} (1+beta-X)_{n-1} / ((1-X)_n n!) * disc(n).
TruncatedSeries phi0_closed_form(const GenFunConfig& cfg);

/// 2F1^(N)(alpha-X, beta-X; 1-X; z) - 1 at bound D+2 (undivided).
TruncatedSeries oz_hypergeometric_numerator(const GenFunConfig& cfg);

/// The undivided numerator is an exact multiple of Z - XY whose quotient
/// equals phi0_closed_form up to degree D.
bool divisibility_check(const GenFunConfig& cfg);

template <class C>
struct ExactQuotient {
  BasicSeries<C> quotient;
  bool exact;
};

/// Solves numerator = (Z - XY) * q for q up to `quotient_bound`, which must
/// be at most numerator.bound() - 2. `exact` reports whether every
/// Z-free coefficient of the numerator up to its bound is consistent.
template <class C>
ExactQuotient<C> divide_by_z_minus_xy(const BasicSeries<C>& numerator, int quotient_bound) {
  if (quotient_bound + 2 > numerator.bound()) {
    throw BoundMismatch("numerator bound must exceed quotient bound by 2");
  }
  BasicSeries<C> q(quotient_bound);
  // q[a,b,c] = sum_{j>=0} n[a-j, b-j, c+1+j]
  for (int d = 0; d <= quotient_bound; ++d) {
    for (int a = d; a >= 0; --a) {
      for (int b = d - a; b >= 0; --b) {
        const int c = d - a - b;
        C acc{};
        for (int j = 0; j <= std::min(a, b); ++j) {
          acc = acc + numerator.coefficient({a - j, b - j, c + 1 + j});
        }
        q.add_term({a, b, c}, acc);
      }
    }
  }
  bool exact = true;
  for (const auto& [m, coeff] : numerator.terms()) {
    if (m.z != 0) continue;
    C residual = coeff;
    if (m.x >= 1 && m.y >= 1) residual = residual + q.coefficient({m.x - 1, m.y - 1, 0});
    if (!is_zero(residual)) {
      exact = false;
      break;
    }
  }
  return {std::move(q), exact};
}

/// The three expressions for Phi0^(N)(X, Y, Z; N/(N-Y)).
struct SpecialSides {
  TruncatedSeries direct;         // phi0_direct with z = N/(N-Y)
  TruncatedSeries gamma_product;  // {prod (n^2-(X+Y)n+Z)/((n-X)(n-Y)) - 1}/(Z-XY)
  TruncatedSeries exp_form;       // {exp(sum zeta^(N)(k)/k (X^k+Y^k-p_k)) - 1}/(Z-XY)
};

/// Throws DivisionFailure if a numerator is not a multiple of Z - XY.
SpecialSides tOZ_special_sides(int n, int degree);

/// k, q, h index a monomial X^{k-q-h} Y^{q-h} Z^{h-1}.
bool valid_weight_triple(int k, int q, int h);

/// Sum of zeta~^(N)(k; l) over the extended index set for (k, q, h).
Rational tilde_index_sum(int k, int q, int h, int n);

/// Coefficient of X^{k-q-h} Y^{q-h} Z^{h-1} in Phi0^(N)(N/(N-Y)) against
/// tilde_index_sum(k, q, h, N).
SidePair prop54_sides(int k, int q, int h, int n);

/// Same comparison reusing a precomputed Phi0^(N)(N/(N-Y)) series.
SidePair prop54_sides(const TruncatedSeries& phi0_special, int k, int q, int h, int n);

/// (tilde_index_sum(k,q,h,N), tilde_index_sum(k,k-q,h,N)).
SidePair symmetry_check(int k, int q, int h, int n);

/// P_{k,q,h} read off the exp form with each zeta^(N)(j) kept as Z_j.
ZetaPoly reconstruct_P(int k, int q, int h);

/// Solves for the coefficients of a weight-k polynomial in Z2..Zk from
/// direct sums at the sampled N. Throws UnderdeterminedSystem when the
/// samples do not determine every coefficient.
ZetaPoly fit_P_from_samples(int k, int q, int h, std::span<const int> samples);

struct Reconstruction {
  ZetaPoly polynomial;  // symbolic extraction
  ZetaPoly fitted;      // from samples
  std::vector<int> samples;
  std::vector<SidePair> checks;  // (P(zeta^(N)), direct sum) per sample

  bool valid() const;
};

/// Symbolic P plus validation by substitution at every sampled N.
Reconstruction reconstruct_P(int k, int q, int h, std::span<const int> samples);

}  // namespace finitehyper
