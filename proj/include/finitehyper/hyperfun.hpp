#pragma once

// Truncated beta and truncated hypergeometric functions, their discretized
// integral representations, and the finite Gauss / Pfaff / Euler identities.
//
// Every operation pre-screens its Pochhammer denominators and throws
// PoleError naming the first vanishing factor. Identity "sides" operations
// additionally throw DegenerateArgument when a transformed argument has a
// zero denominator.

#include <span>
#include <vector>

#include "finitehyper/exact.hpp"

namespace finitehyper {

/// Parameters of a truncated pFq at order N. The argument z is stored
/// alongside w = N/z, which is what every formula actually uses.
class HyperParams {
 public:
  /// Throws DegenerateArgument when z == 0.
  HyperParams(std::vector<Rational> upper, std::vector<Rational> lower,
              Rational z, unsigned n);

  const std::vector<Rational>& upper() const { return upper_; }
  const std::vector<Rational>& lower() const { return lower_; }
  const Rational& z() const { return z_; }
  const Rational& w() const { return w_; }
  unsigned n() const { return n_; }

  /// No (b_j)_m and no (w-m)_m vanishes for m <= N.
  bool well_posed() const;

 private:
  std::vector<Rational> upper_;
  std::vector<Rational> lower_;
  Rational z_;
  Rational w_;
  unsigned n_;
};

struct BetaParams {
  Rational a;
  Rational b;
  unsigned n = 1;
};

/// B^[N](a,b) = (a+b)_N (N-1)! / ((a)_N (b)_N).
Rational truncated_beta(const BetaParams& p);

/// (1/N) sum_{n=0}^{N} (1+n)_{N-n}/(a+n)_{N-n} * (1+N-n)_n/(b+N-n)_n.
Rational disc_beta_sum(const BetaParams& p);

/// d-variate version: lhs is the closed form
/// (a_1+...+a_d)_N ((N-1)!)^{d-1} / prod (a_i)_N, rhs the sum over
/// compositions n_1+...+n_d = N scaled by N^{-(d-1)}.
SidePair multivariate_disc_beta(std::span<const Rational> a, unsigned n);

/// pFq^[N] = sum_{m=0}^{N} prod(a_i)_m / (prod(b_j)_m m!) * (N+1-m)_m/(w-m)_m.
Rational trunc_pFq_bracket(const HyperParams& p);

/// 2F1^(N) = sum_{m=0}^{N-1} (a)_m(b)_m/((c)_m m!) * (N-m)_m/(w-m)_m.
Rational trunc_2F1_paren(const Rational& a, const Rational& b,
                         const Rational& c, const Rational& z, unsigned n);

/// Terminating pFq at 1. Some upper parameter must be a non-positive
/// integer -N (NotTerminating otherwise); the sum stops at the smallest such N.
Rational terminating_pFq_at_1(std::span<const Rational> upper,
                              std::span<const Rational> lower);

/// (a+w-N)_N / (w-N)_N, the closed form of 1F0^[N](a; z).
Rational t1F0_closed_form(const Rational& a, const Rational& z, unsigned n);

/// Discretized integral for (p+1)F(q+1)^[N](a, a_1..a_p; b, b_1..b_q; z):
///   (a)_N (b-a)_N / ((b)_N N!) * sum_n (1+n)_{N-n}/(a+n)_{N-n}
///     * (1+N-n)_n/(b-a+N-n)_n * pFq^[n](inner; (n/N) z).
/// The order-0 inner value is 1 for any argument.
Rational gen_tHG_int_rhs(const Rational& a, std::span<const Rational> inner_upper,
                         std::span<const Rational> inner_lower, const Rational& b,
                         const Rational& z, unsigned n);

/// The 2F1 specialization of gen_tHG_int_rhs with the inner 1F0 replaced by
/// its closed form (b+w-n)_n/(w-n)_n.
Rational tHG_int_rhs(const Rational& a, const Rational& b, const Rational& c,
                     const Rational& z, unsigned n);

/// Sum over chains 0 = n_0 <= n_1 <= ... <= n_p = N of
/// prod_j C(n_j, n_{j-1}) (a_j)_{n_{j-1}} (b_j-a_j)_{n_j-n_{j-1}} / (b_j)_{n_j};
/// equals (p+1)Fp(a_1..a_p, -N; b_1..b_p; 1).
Rational chain_sum_pFp(std::span<const Rational> upper,
                       std::span<const Rational> lower, unsigned n);

/// 3F2(a,b,-N; d,e; 1) against (e-a)_N/(e)_N * 3F2(a, d-b, -N; d, a+1-N-e; 1).
SidePair transform_3F2_sides(const Rational& a, const Rational& b,
                             const Rational& d, const Rational& e, unsigned n);

/// Finite Gauss sum (Pfaff-Saalschuetz): 2F1^[N](a,b;c; N/(N+c-a-b)) against
/// (c-a)_N (c-b)_N / ((c)_N (c-a-b)_N).
SidePair finite_gauss_sides(const Rational& a, const Rational& b,
                            const Rational& c, unsigned n);

/// Finite Pfaff transformation:
/// 2F1^[N](a,b;c;z) against (b+w-N)_N/(w-N)_N * 2F1^[N](c-a,b;c; N/(N-w+1-b)).
SidePair finite_pfaff_sides(const Rational& a, const Rational& b,
                            const Rational& c, const Rational& z, unsigned n);

/// Finite Euler transformation:
/// 2F1^[N](a,b;c;z) against
/// (a+b-c+w-N)_N/(w-N)_N * 2F1^[N](c-a,c-b;c; N/(w+a+b-c)).
SidePair finite_euler_sides(const Rational& a, const Rational& b,
                            const Rational& c, const Rational& z, unsigned n);

}  // namespace finitehyper
