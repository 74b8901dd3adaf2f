#pragma once

// Truncated multiple zeta values and multiple polylogarithms, their
// discretized-integral counterparts, the extended values zeta~^(N)(k; l),
// index-set enumeration, and truncated Arakawa-Kaneko values mod p.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finitehyper/exact.hpp"

namespace finitehyper {

/// A composition (k_1, ..., k_r) of positive integers, r >= 1.
class Index {
 public:
  explicit Index(std::vector<int> parts);

  /// Parses "1,2".
  static Index parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int depth() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int height() const;
  bool admissible() const { return parts_.back() >= 2; }
  std::string str() const;

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index&, const Index&) = default;

 private:
  std::vector<int> parts_;
};

/// (k_1, ..., k_r; l) with l >= 0.
struct ExtendedIndex {
  Index index;
  int l = 0;

  /// Parses "1,2;1" (the ";l" suffix defaults to 0).
  static ExtendedIndex parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const ExtendedIndex&, const ExtendedIndex&) = default;
};

/// weights[m] = sum over 0 < m_1 < ... < m_r = m of prod m_i^{-k_i},
/// for 0 <= m < N (entries below r are zero).
std::vector<Rational> mzv_tail_weights(const Index& k, int n);

/// sum_{0<m_1<...<m_r<N} prod m_i^{-k_i}.
Rational truncated_mzv(const Index& k, int n);

/// Discretized iterated-integral side over chains of blocks
/// 0 < n_{i,1} <= ... <= n_{i,k_i} < N with n_{i,k_i} < n_{i+1,1},
/// weighted by prod 1/((N - n_{i,1}) n_{i,2} ... n_{i,k_i}).
Rational msw_rhs(const Index& k, int n);

/// The MZV sum weighted by (N - m_r)_{m_r} / (N/z - m_r)_{m_r}.
Rational truncated_mpl(const Index& k, const Rational& z, int n);

/// Series side with factors (N x_{i+1} - m_i)_{m_i} / (N x_i - m_i)_{m_i},
/// x_{r+1} = 1.
Rational hms_lhs(const Index& k, std::span<const Rational> x, int n);

/// Chain side with block weights 1/((N x_i - n_{i,1}) n_{i,2} ... n_{i,k_i}).
Rational hms_rhs(const Index& k, std::span<const Rational> x, int n);

/// sum_{n=1}^{N-1} n^{-k}.
Rational truncated_zeta(int k, int n);

/// MZV sum weighted by sum_{0<n_1<=...<=n_l<=m_r} prod 1/(N - n_j).
Rational tilde_zeta(const Index& k, int l, int n);

/// Admissible indices of weight k, depth r and height h, in lexicographic order.
std::vector<Index> enumerate_I0(int k, int r, int h);

/// (k_1..k_r; l) with k_r > 1, weight + l = k, r + l = q, height h;
/// ordered by increasing l, then lexicographically.
std::vector<ExtendedIndex> enumerate_I0_tilde(int k, int q, int h);

/// xi^(p)(k; l) = sum over 0<m_1<...<m_r<p, 0<n_1<=...<=n_{l-1}<=m_r of
/// 1/(m_1^{k_1} ... m_r^{k_r+1} n_1 ... n_{l-1}).
Rational arakawa_kaneko_truncated(const Index& k, int l, std::uint64_t p);

/// (xi^(p)(k; l) mod p, (-1)^{l-1} zeta~^(p)(k_1..k_r+1; l-1) mod p).
std::pair<ResidueClass, ResidueClass> ak_congruence_sides(const Index& k, int l,
                                                          std::uint64_t p);

}  // namespace finitehyper
