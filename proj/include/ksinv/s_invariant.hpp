#pragma once

/**
 * @file s_invariant.hpp
 * @brief Spin detection, the bordism term t(W) and the s-invariant of M_{k,l}.
 *
 * M_{k,l} is the total space of the circle bundle over CP^{2n} x CP^1 with
 * Euler class c = l x + k y, a simply connected (4n+3)-manifold when
 * gcd(k, l) = 1. W = D(L) is the associated disk bundle. For k even the
 * s-invariant of the submersion metric equals t(W).
 */

#include <cstdint>

#include "ksinv/graded_ring.hpp"
#include "ksinv/rational.hpp"

namespace ksinv {

/// (n, k, l) with n >= 1, k >= 2 even, l >= 1 odd and gcd(k, l) = 1.
class BundleParams {
 public:
  /// Throws DomainError naming the first violated constraint.
  static BundleParams make(int n, std::int64_t k, std::int64_t l);

  int n() const { return n_; }
  std::int64_t k() const { return k_; }
  std::int64_t l() const { return l_; }
  int dimension() const { return 4 * n_ + 3; }

  friend auto operator<=>(const BundleParams&, const BundleParams&) = default;

 private:
  BundleParams(int n, std::int64_t k, std::int64_t l) : n_(n), k_(k), l_(l) {}

  int n_;
  std::int64_t k_;
  std::int64_t l_;
};

/// Pieces of t(W) = -(ahat_part + a_{n+1} lgenus_part) + a_{n+1} signature_term.
struct BordismTerms {
  Rational ahat_part;
  Rational lgenus_part;
  int signature_term = 0;
  Rational t_w;
};

struct SInvariantReport {
  BundleParams params;
  Rational s;
  Rational t_w;
  Rational ahat_part;
  Rational lgenus_part;
  int signature_term = 0;
  bool spin = false;
  /// frac(-t_w), the Eells-Kuiper reduction.
  Rational ek_mod1;
  /// frac(-t_w / 2), the halved variant used for odd m = n + 1 in some conventions.
  Rational ek_mod1_halved;
};

/// Total Stiefel-Whitney class of W: (1+x)^{2n+1} (1+y)^2 (1 + l x + k y) mod 2.
Mod2Element sw_total_W(std::int64_t k, std::int64_t l, int n);

/// Total Stiefel-Whitney class of M_{k,l}: (1+lv)^2 (1-kv)^{2n+1} in F_2[v]/(v^{2n+1}).
/// v occupies the x slot of the returned Mod2Element.
Mod2Element sw_total_M(std::int64_t k, std::int64_t l, int n);

/// w_2(M_{k,l}) = 0. Throws DomainError unless gcd(k, l) = 1.
bool is_spin(std::int64_t k, std::int64_t l, int n);

/// Signature of the symmetric form [[a, b], [b, d]].
int signature_2x2(const Rational& a, const Rational& b, const Rational& d);

/// Signature of the form (u, v) -> <u v c, [B]> on H^{2n}(B), whose matrix
/// in the basis (x^n, x^{n-1} y) is [[k, l], [l, 0]].
int signature_Bc(std::int64_t k, std::int64_t l);

/// t(W) assembled from the tangent splitting of B and the signature correction.
BordismTerms bordism_terms(const BundleParams& params);
Rational t_w(const BundleParams& params);

/// s(k, l) evaluated directly as
///   -<(1/c) ((x/2 / sinh(x/2))^{2n+1} (c/2)/sinh(c/2) + a_{n+1} (x/tanh x)^{2n+1} c/tanh c), [B]>.
Rational s_value(const BundleParams& params);

/// frac(-t), or frac(-t/2) with @p halve.
Rational ek_mod1(const Rational& t, bool halve = false);

SInvariantReport s_invariant(const BundleParams& params);

}  // namespace ksinv
