#pragma once

/**
 * @file graded_ring.hpp
 * @brief Truncated cohomology-ring arithmetic for B = CP^{2n} x CP^1.
 *
 * RingElement lives in Q[x,y] / (x^{2n+3}, y^2). The geometric ring
 * H*(B; Q) already kills x^{2n+1}; the two extra powers of x carry the
 * degree-(4n+4) numerator that has to be divided by the Euler class
 * before pairing with [B]. Monomial x^i y^j has cohomological degree 2i + 2j.
 *
 * Mod2Element lives in F_2[x,y] / (x^{2n+1}, y^2) and holds total
 * Stiefel-Whitney classes.
 */

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ksinv/coefficients.hpp"
#include "ksinv/rational.hpp"

namespace ksinv {

struct Monomial {
  int x = 0;  // exponent of x
  int y = 0;  // exponent of y (0 or 1)

  int degree() const { return 2 * x + 2 * y; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class RingElement {
 public:
  /// Zero element of the ring for @p n (n >= 1).
  explicit RingElement(int n);

  static RingElement constant(int n, const Rational& value);
  static RingElement one(int n) { return constant(n, Rational(1)); }
  static RingElement x(int n) { return monomial(n, 1, 0); }
  static RingElement y(int n) { return monomial(n, 0, 1); }
  /// coeff * x^i y^j; out-of-range exponents give zero.
  static RingElement monomial(int n, int i, int j, const Rational& coeff = Rational(1));

  int n() const { return n_; }
  /// Largest x exponent kept, 2n + 2.
  int max_x() const { return 2 * n_ + 2; }

  Rational coeff(int i, int j) const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Degree if every stored monomial has the same degree; nullopt for zero or mixed.
  std::optional<int> homogeneous_degree() const;
  RingElement degree_part(int degree) const;
  /// Sum of all parts of degree <= @p degree.
  RingElement truncate_degree(int degree) const;
  /// Same coefficients viewed in the ring for @p n; terms beyond its bounds are dropped.
  RingElement rebase(int n) const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& rhs);
  RingElement& operator-=(const RingElement& rhs);
  RingElement& operator*=(const RingElement& rhs);
  RingElement& operator*=(const Rational& scalar);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  friend RingElement operator*(RingElement a, const Rational& s) { return a *= s; }
  friend RingElement operator*(const Rational& s, RingElement a) { return a *= s; }
  friend bool operator==(const RingElement&, const RingElement&) = default;

  RingElement pow(unsigned exponent) const;
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  void require_same_ring(const RingElement& other) const;

  int n_;
  std::map<Monomial, Rational> terms_;
};

class Mod2Element {
 public:
  explicit Mod2Element(int n);

  static Mod2Element one(int n) { return monomial(n, 0, 0); }
  static Mod2Element monomial(int n, int i, int j);
  /// a + b x + c y with integer coefficients reduced mod 2.
  static Mod2Element linear(int n, std::int64_t constant, std::int64_t x_coeff, std::int64_t y_coeff);

  int n() const { return n_; }
  /// Largest x exponent kept, 2n.
  int max_x() const { return 2 * n_; }

  bool contains(int i, int j) const { return terms_.contains(Monomial{i, j}); }
  const std::set<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Mod2Element degree_part(int degree) const;

  Mod2Element& operator+=(const Mod2Element& rhs);
  Mod2Element& operator*=(const Mod2Element& rhs);
  friend Mod2Element operator+(Mod2Element a, const Mod2Element& b) { return a += b; }
  friend Mod2Element operator*(Mod2Element a, const Mod2Element& b) { return a *= b; }
  friend bool operator==(const Mod2Element&, const Mod2Element&) = default;

  Mod2Element pow(unsigned exponent) const;
  std::string to_string() const;

 private:
  void toggle(const Monomial& m);

  int n_;
  std::set<Monomial> terms_;
};

/// Euler class c = l x + k y of the circle bundle.
RingElement euler_class(std::int64_t k, std::int64_t l, int n);

/// Total Pontrjagin class components p_1 .. p_{n+1} of B, from p(B) = (1 + x^2)^{2n+1}.
std::vector<RingElement> base_pontrjagin_classes(int n);

/**
 * (Q(z))^exponent with z := @p class2, where Q is the chosen even series.
 * @p class2 must be homogeneous of degree 2. The series is cut once z^{2j}
 * vanishes in the ring.
 */
RingElement apply_even_series(Series series, const RingElement& class2, unsigned exponent);

/// Coefficient of x^{2n} y, i.e. <F, [B]>.
Rational pair_fundamental(const RingElement& f);

/**
 * <(1/c) F, [B]> for c = l x + k y.
 *
 * Only the degree-(4n+4) part alpha x^{2n+2} + beta x^{2n+1} y of F enters.
 * Solves c (w1 x^{2n+1} + w2 x^{2n} y) = that part:
 *   w1 = alpha / l,  w2 = (beta - k w1) / l
 * and returns w2. Throws DomainError for l = 0, where multiplication by c
 * is not injective in this degree.
 */
Rational divide_by_euler_and_pair(const RingElement& f, std::int64_t k, std::int64_t l);

}  // namespace ksinv
