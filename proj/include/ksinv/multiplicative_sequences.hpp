#pragma once

/**
 * @file multiplicative_sequences.hpp
 * @brief Hirzebruch multiplicative sequences in abstract Pontrjagin classes.
 *
 * A weight-m polynomial in p_1, ..., p_m (p_i of weight i) is stored as a
 * sparse map from partitions of m to coefficients: the partition
 * (3, 1, 1) stands for p_3 p_1^2.
 */

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ksinv/coefficients.hpp"
#include "ksinv/errors.hpp"
#include "ksinv/rational.hpp"

namespace ksinv {

/// Parts in non-increasing order, all >= 1.
using Partition = std::vector<int>;

/// Partitions of @p m, largest first in reverse-lexicographic order.
std::vector<Partition> partitions(int m);

class SymPolynomial {
 public:
  /// Reverse-lexicographic: (2) before (1, 1).
  using Terms = std::map<Partition, Rational, std::greater<>>;

  explicit SymPolynomial(int weight);

  int weight() const { return weight_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Partition& monomial) const;

  /// Adds @p c to the coefficient of @p monomial. Throws DomainError if
  /// the partition does not have total weight equal to weight().
  void add(Partition monomial, const Rational& c);

  SymPolynomial& operator+=(const SymPolynomial& rhs);
  SymPolynomial& operator*=(const Rational& scalar);
  friend SymPolynomial operator+(SymPolynomial a, const SymPolynomial& b) { return a += b; }
  friend SymPolynomial operator*(SymPolynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const SymPolynomial&, const SymPolynomial&) = default;

  /// e.g. "7/5760*p1^2 - 1/1440*p2"; "0" for the zero polynomial.
  std::string to_string() const;

  /**
   * Substitutes p_i := values[i-1] into the polynomial. R needs +=, *=
   * with itself and multiplication by Rational. @p one is R's unit.
   */
  template <typename R>
  R evaluate(std::span<const R> values, const R& one) const {
    R total = one * Rational(0);
    for (const auto& [part, c] : terms_) {
      R term = one;
      for (int i : part) {
        if (static_cast<std::size_t>(i) > values.size())
          throw DomainError("SymPolynomial::evaluate: missing value for p" + std::to_string(i));
        term *= values[static_cast<std::size_t>(i) - 1];
      }
      total += term * c;
    }
    return total;
  }

 private:
  int weight_;
  Terms terms_;
};

/**
 * Weight-m part K_m(p_1, ..., p_m) of the multiplicative sequence for the
 * chosen series. Built by expanding prod_{i=1}^m Q(w_i) over m formal
 * roots w_i = z_i^2 and rewriting the symmetric weight-m part in the
 * elementary symmetric functions p_j = e_j(w_1, ..., w_m).
 */
SymPolynomial genus_polynomial(Series series, int m);

/// N_m = ahat_m + a_m L_m. Its p_m coefficient is exactly zero.
SymPolynomial n_polynomial(int m);

}  // namespace ksinv
