#pragma once

/**
 * @file moduli_components.hpp
 * @brief Structure of s(k, l) in (k, l) and the distinct-|s| component tables.
 *
 * For fixed n, s(k, l) = k p(l) where p is a Laurent polynomial in l with
 * exponents in [-2, 2n]. Pairwise distinct |s| over even k at a fixed l with
 * p(l) != 0 separates path components of the moduli space.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ksinv/rational.hpp"

namespace ksinv {

class LaurentPoly {
 public:
  LaurentPoly() = default;

  Rational coeff(int exponent) const;
  void set_coeff(int exponent, const Rational& value);
  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Throws DomainError on the zero polynomial.
  int min_exponent() const;
  int max_exponent() const;

  /// Evaluates at @p l; throws DomainError for l = 0 when negative exponents are present.
  Rational operator()(const Rational& l) const;

  /// e.g. "9/896*l^-2 - 3/448 - 3/896*l^2".
  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, Rational> terms_;
};

/// Coefficients c_0..c_{d} of the unique polynomial of degree <= d through
/// d + 1 points with distinct abscissae. Exact Newton divided differences.
std::vector<Rational> interpolate_polynomial(std::span<const std::pair<Rational, Rational>> points);

/// The 2n + 5 smallest positive odd integers: 2n + 3 fit points then 2 holdouts.
std::vector<std::int64_t> laurent_sample_points(int n);

/**
 * p(l) = s(k, l) / k for the given n.
 *
 * Fits l^2 s(2, l_i) / 2 at the first 2n + 3 sample points, then checks the
 * result at the two holdout points and at k = 4 over every sample point.
 * Throws InternalConsistencyError if any check fails.
 */
LaurentPoly s_laurent(int n);

struct LeadingCoeffCheck {
  int n = 0;
  /// Coefficient of l^{2n} in s_laurent(n).
  Rational computed;
  /// (2n+1) (ahat_{2n+2} + a_{n+1} b_{2n+2}); computed should be its negative.
  Rational closed_form;
  bool match = false;
  bool nonzero = false;
  bool passed() const { return match && nonzero; }
};

LeadingCoeffCheck leading_coeff_check(int n);

/// Positive odd l <= @p l_max with p(l) = 0, by direct evaluation.
std::vector<std::int64_t> odd_roots(const LaurentPoly& p, std::int64_t l_max);

/// Smallest positive odd l with p(l) != 0. Throws DomainError if none up to @p l_max.
std::int64_t first_nonvanishing_odd_l(const LaurentPoly& p, std::int64_t l_max = 1001);

struct ComponentRow {
  int n = 0;
  std::int64_t k = 0;
  std::int64_t l = 0;
  bool spin = false;
  Rational s;
  Rational abs_s;
  Rational ek_mod1;
};

struct ComponentTable {
  std::vector<ComponentRow> rows;  // sorted by (n, l, k)
  std::size_t distinct_abs_s = 0;
};

/**
 * One row per k. Every k must be a positive even integer coprime to l, with
 * no repeats. Refuses with DomainError when p(l) = 0, since |s| then cannot
 * separate anything.
 */
ComponentTable component_table(int n, std::int64_t l, std::span<const std::int64_t> k_values);

/// Z[u, v] / ((l v)^2, v^{2n+1}, u v^2, u^2) with deg u = 4n + 1, deg v = 2.
class CohomologyPresentation {
 public:
  struct Generator {
    std::string name;
    int degree;
  };
  /// coefficient * u^u_exp * v^v_exp = 0
  struct Relation {
    Integer coefficient;
    int u_exp;
    int v_exp;
  };

  static CohomologyPresentation make(int n, std::int64_t l);

  int n() const { return n_; }
  std::int64_t l() const { return l_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Relation>& relations() const { return relations_; }

  /// Cohomological degree of u^a v^b.
  int degree_of(int u_exp, int v_exp) const;

  /// Invariant factors (> 1) of the torsion in the given degree, plus free rank.
  struct DegreeGroup {
    int free_rank = 0;
    std::vector<Integer> torsion;
  };
  DegreeGroup group_in_degree(int degree) const;

 private:
  int n_ = 0;
  std::int64_t l_ = 0;
  std::vector<Generator> generators_;
  std::vector<Relation> relations_;
};

/// Diagonal of the Smith normal form of an integer matrix (nonzero entries only).
std::vector<Integer> smith_invariant_factors(std::vector<std::vector<Integer>> matrix);

/// Order of the torsion subgroup of H^4(M_{k,l}; Z), namely l^2. Independent of k and n.
Integer homotopy_discriminator(std::int64_t l, int n);

}  // namespace ksinv
