#pragma once

#include <string_view>
#include <vector>

#include "ksinv/rational.hpp"

namespace ksinv {

/// The two even characteristic power series used throughout.
///   ahat:   (t/2) / sinh(t/2) = 1 + sum_j ahat_{2j} t^{2j}
///   lgenus: t / tanh(t)       = 1 + sum_j b_{2j}    t^{2j}
enum class Series { ahat, lgenus };

std::string_view series_name(Series series);
/// Accepts "ahat" and "lgenus"; throws DomainError otherwise.
Series parse_series(std::string_view name);

/**
 * Classical unsigned Bernoulli numbers: B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, ...
 *
 * In terms of the modern signed sequence (beta_0 = 1, beta_1 = -1/2,
 * beta_2 = 1/6, beta_4 = -1/30, ...) this is B_j = |beta_{2j}|. The modern
 * values come from the recurrence sum_{i=0}^{m} C(m+1, i) beta_i = 0.
 * Requires j >= 1.
 */
Rational bernoulli_unsigned(int j);

/// ahat_{2j} = (-1)^j (2^{2j-1} - 1) / ((2j)! 2^{2j-1}) * B_j.  j >= 1.
Rational ahat_coeff(int j);

/// b_{2j} = (-1)^{j-1} 2^{2j} / (2j)! * B_j.  j >= 1.
Rational l_coeff(int j);

/// Coefficient of t^{2j} in the chosen series; j = 0 gives 1.
Rational series_coeff(Series series, int j);

/// [q_0, q_1, ..., q_max_j] with q_0 = 1.
std::vector<Rational> series_coefficients(Series series, int max_j);

/// a_m = 1 / (2^{2m+1} (2^{2m-1} - 1)), the weight making ahat + a_m L free of p_m.
Rational a_m(int m);

}  // namespace ksinv
