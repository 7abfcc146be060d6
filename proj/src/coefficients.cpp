#include "ksinv/coefficients.hpp"

#include <string>

#include "ksinv/errors.hpp"

namespace ksinv {
namespace {

void require_positive(int j, const char* what) {
  if (j < 1) throw DomainError(std::string(what) + ": index must be >= 1, got " + std::to_string(j));
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer pow2(unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

// Modern signed Bernoulli numbers beta_0 .. beta_max.
std::vector<Rational> signed_bernoulli(int max) {
  std::vector<Rational> beta(static_cast<std::size_t>(max) + 1);
  beta[0] = Rational(1);
  for (int m = 1; m <= max; ++m) {
    Rational sum;
    for (int i = 0; i < m; ++i) sum += Rational(binomial(m + 1, i)) * beta[i];
    beta[m] = -sum / Rational(m + 1);
  }
  return beta;
}

Rational ahat_closed_form(int j, const Rational& bernoulli) {
  const Integer p = pow2(2 * j - 1);
  Rational value = Rational(p - 1, factorial(2 * j) * p) * bernoulli;
  return j % 2 == 0 ? value : -value;
}

Rational l_closed_form(int j, const Rational& bernoulli) {
  Rational value = Rational(pow2(2 * j), factorial(2 * j)) * bernoulli;
  return j % 2 == 1 ? value : -value;
}

}  // namespace

std::string_view series_name(Series series) { return series == Series::ahat ? "ahat" : "lgenus"; }

Series parse_series(std::string_view name) {
  if (name == "ahat") return Series::ahat;
  if (name == "lgenus") return Series::lgenus;
  throw DomainError("unknown series '" + std::string(name) + "' (expected ahat or lgenus)");
}

Rational bernoulli_unsigned(int j) {
  require_positive(j, "bernoulli_unsigned");
  return signed_bernoulli(2 * j).back().abs();
}

Rational ahat_coeff(int j) {
  require_positive(j, "ahat_coeff");
  return ahat_closed_form(j, bernoulli_unsigned(j));
}

Rational l_coeff(int j) {
  require_positive(j, "l_coeff");
  return l_closed_form(j, bernoulli_unsigned(j));
}

Rational series_coeff(Series series, int j) {
  if (j == 0) return Rational(1);
  return series == Series::ahat ? ahat_coeff(j) : l_coeff(j);
}

std::vector<Rational> series_coefficients(Series series, int max_j) {
  if (max_j < 0) throw DomainError("series_coefficients: negative order");
  // One recurrence pass instead of max_j independent ones.
  const auto beta = signed_bernoulli(2 * max_j);
  std::vector<Rational> out{Rational(1)};
  for (int j = 1; j <= max_j; ++j) {
    const Rational b = beta[2 * j].abs();
    out.push_back(series == Series::ahat ? ahat_closed_form(j, b) : l_closed_form(j, b));
  }
  return out;
}

Rational a_m(int m) {
  require_positive(m, "a_m");
  return Rational(Integer(1), pow2(2 * m + 1) * (pow2(2 * m - 1) - 1));
}

}  // namespace ksinv
