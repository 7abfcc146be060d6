#include "ksinv/s_invariant.hpp"

#include <numeric>
#include <string>

#include "ksinv/coefficients.hpp"
#include "ksinv/errors.hpp"

namespace ksinv {
namespace {

void require_coprime(std::int64_t k, std::int64_t l) {
  if (std::gcd(k, l) != 1) throw DomainError("k and l must be coprime");
}

}  // namespace

BundleParams BundleParams::make(int n, std::int64_t k, std::int64_t l) {
  if (n < 1) throw DomainError("n must be positive");
  if (k < 1) throw DomainError("k must be positive");
  if (l < 1) throw DomainError("l must be positive");
  if (k % 2 != 0) throw DomainError("k must be even");
  require_coprime(k, l);
  // Implied by the two checks above; kept so the invariant is explicit.
  if (l % 2 == 0) throw DomainError("l must be odd");
  return BundleParams(n, k, l);
}

Mod2Element sw_total_W(std::int64_t k, std::int64_t l, int n) {
  const auto base = Mod2Element::linear(n, 1, 1, 0).pow(2 * n + 1) * Mod2Element::linear(n, 1, 0, 1).pow(2);
  return base * Mod2Element::linear(n, 1, l, k);
}

Mod2Element sw_total_M(std::int64_t k, std::int64_t l, int n) {
  // -k = k mod 2.
  return Mod2Element::linear(n, 1, l, 0).pow(2) * Mod2Element::linear(n, 1, k, 0).pow(2 * n + 1);
}

bool is_spin(std::int64_t k, std::int64_t l, int n) {
  require_coprime(k, l);
  // Simply connected, so w_1 = 0 and spin is w_2 = 0.
  return sw_total_M(k, l, n).degree_part(2).is_zero();
}

int signature_2x2(const Rational& a, const Rational& b, const Rational& d) {
  const Rational det = a * d - b * b;
  const int trace_sign = (a + d).sign();
  if (det.sign() < 0) return 0;                // one positive, one negative eigenvalue
  if (det.sign() > 0) return 2 * trace_sign;   // definite
  return trace_sign;                           // one zero eigenvalue
}

int signature_Bc(std::int64_t k, std::int64_t l) { return signature_2x2(Rational(k), Rational(l), Rational(0)); }

BordismTerms bordism_terms(const BundleParams& params) {
  const int n = params.n();
  const auto k = params.k();
  const auto l = params.l();
  const RingElement x = RingElement::x(n);
  const RingElement y = RingElement::y(n);
  const RingElement c = euler_class(k, l, n);

  // TB splits stably into 2n+1 copies of the line with class x and two with class y.
  const RingElement ahat_tb = apply_even_series(Series::ahat, x, 2 * n + 1) * apply_even_series(Series::ahat, y, 2);
  const RingElement l_tb = apply_even_series(Series::lgenus, x, 2 * n + 1) * apply_even_series(Series::lgenus, y, 2);

  BordismTerms out;
  out.ahat_part = divide_by_euler_and_pair(ahat_tb * apply_even_series(Series::ahat, c, 1), k, l);
  out.lgenus_part = divide_by_euler_and_pair(l_tb * apply_even_series(Series::lgenus, c, 1), k, l);
  out.signature_term = signature_Bc(k, l);
  if (out.signature_term != 0)
    throw InternalConsistencyError("sign(B_c) must vanish for l != 0, got " + std::to_string(out.signature_term));

  const Rational a = a_m(n + 1);
  out.t_w = -(out.ahat_part + a * out.lgenus_part) + a * Rational(out.signature_term);
  return out;
}

Rational t_w(const BundleParams& params) { return bordism_terms(params).t_w; }

Rational s_value(const BundleParams& params) {
  const int n = params.n();
  const RingElement x = RingElement::x(n);
  const RingElement c = euler_class(params.k(), params.l(), n);
  const RingElement inner = apply_even_series(Series::ahat, x, 2 * n + 1) * apply_even_series(Series::ahat, c, 1) +
                            a_m(n + 1) * apply_even_series(Series::lgenus, x, 2 * n + 1) *
                                apply_even_series(Series::lgenus, c, 1);
  return -divide_by_euler_and_pair(inner, params.k(), params.l());
}

Rational ek_mod1(const Rational& t, bool halve) {
  const Rational value = halve ? -t / Rational(2) : -t;
  return value.fractional_part();
}

SInvariantReport s_invariant(const BundleParams& params) {
  const BordismTerms terms = bordism_terms(params);
  SInvariantReport report{.params = params,
                          .s = s_value(params),
                          .t_w = terms.t_w,
                          .ahat_part = terms.ahat_part,
                          .lgenus_part = terms.lgenus_part,
                          .signature_term = terms.signature_term,
                          .spin = is_spin(params.k(), params.l(), params.n()),
                          .ek_mod1 = ek_mod1(terms.t_w),
                          .ek_mod1_halved = ek_mod1(terms.t_w, true)};
  if (report.s != report.t_w)
    throw InternalConsistencyError("s-polynomial and t(W) disagree at n=" + std::to_string(params.n()) +
                                   " k=" + std::to_string(params.k()) + " l=" + std::to_string(params.l()));
  return report;
}

}  // namespace ksinv
