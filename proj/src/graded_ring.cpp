#include "ksinv/graded_ring.hpp"

#include <sstream>
#include <string>

#include "ksinv/errors.hpp"

namespace ksinv {
namespace {

void require_valid_n(int n) {
  if (n < 1) throw DomainError("ring parameter n must be >= 1, got " + std::to_string(n));
}

std::string monomial_string(const Monomial& m) {
  std::string s;
  if (m.x > 0) s += m.x == 1 ? "x" : "x^" + std::to_string(m.x);
  if (m.y > 0) s += s.empty() ? "y" : "*y";
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(int n) : n_(n) { require_valid_n(n); }

RingElement RingElement::constant(int n, const Rational& value) { return monomial(n, 0, 0, value); }

RingElement RingElement::monomial(int n, int i, int j, const Rational& coeff) {
  RingElement r(n);
  r.add_term(Monomial{i, j}, coeff);
  return r;
}

void RingElement::add_term(const Monomial& m, const Rational& c) {
  if (m.x < 0 || m.y < 0 || m.x > max_x() || m.y > 1 || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void RingElement::require_same_ring(const RingElement& other) const {
  if (other.n_ != n_)
    throw DomainError("ring mismatch: n=" + std::to_string(n_) + " vs n=" + std::to_string(other.n_));
}

Rational RingElement::coeff(int i, int j) const {
  const auto it = terms_.find(Monomial{i, j});
  return it == terms_.end() ? Rational() : it->second;
}

std::optional<int> RingElement::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

RingElement RingElement::degree_part(int degree) const {
  RingElement r(n_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) r.terms_.emplace(m, c);
  return r;
}

RingElement RingElement::truncate_degree(int degree) const {
  RingElement r(n_);
  for (const auto& [m, c] : terms_)
    if (m.degree() <= degree) r.terms_.emplace(m, c);
  return r;
}

RingElement RingElement::rebase(int n) const {
  RingElement r(n);
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

RingElement RingElement::operator-() const {
  RingElement r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

RingElement& RingElement::operator+=(const RingElement& rhs) {
  require_same_ring(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& rhs) {
  require_same_ring(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& rhs) {
  require_same_ring(rhs);
  RingElement product(n_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) product.add_term(Monomial{ma.x + mb.x, ma.y + mb.y}, ca * cb);
  terms_ = std::move(product.terms_);
  return *this;
}

RingElement& RingElement::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

RingElement RingElement::pow(unsigned exponent) const {
  RingElement result = one(n_);
  RingElement base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const std::string mono = monomial_string(m);
    Rational shown = c;
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      shown = c.abs();
    }
    if (mono.empty()) {
      os << shown;
    } else if (shown == Rational(1)) {
      os << mono;
    } else if (shown == Rational(-1)) {
      os << '-' << mono;
    } else {
      os << shown << '*' << mono;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Mod2Element

Mod2Element::Mod2Element(int n) : n_(n) { require_valid_n(n); }

Mod2Element Mod2Element::monomial(int n, int i, int j) {
  Mod2Element r(n);
  r.toggle(Monomial{i, j});
  return r;
}

Mod2Element Mod2Element::linear(int n, std::int64_t constant, std::int64_t x_coeff, std::int64_t y_coeff) {
  Mod2Element r(n);
  if (constant % 2 != 0) r.toggle(Monomial{0, 0});
  if (x_coeff % 2 != 0) r.toggle(Monomial{1, 0});
  if (y_coeff % 2 != 0) r.toggle(Monomial{0, 1});
  return r;
}

void Mod2Element::toggle(const Monomial& m) {
  if (m.x < 0 || m.y < 0 || m.x > max_x() || m.y > 1) return;
  if (!terms_.erase(m)) terms_.insert(m);
}

Mod2Element Mod2Element::degree_part(int degree) const {
  Mod2Element r(n_);
  for (const auto& m : terms_)
    if (m.degree() == degree) r.terms_.insert(m);
  return r;
}

Mod2Element& Mod2Element::operator+=(const Mod2Element& rhs) {
  if (rhs.n_ != n_) throw DomainError("mod-2 ring mismatch");
  for (const auto& m : rhs.terms_) toggle(m);
  return *this;
}

Mod2Element& Mod2Element::operator*=(const Mod2Element& rhs) {
  if (rhs.n_ != n_) throw DomainError("mod-2 ring mismatch");
  Mod2Element product(n_);
  for (const auto& a : terms_)
    for (const auto& b : rhs.terms_) product.toggle(Monomial{a.x + b.x, a.y + b.y});
  terms_ = std::move(product.terms_);
  return *this;
}

Mod2Element Mod2Element::pow(unsigned exponent) const {
  Mod2Element result = one(n_);
  for (unsigned i = 0; i < exponent; ++i) result *= *this;
  return result;
}

std::string Mod2Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& m : terms_) {
    if (!s.empty()) s += " + ";
    const std::string mono = monomial_string(m);
    s += mono.empty() ? "1" : mono;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Characteristic-class helpers

RingElement euler_class(std::int64_t k, std::int64_t l, int n) {
  return RingElement::monomial(n, 1, 0, Rational(l)) + RingElement::monomial(n, 0, 1, Rational(k));
}

std::vector<RingElement> base_pontrjagin_classes(int n) {
  require_valid_n(n);
  std::vector<RingElement> p;
  for (int i = 1; i <= n + 1; ++i) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), 2 * n + 1, i);
    p.push_back(RingElement::monomial(n, 2 * i, 0, Rational(binom)));
  }
  return p;
}

RingElement apply_even_series(Series series, const RingElement& class2, unsigned exponent) {
  const int n = class2.n();
  if (!class2.is_zero() && class2.homogeneous_degree() != 2)
    throw DomainError("apply_even_series: argument must be homogeneous of degree 2, got " + class2.to_string());

  // z^{2j} has degree 4j; nothing survives past degree 4n + 6.
  const int max_j = n + 2;
  const auto q = series_coefficients(series, max_j);
  const RingElement z2 = class2 * class2;

  RingElement factor = RingElement::one(n);
  RingElement power = z2;
  for (int j = 1; j <= max_j && !power.is_zero(); ++j) {
    factor += power * q[j];
    power *= z2;
  }
  return factor.pow(exponent);
}

Rational pair_fundamental(const RingElement& f) { return f.coeff(2 * f.n(), 1); }

Rational divide_by_euler_and_pair(const RingElement& f, std::int64_t k, std::int64_t l) {
  if (l == 0) throw DomainError("divide_by_euler_and_pair: l = 0, multiplication by c is not injective");
  const int n = f.n();
  const Rational alpha = f.coeff(2 * n + 2, 0);
  const Rational beta = f.coeff(2 * n + 1, 1);
  const Rational w1 = alpha / Rational(l);
  return (beta - Rational(k) * w1) / Rational(l);
}

}  // namespace ksinv
