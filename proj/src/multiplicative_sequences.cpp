#include "ksinv/multiplicative_sequences.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ksinv {
namespace {

void require_weight(int m) {
  if (m < 1) throw DomainError("multiplicative sequence weight must be >= 1, got " + std::to_string(m));
}

// Explicit polynomial in the formal roots w_1..w_m, keyed by exponent vector.
// Lexicographically largest key first.
using Exponents = std::vector<int>;
using RootPoly = std::map<Exponents, Rational, std::greater<>>;

void accumulate(RootPoly& p, const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

RootPoly multiply(const RootPoly& a, const RootPoly& b, int max_degree) {
  RootPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      if (total_degree(e) <= max_degree) accumulate(out, e, ca * cb);
    }
  return out;
}

// e_j(w_1..w_m) as an explicit polynomial.
RootPoly elementary(int j, int m) {
  RootPoly out;
  std::vector<bool> pick(static_cast<std::size_t>(m), false);
  std::fill(pick.begin(), pick.begin() + j, true);
  do {
    Exponents e(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) e[i] = pick[i] ? 1 : 0;
    accumulate(out, e, Rational(1));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Weight-m part of prod_{i=1}^m Q(w_i).
RootPoly formal_root_expansion(Series series, int m) {
  const auto q = series_coefficients(series, m);
  RootPoly product{{Exponents(static_cast<std::size_t>(m), 0), Rational(1)}};
  for (int i = 0; i < m; ++i) {
    RootPoly factor;
    for (int j = 0; j <= m; ++j) {
      Exponents e(static_cast<std::size_t>(m), 0);
      e[i] = j;
      accumulate(factor, e, q[j]);
    }
    product = multiply(product, factor, m);
  }
  RootPoly top;
  for (const auto& [e, c] : product)
    if (total_degree(e) == m) top.emplace(e, c);
  return top;
}

// Rewrites a symmetric homogeneous polynomial in the e_j by repeatedly
// cancelling the leading monomial w^a against prod_j e_j^{a_j - a_{j+1}}.
SymPolynomial to_elementary(RootPoly poly, int m) {
  std::vector<RootPoly> e;
  for (int j = 1; j <= m; ++j) e.push_back(elementary(j, m));

  SymPolynomial out(m);
  while (!poly.empty()) {
    const Exponents lead = poly.begin()->first;
    const Rational c = poly.begin()->second;
    Partition part;
    RootPoly product{{Exponents(static_cast<std::size_t>(m), 0), Rational(1)}};
    for (int j = m; j >= 1; --j) {
      const int next = j < m ? lead[j] : 0;
      const int mult = lead[j - 1] - next;
      if (mult < 0) throw InternalConsistencyError("formal-root expansion is not symmetric");
      for (int r = 0; r < mult; ++r) {
        part.push_back(j);
        product = multiply(product, e[j - 1], m);
      }
    }
    out.add(part, c);
    for (const auto& [exp, pc] : product) accumulate(poly, exp, -c * pc);
  }
  return out;
}

}  // namespace

std::vector<Partition> partitions(int m) {
  std::vector<Partition> out;
  Partition current;
  const std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  if (m >= 1) rec(m, m);
  return out;
}

SymPolynomial::SymPolynomial(int weight) : weight_(weight) { require_weight(weight); }

Rational SymPolynomial::coeff(const Partition& monomial) const {
  const auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational() : it->second;
}

void SymPolynomial::add(Partition monomial, const Rational& c) {
  std::sort(monomial.begin(), monomial.end(), std::greater<>());
  if (!monomial.empty() && monomial.back() < 1) throw DomainError("Pontrjagin index must be >= 1");
  if (std::accumulate(monomial.begin(), monomial.end(), 0) != weight_)
    throw DomainError("monomial weight does not match polynomial weight " + std::to_string(weight_));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(monomial), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SymPolynomial& SymPolynomial::operator+=(const SymPolynomial& rhs) {
  if (rhs.weight_ != weight_) throw DomainError("adding SymPolynomials of different weight");
  for (const auto& [part, c] : rhs.terms_) add(part, c);
  return *this;
}

SymPolynomial& SymPolynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) terms_.clear();
  for (auto& [part, c] : terms_) c *= scalar;
  return *this;
}

std::string SymPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [part, c] : terms_) {
    if (first) {
      os << c;
    } else {
      os << (c.sign() < 0 ? " - " : " + ") << c.abs();
    }
    first = false;
    // Group equal parts into powers: (2,1,1) -> p2*p1^2.
    for (std::size_t i = 0; i < part.size();) {
      std::size_t j = i;
      while (j < part.size() && part[j] == part[i]) ++j;
      os << "*p" << part[i];
      if (j - i > 1) os << '^' << (j - i);
      i = j;
    }
  }
  return os.str();
}

SymPolynomial genus_polynomial(Series series, int m) {
  require_weight(m);
  return to_elementary(formal_root_expansion(series, m), m);
}

SymPolynomial n_polynomial(int m) {
  return genus_polynomial(Series::ahat, m) + genus_polynomial(Series::lgenus, m) * a_m(m);
}

}  // namespace ksinv
