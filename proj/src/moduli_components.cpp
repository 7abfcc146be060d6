#include "ksinv/moduli_components.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ksinv/coefficients.hpp"
#include "ksinv/errors.hpp"
#include "ksinv/s_invariant.hpp"

namespace ksinv {

// ---------------------------------------------------------------------------
// LaurentPoly

Rational LaurentPoly::coeff(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational() : it->second;
}

void LaurentPoly::set_coeff(int exponent, const Rational& value) {
  if (value.is_zero()) {
    terms_.erase(exponent);
  } else {
    terms_[exponent] = value;
  }
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw DomainError("zero Laurent polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw DomainError("zero Laurent polynomial has no exponents");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::operator()(const Rational& l) const {
  Rational total;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && l.is_zero()) throw DomainError("Laurent polynomial evaluated at l = 0");
    total += c * (e >= 0 ? l.pow(static_cast<unsigned>(e)) : l.reciprocal().pow(static_cast<unsigned>(-e)));
  }
  return total;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      os << c;
    } else {
      os << (c.sign() < 0 ? " - " : " + ") << c.abs();
    }
    first = false;
    if (e == 1) {
      os << "*l";
    } else if (e != 0) {
      os << "*l^" << e;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Interpolation and the structure of s(k, l)

std::vector<Rational> interpolate_polynomial(std::span<const std::pair<Rational, Rational>> points) {
  const std::size_t count = points.size();
  if (count == 0) throw DomainError("interpolation needs at least one point");
  std::vector<Rational> dd;
  for (const auto& p : points) dd.push_back(p.second);
  for (std::size_t level = 1; level < count; ++level)
    for (std::size_t i = count - 1; i >= level; --i) {
      const Rational dx = points[i].first - points[i - level].first;
      if (dx.is_zero()) throw DomainError("interpolation abscissae must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
    }

  // Horner on the Newton form: poly = poly * (t - x_i) + dd[i].
  std::vector<Rational> poly{dd[count - 1]};
  for (std::size_t i = count - 1; i-- > 0;) {
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * points[i].first;
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  return poly;
}

std::vector<std::int64_t> laurent_sample_points(int n) {
  if (n < 1) throw DomainError("n must be positive");
  std::vector<std::int64_t> out;
  for (int i = 0; i < 2 * n + 5; ++i) out.push_back(2 * i + 1);
  return out;
}

LaurentPoly s_laurent(int n) {
  const auto samples = laurent_sample_points(n);
  const std::size_t fit_count = static_cast<std::size_t>(2 * n + 3);
  constexpr std::int64_t kBase = 2;
  constexpr std::int64_t kCheck = 4;

  const auto p_at = [n](std::int64_t k, std::int64_t l) {
    return s_value(BundleParams::make(n, k, l)) / Rational(k);
  };

  std::vector<std::pair<Rational, Rational>> points;
  for (std::size_t i = 0; i < fit_count; ++i) {
    const Rational l(samples[i]);
    points.emplace_back(l, l * l * p_at(kBase, samples[i]));
  }
  const auto coeffs = interpolate_polynomial(points);

  LaurentPoly p;
  for (std::size_t j = 0; j < coeffs.size(); ++j) p.set_coeff(static_cast<int>(j) - 2, coeffs[j]);

  for (std::size_t i = fit_count; i < samples.size(); ++i)
    if (p(Rational(samples[i])) != p_at(kBase, samples[i]))
      throw InternalConsistencyError("s_laurent: holdout mismatch at l=" + std::to_string(samples[i]));
  for (const auto l : samples)
    if (p(Rational(l)) != p_at(kCheck, l))
      throw InternalConsistencyError("s_laurent: k=4 mismatch at l=" + std::to_string(l));
  return p;
}

LeadingCoeffCheck leading_coeff_check(int n) {
  LeadingCoeffCheck out;
  out.n = n;
  out.computed = s_laurent(n).coeff(2 * n);
  out.closed_form =
      Rational(2 * n + 1) * (ahat_coeff(n + 1) + a_m(n + 1) * l_coeff(n + 1));
  // The outer minus sign of s carries over to p.
  out.match = out.computed == -out.closed_form;
  out.nonzero = !out.computed.is_zero();
  return out;
}

std::vector<std::int64_t> odd_roots(const LaurentPoly& p, std::int64_t l_max) {
  std::vector<std::int64_t> roots;
  for (std::int64_t l = 1; l <= l_max; l += 2)
    if (p(Rational(l)).is_zero()) roots.push_back(l);
  return roots;
}

std::int64_t first_nonvanishing_odd_l(const LaurentPoly& p, std::int64_t l_max) {
  for (std::int64_t l = 1; l <= l_max; l += 2)
    if (!p(Rational(l)).is_zero()) return l;
  throw DomainError("p(l) vanishes at every odd l <= " + std::to_string(l_max));
}

ComponentTable component_table(int n, std::int64_t l, std::span<const std::int64_t> k_values) {
  if (l < 1 || l % 2 == 0) throw DomainError("l must be a positive odd integer");
  std::vector<std::int64_t> ks(k_values.begin(), k_values.end());
  std::sort(ks.begin(), ks.end());
  if (std::adjacent_find(ks.begin(), ks.end()) != ks.end()) throw DomainError("k values must be distinct");

  std::vector<BundleParams> params;
  for (const auto k : ks) params.push_back(BundleParams::make(n, k, l));

  if (s_laurent(n)(Rational(l)).is_zero())
    throw DomainError("p(l) = s(k,l)/k vanishes at l=" + std::to_string(l) + " for n=" + std::to_string(n) +
                      "; |s| is zero for every k and cannot separate components");

  ComponentTable table;
  std::set<Rational> seen;
  for (const auto& bp : params) {
    const SInvariantReport r = s_invariant(bp);
    table.rows.push_back(ComponentRow{.n = n,
                                      .k = bp.k(),
                                      .l = bp.l(),
                                      .spin = r.spin,
                                      .s = r.s,
                                      .abs_s = r.s.abs(),
                                      .ek_mod1 = r.ek_mod1});
    seen.insert(r.s.abs());
  }
  table.distinct_abs_s = seen.size();
  if (table.distinct_abs_s != table.rows.size())
    throw InternalConsistencyError("component_table: |s| values repeat although p(l) != 0");
  return table;
}

// ---------------------------------------------------------------------------
// Integral cohomology of M_{k,l}

CohomologyPresentation CohomologyPresentation::make(int n, std::int64_t l) {
  if (n < 1) throw DomainError("n must be positive");
  if (l < 1) throw DomainError("l must be positive");
  CohomologyPresentation p;
  p.n_ = n;
  p.l_ = l;
  p.generators_ = {{"u", 4 * n + 1}, {"v", 2}};
  const Integer l_big(std::to_string(l));
  p.relations_ = {{l_big * l_big, 0, 2}, {Integer(1), 0, 2 * n + 1}, {Integer(1), 1, 2}, {Integer(1), 2, 0}};
  return p;
}

int CohomologyPresentation::degree_of(int u_exp, int v_exp) const {
  return u_exp * generators_[0].degree + v_exp * generators_[1].degree;
}

CohomologyPresentation::DegreeGroup CohomologyPresentation::group_in_degree(int degree) const {
  // Basis: monomials u^a v^b of the requested degree.
  std::vector<std::pair<int, int>> basis;
  for (int a = 0; degree_of(a, 0) <= degree; ++a) {
    const int rest = degree - degree_of(a, 0);
    if (rest % generators_[1].degree == 0) basis.emplace_back(a, rest / generators_[1].degree);
  }

  std::vector<std::vector<Integer>> rows;
  for (const auto& rel : relations_)
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const auto [a, b] = basis[col];
      if (a < rel.u_exp || b < rel.v_exp) continue;
      std::vector<Integer> row(basis.size(), Integer(0));
      row[col] = rel.coefficient;
      rows.push_back(std::move(row));
    }

  DegreeGroup group;
  const auto factors = rows.empty() ? std::vector<Integer>{} : smith_invariant_factors(rows);
  group.free_rank = static_cast<int>(basis.size() - factors.size());
  for (const auto& f : factors)
    if (f > 1) group.torsion.push_back(f);
  return group;
}

std::vector<Integer> smith_invariant_factors(std::vector<std::vector<Integer>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<Integer> diag;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return diag;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Integer q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Integer q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block; otherwise fold the offending row in.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c) m[t][c] += m[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

Integer homotopy_discriminator(std::int64_t l, int n) {
  const auto group = CohomologyPresentation::make(n, l).group_in_degree(4);
  Integer order(1);
  for (const auto& f : group.torsion) order *= f;
  return order;
}

}  // namespace ksinv
