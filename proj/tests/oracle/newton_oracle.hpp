#pragma once

// Test-only route to multiplicative sequences through generating functions:
//   prod_i Q(w_i) = exp(sum_j r_j s_j),   log Q(w) = sum_j r_j w^j,
// with power sums s_j rewritten in p_i = e_i by Newton's identities.
// Polynomials in p_1..p_m are maps from exponent vectors to mpq_class.

#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using PPoly = std::map<std::vector<int>, mpq_class>;

inline int weight(const std::vector<int>& e) {
  int w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<int>(i + 1) * e[i];
  return w;
}

inline PPoly pmul(const PPoly& a, const PPoly& b, int max_weight) {
  PPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      if (weight(e) <= max_weight) r[e] += ca * cb;
    }
  return r;
}

inline void padd(PPoly& a, const PPoly& b, const mpq_class& s) {
  for (const auto& [e, c] : b) a[e] += s * c;
}

inline PPoly prune(PPoly a) {
  for (auto it = a.begin(); it != a.end();) it = it->second == 0 ? a.erase(it) : std::next(it);
  return a;
}

// Weight-m part of the multiplicative sequence for the even series with
// coefficients q[0] = 1, q[1], ... in w = z^2. Result keyed by exponents of p_1..p_m.
inline PPoly newton_genus(const std::vector<mpq_class>& q, int m) {
  // log Q(w) = sum_j r_j w^j via r_j = q_j - (1/j) sum_{i<j} i r_i q_{j-i}.
  std::vector<mpq_class> r(m + 1);
  for (int j = 1; j <= m; ++j) {
    mpq_class acc = 0;
    for (int i = 1; i < j; ++i) acc += mpq_class(i) * r[i] * q[j - i];
    r[j] = q[j] - acc / mpq_class(j);
  }

  const std::vector<int> zero(m, 0);
  auto p_var = [&](int i) {
    std::vector<int> e(m, 0);
    e[i - 1] = 1;
    return PPoly{{e, 1}};
  };
  // s_j = sum_{i=1}^{j-1} (-1)^{i-1} p_i s_{j-i} + (-1)^{j-1} j p_j
  std::vector<PPoly> s(m + 1);
  for (int j = 1; j <= m; ++j) {
    PPoly sj;
    for (int i = 1; i < j; ++i) padd(sj, pmul(p_var(i), s[j - i], m), (i % 2 == 1) ? 1 : -1);
    padd(sj, p_var(j), mpq_class((j % 2 == 1) ? j : -j));
    s[j] = prune(sj);
  }

  PPoly exponent;
  for (int j = 1; j <= m; ++j) padd(exponent, s[j], r[j]);

  // exp(exponent) truncated at weight m; exponent has no constant term.
  PPoly result{{zero, 1}}, term{{zero, 1}};
  for (int i = 1; i <= m; ++i) {
    PPoly next;
    padd(next, pmul(term, exponent, m), mpq_class(1) / mpq_class(i));
    term = prune(next);
    padd(result, term, 1);
  }
  PPoly top;
  for (const auto& [e, c] : prune(result))
    if (weight(e) == m) top[e] = c;
  return top;
}

}  // namespace oracle
