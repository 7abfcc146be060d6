// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ksinv/coefficients.hpp"
#include "ksinv/graded_ring.hpp"
#include "ksinv/moduli_components.hpp"
#include "ksinv/multiplicative_sequences.hpp"
#include "ksinv/s_invariant.hpp"
#include "oracle/dense_oracle.hpp"

using namespace ksinv;

namespace {

constexpr std::uint64_t kSeed = 20251015;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (passed) detail.str("");
    passed = false;
    detail << why << "; ";
  }
  void note(const std::string& s) {
    if (passed) detail << s << "; ";
  }
};

struct Criterion {
  std::string id;
  std::string name;
  double time_limit_s;
  std::function<void(Outcome&)> body;
};

std::string str(const Rational& r) { return r.to_string(); }

void bernoulli_values(Outcome& o) {
  const Rational expected[] = {Rational(1, 6), Rational(1, 30), Rational(1, 42), Rational(1, 30), Rational(5, 66)};
  for (int j = 1; j <= 5; ++j)
    if (bernoulli_unsigned(j) != expected[j - 1])
      o.fail("B_" + std::to_string(j) + " = " + str(bernoulli_unsigned(j)));
  o.note("B_1..B_5 = 1/6, 1/30, 1/42, 1/30, 5/66");
}

void series_relation(Outcome& o) {
  for (int j = 1; j <= 12; ++j) {
    const Rational p2 = Rational(Integer(Integer(1) << (2 * j - 1)));
    const Rational p4 = Rational(Integer(Integer(1) << (4 * j - 1)));
    const Rational rhs = (Rational(1) - p2) / p4 * l_coeff(j);
    if (ahat_coeff(j) != rhs) o.fail("j=" + std::to_string(j) + ": " + str(ahat_coeff(j)) + " != " + str(rhs));
  }
  o.note("j = 1..12 exact");
}

void n_m_property(Outcome& o) {
  for (int m = 1; m <= 5; ++m) {
    const auto nm = n_polynomial(m);
    if (!nm.coeff({m}).is_zero()) o.fail("p_" + std::to_string(m) + " coefficient of N_" + std::to_string(m) + " is " + str(nm.coeff({m})));
  }
  if (!n_polynomial(1).is_zero()) o.fail("N_1 = " + n_polynomial(1).to_string());
  SymPolynomial n2(2);
  n2.add({1, 1}, Rational(1, 896));
  if (n_polynomial(2) != n2) o.fail("N_2 = " + n_polynomial(2).to_string());
  o.note("m = 1..5 p_m-free, N_1 = 0, N_2 = " + n_polynomial(2).to_string());
}

void route_agreement(Outcome& o) {
  int points = 0;
  for (int n = 1; n <= 3; ++n)
    for (std::int64_t l = 1; l <= 9; l += 2)
      for (std::int64_t k = 2; k <= 20; k += 2) {
        if (std::gcd(k, l) != 1) continue;
        const auto p = BundleParams::make(n, k, l);
        const Rational s = s_value(p), t = t_w(p);
        if (s != t) o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(l));
        ++points;
      }
  o.note(std::to_string(points) + " grid points exact");
}

void laurent_structure(Outcome& o) {
  for (int n = 1; n <= 3; ++n) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    const auto p = s_laurent(n);
    if (p.min_exponent() < -2 || p.max_exponent() > 2 * n)
      o.fail(tag + "exponents [" + std::to_string(p.min_exponent()) + ", " + std::to_string(p.max_exponent()) + "]");
    const auto samples = laurent_sample_points(n);
    const std::int64_t fresh[] = {samples.back() + 2, samples.back() + 4};
    for (std::int64_t l : fresh)
      for (std::int64_t k : {std::int64_t{2}, std::int64_t{6}}) {
        if (std::gcd(k, l) != 1) continue;
        const Rational want = s_value(BundleParams::make(n, k, l)) / Rational(k);
        if (p(Rational(l)) != want) o.fail(tag + "holdout l=" + std::to_string(l) + " k=" + std::to_string(k));
      }
    const auto lead = leading_coeff_check(n);
    if (!(lead.computed == lead.closed_form || lead.computed == -lead.closed_form))
      o.fail(tag + "leading " + str(lead.computed) + " vs closed form " + str(lead.closed_form));
    if (lead.computed.is_zero()) o.fail(tag + "leading coefficient is zero");
    if (n == 1 && lead.computed.abs() != Rational(3, 896)) o.fail(tag + "|leading| = " + str(lead.computed.abs()));
  }
  o.note("exponents within [-2, 2n], holdouts exact, n=1 |leading| = 3/896");
}

// Distinctness of |s(k, l)| for k = the given even values at fixed l.
void distinct_at(Outcome& o, int n, std::int64_t l, const std::vector<std::int64_t>& ks) {
  const std::string tag = "n=" + std::to_string(n) + " l=" + std::to_string(l) + ": ";
  const Rational pl = s_laurent(n)(Rational(l));
  if (pl.is_zero()) o.fail(tag + "p(" + std::to_string(l) + ") = 0");
  std::vector<Rational> s;
  std::set<Rational> abs_values;
  for (std::int64_t k : ks) {
    s.push_back(s_value(BundleParams::make(n, k, l)));
    abs_values.insert(s.back().abs());
  }
  if (abs_values.size() != ks.size())
    o.fail(tag + std::to_string(abs_values.size()) + " distinct |s| among " + std::to_string(ks.size()));
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = i + 1; j < ks.size(); ++j)
      if (s[i] * Rational(ks[j]) != s[j] * Rational(ks[i]))
        o.fail(tag + "ratio fails for k=" + std::to_string(ks[i]) + ", " + std::to_string(ks[j]));
}

void theorem_l1(Outcome& o) {
  std::vector<std::int64_t> ks;
  for (std::int64_t k = 2; k <= 200; k += 2) ks.push_back(k);
  for (int n = 1; n <= 3; ++n) distinct_at(o, n, 1, ks);
  o.note("100 distinct |s(k,1)| for n = 1..3");
}

// Same statement at the first odd l where p does not vanish, with k running
// over the first 100 even values coprime to it.
void theorem_first_nonvanishing(Outcome& o) {
  for (int n = 1; n <= 3; ++n) {
    const std::int64_t l0 = first_nonvanishing_odd_l(s_laurent(n));
    std::vector<std::int64_t> ks;
    for (std::int64_t k = 2; ks.size() < 100; k += 2)
      if (std::gcd(k, l0) == 1) ks.push_back(k);
    distinct_at(o, n, l0, ks);
    o.note("n=" + std::to_string(n) + " l0=" + std::to_string(l0) + " p(l0)=" + str(s_laurent(n)(Rational(l0))) +
           " k=2.." + std::to_string(ks.back()));
  }
}

void spin_classification(Outcome& o) {
  int pairs = 0;
  for (int n = 1; n <= 3; ++n)
    for (std::int64_t k = 1; k <= 50; ++k)
      for (std::int64_t l = 1; l <= 50; ++l) {
        if (std::gcd(k, l) != 1) continue;
        const bool w2_zero = sw_total_M(k, l, n).degree_part(2).is_zero();
        const bool parity = k % 2 == 0;
        if (w2_zero != parity || is_spin(k, l, n) != parity)
          o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(l));
        ++pairs;
      }
  o.note(std::to_string(pairs) + " coprime pairs via total Stiefel-Whitney class");
}

void euler_division(Outcome& o) {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::int64_t> kd(-60, 60), ld(1, 60), num(-1000, 1000), den(1, 500);
  auto random_rational = [&] { return Rational(num(rng), den(rng)); };
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 1000; ++i) {
      const std::int64_t k = kd(rng), l = ld(rng) * (i % 2 ? -1 : 1);
      const Rational w1 = random_rational(), w2 = random_rational();
      const RingElement w = RingElement::monomial(n, 2 * n + 1, 0, w1) + RingElement::monomial(n, 2 * n, 1, w2);
      if (pair_fundamental(w) != w2) o.fail("pairing of w");
      if (divide_by_euler_and_pair(euler_class(k, l, n) * w, k, l) != w2)
        o.fail("round trip n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(l));
    }
    for (int i = 0; i < 200; ++i) {
      const std::int64_t k = kd(rng), l = kd(rng);
      const RingElement x = RingElement::x(n), y = RingElement::y(n);
      if (x * x * Rational(l * l) != euler_class(k, l, n) * (x * Rational(l) - y * Rational(k)))
        o.fail("l^2 x^2 != c (l x - k y) at k=" + std::to_string(k) + " l=" + std::to_string(l));
    }
  }
  o.note("1000 round trips per n = 1..3, identity on 200 random (k, l) per n");
}

void oracle_equivalence(Outcome& o) {
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_int_distribution<std::int64_t> kd(1, 50), ld(0, 20);
  std::uniform_int_distribution<int> nd(1, 2);
  int checked = 0;
  while (checked < 20) {
    const int n = nd(rng);
    const std::int64_t k = 2 * kd(rng), l = 2 * ld(rng) + 1;
    if (std::gcd(k, l) != 1) continue;
    const Rational ours = s_value(BundleParams::make(n, k, l));
    const mpq_class theirs = oracle::s_invariant(n, k, l);
    if (ours.raw() != theirs)
      o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(l) + ": " + str(ours) +
             " vs " + theirs.get_str());
    ++checked;
  }
  o.note("20 random points agree");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1", "bernoulli_values", 1.0, bernoulli_values},
      {"2", "series_relation", 1.0, series_relation},
      {"3", "n_m_property", 5.0, n_m_property},
      {"4", "route_agreement", 30.0, route_agreement},
      {"5", "laurent_structure", 30.0, laurent_structure},
      {"6", "distinct_components_l1", 60.0, theorem_l1},
      {"7", "spin_classification", 10.0, spin_classification},
      {"8", "euler_division", 10.0, euler_division},
      {"9", "oracle_equivalence", 30.0, oracle_equivalence},
  };
  const Criterion supplementary{"6b", "distinct_components_first_nonvanishing_l", 60.0, theorem_first_nonvanishing};

  int failures = 0;
  auto run = [&](const Criterion& c, bool counts) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.time_limit_s) {
      std::ostringstream m;
      m << "took " << secs << " s, limit " << c.time_limit_s << " s";
      o.fail(m.str());
    }
    std::string detail = o.detail.str();
    if (detail.size() >= 2) detail.resize(detail.size() - 2);
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << (o.passed ? "PASS " : "FAIL ") << c.id << ' ' << c.name << " [" << timing << "] " << detail
              << (counts ? "" : " (supplementary)") << '\n';
    if (counts && !o.passed) ++failures;
  };
  for (const auto& c : criteria) run(c, true);
  run(supplementary, false);
  std::cout << "acceptance: " << criteria.size() - failures << " of " << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
