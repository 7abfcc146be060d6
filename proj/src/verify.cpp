#include "ksinv/verify.hpp"

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "ksinv/coefficients.hpp"
#include "ksinv/errors.hpp"
#include "ksinv/graded_ring.hpp"
#include "ksinv/moduli_components.hpp"
#include "ksinv/multiplicative_sequences.hpp"
#include "ksinv/s_invariant.hpp"

namespace ksinv {
namespace {

constexpr std::uint64_t kSeed = 0x5eed'2025;

// A failed check: throw with a description; run_verification catches it.
struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

class Rng {
 public:
  Rng() : engine_(kSeed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  Rational rational() { return Rational(uniform(-1000, 1000), uniform(1, 1000)); }
  std::int64_t nonzero(std::int64_t bound) {
    std::int64_t v = 0;
    while (v == 0) v = uniform(-bound, bound);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

RingElement random_element(Rng& rng, int n) {
  RingElement r(n);
  const int count = static_cast<int>(rng.uniform(1, 6));
  for (int t = 0; t < count; ++t)
    r += RingElement::monomial(n, static_cast<int>(rng.uniform(0, 2 * n + 2)), static_cast<int>(rng.uniform(0, 1)),
                               rng.rational());
  return r;
}

std::vector<std::int64_t> even_ks_coprime_to(std::int64_t l, std::size_t count) {
  std::vector<std::int64_t> ks;
  for (std::int64_t k = 2; ks.size() < count; k += 2)
    if (std::gcd(k, l) == 1) ks.push_back(k);
  return ks;
}

// ---------------------------------------------------------------------------

void canonical_form(int) {
  Rng rng;
  for (int i = 0; i < 500; ++i) {
    const Rational a = rng.rational() * rng.rational() + rng.rational();
    expect(a.denominator() >= 1, cat("denominator not positive: ", a));
    expect(gcd(a.numerator(), a.denominator()) == 1, cat("not reduced: ", a));
    expect(!a.is_zero() || a.denominator() == 1, "zero not stored as 0/1");
  }
}

void field_laws(int) {
  Rng rng;
  for (int i = 0; i < 500; ++i) {
    const Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
    expect(a + b == b + a, "addition not commutative");
    expect(a * (b + c) == a * b + a * c, "distributivity fails");
    if (!b.is_zero()) expect((a / b) * b == a, cat("(a/b)*b != a for a=", a, " b=", b));
  }
}

void ahat_lgenus_relation(int) {
  for (int j = 1; j <= 12; ++j) {
    const Rational p(Integer(Integer(1) << (2 * j - 1)));
    const Rational ratio = (Rational(1) - p) / Rational(Integer(Integer(1) << (4 * j - 1)));
    expect(ahat_coeff(j) == ratio * l_coeff(j), cat("relation fails at j=", j));
  }
}

void bernoulli_positive(int) {
  for (int j = 1; j <= 24; ++j) expect(bernoulli_unsigned(j).sign() > 0, cat("B_", j, " not positive"));
}

void euler_division_roundtrip(int n_max) {
  Rng rng;
  for (int n = 1; n <= n_max; ++n)
    for (int i = 0; i < 1000; ++i) {
      const auto k = rng.uniform(-60, 60);
      const auto l = rng.nonzero(60);
      const Rational w1 = rng.rational(), w2 = rng.rational();
      const RingElement w = RingElement::monomial(n, 2 * n + 1, 0, w1) + RingElement::monomial(n, 2 * n, 1, w2);
      const Rational got = divide_by_euler_and_pair(euler_class(k, l, n) * w, k, l);
      expect(got == w2, cat("n=", n, " k=", k, " l=", l, ": got ", got, " expected ", w2));
    }
}

void divisibility_identity(int n_max) {
  Rng rng;
  for (int n = 1; n <= n_max; ++n)
    for (int i = 0; i < 200; ++i) {
      const auto k = rng.uniform(-100, 100);
      const auto l = rng.uniform(-100, 100);
      const RingElement x = RingElement::x(n), y = RingElement::y(n);
      const RingElement lhs = x * x * Rational(l * l);
      const RingElement rhs = euler_class(k, l, n) * (x * Rational(l) - y * Rational(k));
      expect(lhs == rhs, cat("l^2 x^2 != c (l x - k y) at n=", n, " k=", k, " l=", l));
    }
}

void injectivity(int n_max) {
  Rng rng;
  for (int n = 1; n <= n_max; ++n)
    for (int i = 0; i < 200; ++i) {
      const auto k = rng.uniform(-60, 60);
      const auto l = rng.nonzero(60);
      RingElement w = RingElement::monomial(n, 2 * n + 1, 0, rng.rational());
      if (i % 3 != 0) w += RingElement::monomial(n, 2 * n, 1, rng.rational());
      if (w.is_zero()) continue;
      expect(!(euler_class(k, l, n) * w).is_zero(), cat("c*w = 0 for nonzero w at n=", n, " l=", l));
    }
}

void truncation_consistency(int n_max) {
  Rng rng;
  for (int n = 1; n <= n_max; ++n)
    for (int i = 0; i < 200; ++i) {
      const RingElement a = random_element(rng, n), b = random_element(rng, n);
      const RingElement small = (a * b).truncate_degree(4 * n + 4);
      const RingElement large = (a.rebase(n + 2) * b.rebase(n + 2)).rebase(n).truncate_degree(4 * n + 4);
      expect(small == large, cat("truncation changes low-degree product at n=", n));
    }
}

void n_m_free_of_p_m(int) {
  for (int m = 1; m <= 5; ++m)
    expect(n_polynomial(m).coeff(Partition{m}).is_zero(), cat("N_", m, " involves p_", m));
}

void multiplicativity(int) {
  // Degree <= 2 in each of four variables: agreement on {0,1,2}^4 is an identity.
  const auto k1 = genus_polynomial(Series::ahat, 1), k2 = genus_polynomial(Series::ahat, 2);
  const auto l1 = genus_polynomial(Series::lgenus, 1), l2 = genus_polynomial(Series::lgenus, 2);
  const auto eval = [](const SymPolynomial& poly, const std::vector<Rational>& p) {
    return poly.evaluate<Rational>(p, Rational(1));
  };
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          const std::vector<Rational> p{Rational(a), Rational(b)}, q{Rational(c), Rational(d)};
          const std::vector<Rational> sum{p[0] + q[0], p[1] + p[0] * q[0] + q[1]};
          for (const auto& [first, second] : {std::pair{&k1, &k2}, std::pair{&l1, &l2}}) {
            expect(eval(*first, sum) == eval(*first, p) + eval(*first, q), "weight 1 not additive");
            expect(eval(*second, sum) == eval(*second, p) + eval(*first, p) * eval(*first, q) + eval(*second, q),
                   "weight 2 not multiplicative");
          }
        }
}

void ring_consistency(int n_max) {
  for (int n = 1; n <= std::min(n_max, 3); ++n) {
    const auto p = base_pontrjagin_classes(n);
    const RingElement one = RingElement::one(n);
    for (const Series series : {Series::ahat, Series::lgenus}) {
      const RingElement full = apply_even_series(series, RingElement::x(n), 2 * n + 1);
      for (int j = 1; j <= n + 1; ++j) {
        const RingElement via_sequence = genus_polynomial(series, j).evaluate<RingElement>(p, one);
        expect(via_sequence == full.degree_part(4 * j),
               cat(series_name(series), " sequence disagrees with series at n=", n, " j=", j));
      }
    }
  }
}

void route_agreement(int n_max) {
  for (int n = 1; n <= n_max; ++n)
    for (std::int64_t l = 1; l <= 9; l += 2)
      for (std::int64_t k = 2; k <= 20; k += 2) {
        if (std::gcd(k, l) != 1) continue;
        const auto bp = BundleParams::make(n, k, l);
        expect(s_value(bp) == t_w(bp), cat("s != t(W) at n=", n, " k=", k, " l=", l));
      }
}

void k_linearity(int n_max) {
  for (int n = 1; n <= n_max; ++n)
    for (std::int64_t l = 1; l <= 9; l += 2) {
      const auto ks = even_ks_coprime_to(l, 8);
      std::vector<Rational> s;
      for (const auto k : ks) s.push_back(s_value(BundleParams::make(n, k, l)));
      for (std::size_t i = 0; i < ks.size(); ++i)
        for (std::size_t j = 0; j < ks.size(); ++j)
          expect(s[i] * Rational(ks[j]) == s[j] * Rational(ks[i]),
                 cat("s not linear in k at n=", n, " l=", l, " k=", ks[i], ",", ks[j]));
    }
}

void spin_parity(int n_max) {
  for (int n = 1; n <= n_max; ++n)
    for (std::int64_t k = 1; k <= 50; ++k)
      for (std::int64_t l = 1; l <= 50; ++l) {
        if (std::gcd(k, l) != 1) continue;
        expect(is_spin(k, l, n) == (k % 2 == 0), cat("spin parity fails at n=", n, " k=", k, " l=", l));
      }
}

void signature_vanishes(int) {
  for (std::int64_t k = -20; k <= 20; ++k)
    for (std::int64_t l = -20; l <= 20; ++l)
      if (l != 0) expect(signature_Bc(k, l) == 0, cat("sign(B_c) != 0 at k=", k, " l=", l));
}

void ek_mod1_range(int) {
  Rng rng;
  for (int i = 0; i < 500; ++i) {
    const Rational t = rng.rational() * Rational(rng.uniform(1, 50));
    const Rational shift(rng.uniform(-1000, 1000));
    for (const bool halve : {false, true}) {
      const Rational e = ek_mod1(t, halve);
      expect(e >= Rational(0) && e < Rational(1), cat("ek_mod1 out of range for t=", t));
    }
    expect(ek_mod1(t + shift) == ek_mod1(t), cat("ek_mod1 not integer-periodic at t=", t));
    expect(ek_mod1(t + shift * Rational(2), true) == ek_mod1(t, true), "halved ek_mod1 not 2-periodic");
  }
}

void interpolation_soundness(int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    const LaurentPoly p = s_laurent(n);
    for (std::int64_t l = 1; l <= 11; l += 2)
      for (const std::int64_t k : {2, 4})
        expect(p(Rational(l)) == s_value(BundleParams::make(n, k, l)) / Rational(k),
               cat("p(l) != s(k,l)/k at n=", n, " k=", k, " l=", l));
  }
}

void degree_window(int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    const LaurentPoly p = s_laurent(n);
    expect(p.min_exponent() >= -2 && p.max_exponent() <= 2 * n, cat("exponents outside [-2, 2n] at n=", n));
    const auto check = leading_coeff_check(n);
    expect(check.passed(), cat("leading coefficient check fails at n=", n, ": ", check.computed, " vs ",
                               check.closed_form));
  }
}

std::string distinctness(int n_max) {
  std::ostringstream note;
  for (int n = 1; n <= n_max; ++n) {
    const LaurentPoly p = s_laurent(n);
    const auto l0 = first_nonvanishing_odd_l(p);
    const auto ks = even_ks_coprime_to(l0, 100);
    std::set<Rational> seen;
    for (const auto k : ks) seen.insert(s_value(BundleParams::make(n, k, l0)).abs());
    expect(seen.size() == ks.size(), cat("|s| repeats at n=", n, " l=", l0));
    note << (n > 1 ? "; " : "") << "n=" << n << ": l0=" << l0 << " p(1)=" << p(Rational(1));
  }
  return note.str();
}

void discriminator_monotone(int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    Integer previous(0);
    for (std::int64_t l = 1; l <= 25; ++l) {
      const Integer d = homotopy_discriminator(l, n);
      expect(d > previous, cat("discriminator not increasing at l=", l));
      expect(d == homotopy_discriminator(l, 1), cat("discriminator depends on n at l=", l));
      previous = d;
    }
  }
}

}  // namespace

std::vector<PropertyResult> run_verification(int n_max, const std::function<void(const PropertyResult&)>& on_result) {
  if (n_max < 1) throw DomainError("n-max must be positive");

  struct Property {
    const char* name;
    std::function<std::string(int)> run;
  };
  const auto plain = [](void (*fn)(int)) {
    return [fn](int n) {
      fn(n);
      return std::string();
    };
  };
  const std::vector<Property> properties = {
      {"exact_arith.canonical_form", plain(canonical_form)},
      {"exact_arith.field_laws", plain(field_laws)},
      {"exact_arith.ahat_lgenus_relation", plain(ahat_lgenus_relation)},
      {"exact_arith.bernoulli_positive", plain(bernoulli_positive)},
      {"graded_ring.euler_division_roundtrip", plain(euler_division_roundtrip)},
      {"graded_ring.divisibility_identity", plain(divisibility_identity)},
      {"graded_ring.injectivity", plain(injectivity)},
      {"graded_ring.truncation_consistency", plain(truncation_consistency)},
      {"multiplicative_sequences.n_m_free_of_p_m", plain(n_m_free_of_p_m)},
      {"multiplicative_sequences.multiplicativity", plain(multiplicativity)},
      {"multiplicative_sequences.ring_consistency", plain(ring_consistency)},
      {"s_invariant.route_agreement", plain(route_agreement)},
      {"s_invariant.k_linearity", plain(k_linearity)},
      {"s_invariant.spin_parity", plain(spin_parity)},
      {"s_invariant.signature_vanishes", plain(signature_vanishes)},
      {"s_invariant.ek_mod1_range", plain(ek_mod1_range)},
      {"moduli_components.interpolation_soundness", plain(interpolation_soundness)},
      {"moduli_components.degree_window", plain(degree_window)},
      {"moduli_components.distinctness", distinctness},
      {"moduli_components.discriminator_monotone", plain(discriminator_monotone)},
  };

  std::vector<PropertyResult> results;
  for (const auto& prop : properties) {
    PropertyResult r{.name = prop.name, .passed = false, .detail = {}};
    try {
      r.detail = prop.run(n_max);
      r.passed = true;
    } catch (const Failure& f) {
      r.detail = f.what;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace ksinv
