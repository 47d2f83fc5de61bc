#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../support/random_inputs.hpp"
#include "hpd/errors.hpp"
#include "hpd/hankel.hpp"

using namespace hpd;
using hpd::testing::Rng;

namespace {

TrigPoly geometric_symbol(double x, int terms) {
  std::vector<Complex> c(static_cast<std::size_t>(terms));
  for (int m = 1; m <= terms; ++m) c[static_cast<std::size_t>(terms - m)] = std::pow(x, m);
  return TrigPoly(-terms, std::move(c));
}

}  // namespace

TEST_SUITE("hankel") {
  TEST_CASE("Hankel product keeps the non-positive frequencies") {
    CHECK(hankel_apply(TrigPoly::monomial(-2), TrigPoly::monomial(1)) == TrigPoly::monomial(-1));
    CHECK(hankel_apply(TrigPoly::monomial(-1), TrigPoly::monomial(2)).is_zero());

    Rng rng(51);
    for (int trial = 0; trial < 10; ++trial) {
      const TrigPoly phi = hpd::testing::random_analytic(rng, -6, 3);
      const TrigPoly f = hpd::testing::random_analytic(rng, 1, 4);
      const TrigPoly h = hankel_apply(phi, f);
      for (int n = -12; n <= 8; ++n) {
        Complex expected = 0.0;
        if (n <= 0)
          for (int k = 1; k <= 4; ++k) expected += phi.coeff(n - k) * f.coeff(k);
        CHECK(std::abs(h.coeff(n) - expected) < 1e-14);
      }
    }
  }

  TEST_CASE("e^{i theta} saturates the two-weight bound at a point mass") {
    HankelOptions opts;
    opts.grid = 8192;
    opts.symbol_truncation = 128;
    for (double r : {0.3, 1 / std::sqrt(2.0), 0.9}) {
      const auto rep = two_weight_check(SpectralMeasure::atom(0.0), r, TrigPoly::monomial(1), opts);
      CHECK(rep.holds);
      CHECK(std::abs(rep.slack) < 1e-6);
      CHECK(rep.bound == doctest::Approx(r / std::sqrt(1 - r * r)));
      CHECK(rep.certification == "grid");
    }
    CHECK_THROWS_AS(two_weight_check(SpectralMeasure::atom(0.0), 0.5, TrigPoly::constant(1.0)), InputError);
    CHECK_THROWS_AS(two_weight_check(SpectralMeasure::atom(0.0), 0.5, TrigPoly::monomial(-1)), InputError);
  }

  TEST_CASE("inequalities hold on random inputs") {
    Rng rng(52);
    HankelOptions opts;
    opts.grid = 1024;
    for (int trial = 0; trial < 15; ++trial) {
      const auto mu = hpd::testing::random_measure(rng, false);
      const TrigPoly f = hpd::testing::random_analytic(rng, 1, 4);
      const auto tw = two_weight_check(mu, rng.uniform(0.1, 0.9), f, opts);
      CHECK(tw.holds);
      const int n = rng.integer(1, 4);
      const auto en = en_inequality_check(mu, hpd::testing::random_analytic(rng, 0, n - 1), f, n, opts);
      CHECK(en.holds);
      const auto sm = smoothed_inequality_check(mu, f, opts);
      CHECK(sm.holds);
    }
  }

  TEST_CASE("E_N input contract") {
    const auto mu = SpectralMeasure::lebesgue();
    CHECK_THROWS_AS(en_inequality_check(mu, TrigPoly::monomial(3), TrigPoly::monomial(1), 3), InputError);
    CHECK_THROWS_AS(en_inequality_check(mu, TrigPoly{}, TrigPoly::monomial(1), 3), InputError);
    const auto zero = en_inequality_check(mu, TrigPoly::monomial(0), TrigPoly{}, 2);
    CHECK(zero.sup_ratio == 0.0);
    CHECK(zero.holds);
  }

  TEST_CASE("H^2 -> L^inf norm of the geometric symbol") {
    // At theta = 0: 1 + sum_{n>=1} (2^{1-n})^2 = 7/3.
    CHECK(h2_linf_norm(geometric_symbol(0.5, 80), 80) == doctest::Approx(std::sqrt(7.0 / 3.0)).epsilon(1e-12));
  }

  TEST_CASE("boundedness verdicts") {
    const auto geo = boundedness_conditions(geometric_symbol(0.5, 4096), true);
    CHECK(geo.verdict == TriState::bounded);
    CHECK(geo.positive_coefficients);
    REQUIRE(geo.positive_test.has_value());
    CHECK(geo.positive_test->value == doctest::Approx(7.0 / 3.0));

    std::vector<Complex> harmonic(4096);
    for (int m = 1; m <= 4096; ++m) harmonic[static_cast<std::size_t>(4096 - m)] = 1.0 / m;
    const auto har = boundedness_conditions(TrigPoly(-4096, harmonic), true);
    CHECK(har.verdict == TriState::unbounded);
    CHECK(har.basis == "positive-coefficients");
    CHECK(har.positive_test->trend == Trend::diverging);

    const auto finite = boundedness_conditions(TrigPoly(-3, {1.0, Complex(0, 1), -2.0}), false);
    CHECK(finite.verdict == TriState::bounded);
    CHECK(finite.basis == "finite");
    CHECK_FALSE(finite.positive_coefficients);
  }

  TEST_CASE("Hilbert-type pairing") {
    Rng rng(53);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> a(static_cast<std::size_t>(rng.integer(1, 40))), b(static_cast<std::size_t>(rng.integer(1, 40)));
      for (auto& x : a) x = rng.uniform();
      for (auto& x : b) x = rng.uniform();
      double direct = 0.0;
      for (std::size_t m = 0; m < a.size(); ++m)
        for (std::size_t n = 0; n < b.size(); ++n) direct += a[m] * b[n] / static_cast<double>(std::max(m, n) + 1);
      const auto p = hlp_pairing(a, b);
      CHECK(p.pairing == doctest::Approx(direct).epsilon(1e-12));
      CHECK(p.holds);
    }
    CHECK_THROWS_AS(hlp_pairing({1.0, -1.0}, {1.0}), InputError);
  }

  TEST_CASE("weighted partial-sum series") {
    // a = e_0: sum_{m>=0} 1/(1+m^2) = (1 + pi coth pi)/2.
    const double limit = (1.0 + std::numbers::pi / std::tanh(std::numbers::pi)) / 2.0;
    CHECK(limit == doctest::Approx(2.0766740474685811));
    const double at = lem_hlp_sum({Complex(1.0)}, 100000);
    CHECK(at == doctest::Approx(limit).epsilon(1e-5));
    CHECK(at < limit);
    // Scaled to unit norm before summing.
    CHECK(lem_hlp_sum({Complex(3.0)}, 100) == doctest::Approx(lem_hlp_sum({Complex(1.0)}, 100)));
  }
}
