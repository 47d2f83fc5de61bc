#include <doctest.h>

#include <cmath>

#include "hpd/errors.hpp"
#include "hpd/process.hpp"
#include "hpd/random.hpp"

using namespace hpd;

TEST_SUITE("process") {
  TEST_CASE("splitmix64 reference output") {
    std::uint64_t state = 0;
    CHECK(splitmix64(state) == 0xE220A8397B1DCDAFULL);
    CHECK(splitmix64(state) == 0x6E789E6AA1B965F4ULL);
    CHECK(substream_seed(7, 3) == substream_seed(7, 3));
    CHECK(substream_seed(7, 3) != substream_seed(7, 4));
    CHECK(substream_seed(7, 3) != substream_seed(8, 3));
  }

  TEST_CASE("normal stream moments") {
    NormalStream s(123);
    double sum = 0.0, sq = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
      const double x = s();
      sum += x;
      sq += x * x;
    }
    CHECK(std::abs(sum / n) < 5.0 / std::sqrt(n));
    CHECK(std::abs(sq / n - 1.0) < 5.0 * std::sqrt(2.0 / n));
  }

  TEST_CASE("tail cutoff") {
    CHECK(default_tail_cutoff(0.5) == 10);
    CHECK(omitted_variance(0.5, 10) < 1e-6);
    CHECK(omitted_variance(0.5, 9) >= 1e-6);
    CHECK(omitted_variance(0.5, 0) == doctest::Approx(0.25 / 0.75));
    CHECK_THROWS_AS(default_tail_cutoff(1.0), InputError);
  }

  TEST_CASE("simulations are independent of the thread count") {
    SimulationConfig cfg;
    cfg.q = 3;
    cfg.r = 0.6;
    cfg.depth = 2;
    cfg.samples = 500;
    cfg.seed = 99;
    cfg.threads = 1;
    const auto one = simulate_xr(cfg);
    cfg.threads = 3;
    const auto three = simulate_xr(cfg);
    CHECK(one.samples == three.samples);
    CHECK(one.labels == truncate(3, 2).labels());
    cfg.seed = 100;
    CHECK(simulate_xr(cfg).samples != one.samples);

    const auto k = branching_toeplitz(HpdSequence::beta(2, 3), truncate(2, 3));
    CHECK(sample_from_kernel(k, 300, 5, 1).samples == sample_from_kernel(k, 300, 5, 4).samples);
  }

  TEST_CASE("sampling needs a PSD covariance") {
    const auto bad = branching_toeplitz(HpdSequence(2, {1.0, 0.9}), truncate(2, 1));
    CHECK_THROWS_AS(sample_from_kernel(bad, 10, 0), CheckFailed);
  }

  TEST_CASE("empirical covariance") {
    Eigen::MatrixXd x(4, 2);
    x << 1, 2, 2, 4, 3, 6, 4, 8;
    const auto est = empirical_cov(x, {{0, 0}, {0, 1}});
    CHECK(est[0].covariance == doctest::Approx(5.0 / 3.0));
    CHECK(est[1].covariance == doctest::Approx(10.0 / 3.0));
    CHECK(est[1].mean_j == doctest::Approx(5.0));
    CHECK(est[0].half_width > 0.0);
    CHECK_THROWS_AS(empirical_cov(x, {{0, 2}}), InputError);
    CHECK_THROWS_AS(empirical_cov(x.topRows(1), {{0, 0}}), InputError);
  }

  TEST_CASE("level averages") {
    SampleBatch batch;
    const auto t = truncate(2, 1);
    batch.labels = t.labels();
    batch.samples.resize(1, 3);
    batch.samples << 1.0, 2.0, 4.0;
    const auto theta = theta_average(batch, t);
    CHECK(theta(0, 0) == 1.0);
    CHECK(theta(0, 1) == doctest::Approx(6.0 / std::sqrt(2.0)));
  }

  TEST_CASE("covariance of X^(r) at moderate sample size") {
    SimulationConfig cfg;
    cfg.q = 2;
    cfg.r = 0.5;
    cfg.depth = 1;
    cfg.samples = 20000;
    cfg.seed = 3;
    const auto batch = simulate_xr(cfg);
    const auto est = empirical_cov(batch.samples, {{0, 0}, {0, 1}, {1, 2}});
    const double expected[] = {4.0 / 3.0, 0.5 / std::sqrt(2.0) / 0.75, 0.0};
    // Two 99% half-widths, about five standard errors.
    for (int k = 0; k < 3; ++k) CHECK(std::abs(est[k].covariance - expected[k]) < 2.0 * est[k].half_width);
  }
}
