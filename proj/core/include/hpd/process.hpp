#pragma once

// Gaussian branching-type processes on truncated trees: the averaging
// construction X^(r), a generic sampler for PSD kernels, the level averages
// Theta_n, and empirical covariances with CLT intervals.

#include <Eigen/Dense>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hpd/kernel.hpp"
#include "hpd/tree.hpp"

namespace hpd {

struct SimulationConfig {
  int q = 2;
  double r = 0.5;
  int depth = 2;
  std::optional<int> tail_cutoff;  // default_tail_cutoff(r) when absent
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Smallest K with r^{2(K+1)} / (1 - r^2) < 1e-6.
int default_tail_cutoff(double r);
/// Variance of the series terms beyond k = K: r^{2(K+1)} / (1 - r^2).
double omitted_variance(double r, int k);

struct SampleBatch {
  std::vector<std::string> labels;
  Eigen::MatrixXd samples;  // one row per sample, columns in breadth-first order
  nlohmann::json provenance;
};

/// X_sigma = sum_{k<=K} r^k q^{-k/2} sum_{|tau|=k} G_{sigma tau} for |sigma| <= depth.
/// The normals below the window are drawn in aggregated form, one N(0,1) per
/// leaf and level, which has the same joint law.
SampleBatch simulate_xr(const SimulationConfig& cfg);

/// Centered Gaussian samples with covariance Re(A). Negative eigenvalues
/// within tolerance are clipped to 0; CheckFailed when A is not PSD.
SampleBatch sample_from_kernel(const HermitianMatrix& a, std::size_t samples, std::uint64_t seed,
                               unsigned threads = 0);

/// Theta_n = q^{-n/2} sum_{|sigma|=n} X_sigma, one row per sample, n = 0..depth.
Eigen::MatrixXd theta_average(const SampleBatch& batch, const TreeTruncation& trunc);

struct CovEstimate {
  Eigen::Index i = 0;
  Eigen::Index j = 0;
  double mean_i = 0.0;
  double mean_j = 0.0;
  double covariance = 0.0;  // unbiased
  double half_width = 0.0;  // 2.576 * sd(centered product) / sqrt(n)
};

std::vector<CovEstimate> empirical_cov(const Eigen::MatrixXd& samples,
                                       const std::vector<std::pair<Eigen::Index, Eigen::Index>>& pairs);

}  // namespace hpd
