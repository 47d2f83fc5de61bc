#include "hpd/process.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "hpd/errors.hpp"
#include "hpd/random.hpp"

namespace hpd {

namespace {

constexpr double kTailVariance = 1e-6;
constexpr double kZ99 = 2.576;

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(i) for i in [0, n) on contiguous chunks.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] {
      for (std::size_t i = begin; i < end; ++i) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

int default_tail_cutoff(double r) {
  if (!(r > 0.0 && r < 1.0)) throw InputError("r must lie in (0, 1)");
  int k = 0;
  while (omitted_variance(r, k) >= kTailVariance) ++k;
  return k;
}

double omitted_variance(double r, int k) { return std::pow(r, 2.0 * (k + 1)) / (1.0 - r * r); }

SampleBatch simulate_xr(const SimulationConfig& cfg) {
  if (cfg.q < 2) throw InputError("arity q must be >= 2");
  if (!(cfg.r > 0.0 && cfg.r < 1.0)) throw InputError("r must lie in (0, 1)");
  if (cfg.samples < 1) throw InputError("need at least one sample");
  const int cutoff = cfg.tail_cutoff ? *cfg.tail_cutoff : default_tail_cutoff(cfg.r);
  if (cutoff < 0) throw InputError("tail cutoff must be >= 0");

  const TreeTruncation trunc(cfg.q, cfg.depth);
  const auto m = static_cast<Eigen::Index>(trunc.size());
  const Eigen::Index terms = cutoff + 1;
  if (static_cast<std::size_t>(m) * static_cast<std::size_t>(terms) > kDefaultVertexCap) {
    throw CapacityError("window size times tail cutoff exceeds the vertex cap");
  }
  const double shrink = 1.0 / std::sqrt(static_cast<double>(cfg.q));
  std::vector<double> rpow(static_cast<std::size_t>(terms));
  for (Eigen::Index k = 0; k < terms; ++k) rpow[static_cast<std::size_t>(k)] = std::pow(cfg.r, static_cast<double>(k));

  SampleBatch batch;
  batch.labels = trunc.labels();
  batch.samples.resize(static_cast<Eigen::Index>(cfg.samples), m);

  parallel_for(cfg.samples, cfg.threads, [&](std::size_t s) {
    NormalStream normal(substream_seed(cfg.seed, s));
    // a(v, k) = q^{-k/2} sum_{|tau|=k} G_{v tau}
    Eigen::MatrixXd a(m, terms);
    for (int level = cfg.depth; level >= 0; --level) {
      const std::size_t begin = trunc.level_begin(level);
      const std::size_t size = trunc.level_size(level);
      for (std::size_t off = 0; off < size; ++off) {
        const auto v = static_cast<Eigen::Index>(begin + off);
        a(v, 0) = normal();
        if (level == cfg.depth) {
          for (Eigen::Index k = 1; k < terms; ++k) a(v, k) = normal();
          continue;
        }
        const auto first_child = static_cast<Eigen::Index>(trunc.level_begin(level + 1) + off * cfg.q);
        for (Eigen::Index k = 1; k < terms; ++k) {
          double sum = 0.0;
          for (int c = 0; c < cfg.q; ++c) sum += a(first_child + c, k - 1);
          a(v, k) = shrink * sum;
        }
      }
    }
    const auto row = static_cast<Eigen::Index>(s);
    for (Eigen::Index v = 0; v < m; ++v) {
      double x = 0.0;
      for (Eigen::Index k = 0; k < terms; ++k) x += rpow[static_cast<std::size_t>(k)] * a(v, k);
      batch.samples(row, v) = x;
    }
  });

  batch.provenance = {{"generator", "xr"},
                      {"q", cfg.q},
                      {"r", cfg.r},
                      {"depth", cfg.depth},
                      {"tail_cutoff", cutoff},
                      {"omitted_variance", omitted_variance(cfg.r, cutoff)},
                      {"samples", cfg.samples},
                      {"seed", cfg.seed},
                      {"seed_schedule", "mt19937_64(substream_seed(seed, sample))"}};
  return batch;
}

SampleBatch sample_from_kernel(const HermitianMatrix& a, std::size_t samples, std::uint64_t seed, unsigned threads) {
  if (samples < 1) throw InputError("need at least one sample");
  const PsdResult psd = psd_check(a);
  if (!psd.psd) {
    throw CheckFailed("covariance is not PSD (min eigenvalue " + std::to_string(psd.min_eigenvalue) + ")");
  }
  const Eigen::MatrixXd cov = a.entries().real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolve failed");
  const Eigen::VectorXd root = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::MatrixXd factor = solver.eigenvectors() * root.asDiagonal();

  const Eigen::Index m = a.size();
  SampleBatch batch;
  batch.labels = a.labels();
  batch.samples.resize(static_cast<Eigen::Index>(samples), m);
  parallel_for(samples, threads, [&](std::size_t s) {
    NormalStream normal(substream_seed(seed, s));
    Eigen::VectorXd z(m);
    for (Eigen::Index i = 0; i < m; ++i) z(i) = normal();
    batch.samples.row(static_cast<Eigen::Index>(s)) = (factor * z).transpose();
  });
  batch.provenance = {{"generator", "kernel"},
                      {"size", m},
                      {"samples", samples},
                      {"seed", seed},
                      {"seed_schedule", "mt19937_64(substream_seed(seed, sample))"}};
  return batch;
}

Eigen::MatrixXd theta_average(const SampleBatch& batch, const TreeTruncation& trunc) {
  if (batch.samples.cols() < static_cast<Eigen::Index>(trunc.size())) {
    throw InputError("batch does not cover the truncation");
  }
  const int depth = trunc.depth();
  Eigen::MatrixXd theta(batch.samples.rows(), depth + 1);
  for (int n = 0; n <= depth; ++n) {
    const auto begin = static_cast<Eigen::Index>(trunc.level_begin(n));
    const auto size = static_cast<Eigen::Index>(trunc.level_size(n));
    const double scale = std::pow(static_cast<double>(trunc.arity()), -0.5 * n);
    theta.col(n) = scale * batch.samples.middleCols(begin, size).rowwise().sum();
  }
  return theta;
}

std::vector<CovEstimate> empirical_cov(const Eigen::MatrixXd& samples,
                                       const std::vector<std::pair<Eigen::Index, Eigen::Index>>& pairs) {
  const Eigen::Index n = samples.rows();
  if (n < 2) throw InputError("empirical covariance needs at least two samples");
  std::vector<CovEstimate> out;
  out.reserve(pairs.size());
  for (const auto& [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= samples.cols() || j >= samples.cols()) throw InputError("column index out of range");
    CovEstimate e;
    e.i = i;
    e.j = j;
    e.mean_i = samples.col(i).mean();
    e.mean_j = samples.col(j).mean();
    const Eigen::VectorXd prod =
        (samples.col(i).array() - e.mean_i) * (samples.col(j).array() - e.mean_j);
    const double sum = prod.sum();
    e.covariance = sum / static_cast<double>(n - 1);
    const double pmean = sum / static_cast<double>(n);
    const double pvar = (prod.array() - pmean).square().sum() / static_cast<double>(n - 1);
    e.half_width = kZ99 * std::sqrt(pvar) / std::sqrt(static_cast<double>(n));
    out.push_back(e);
  }
  return out;
}

}  // namespace hpd
