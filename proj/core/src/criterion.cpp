#include "hpd/criterion.hpp"

#include <algorithm>
#include <cmath>

#include "hpd/errors.hpp"

namespace hpd {

namespace {

void require_arity(int q) {
  if (q < 2) throw InputError("arity q must be >= 2");
}

}  // namespace

CriterionReport tq1_criterion(const SpectralMeasure& mu, int q, std::size_t grid, double tol) {
  require_arity(q);
  CriterionReport out;
  out.lhs = mu.has_density() ? szego_mean(mu.absolutely_continuous_part(), grid).value : 0.0;
  out.rhs = (1.0 - 1.0 / q) * mu.total_mass();
  out.margin = out.lhs - out.rhs;
  out.tolerance = tol * std::max(1.0, out.rhs);
  out.holds = out.lhs >= out.rhs - out.tolerance;
  return out;
}

HermitianMatrix build_cn(const SpectralMeasure& mu, int q, int n) {
  require_arity(q);
  if (n < 1) throw InputError("C_n needs n >= 1");
  if (n > kCnMaxOrder) throw CapacityError("C_n order exceeds " + std::to_string(kCnMaxOrder));

  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = mu.fourier(k);
  c[0] = c[0].real();
  // entry(a, b) = mu^(b - a) for ray positions a, b, the root being position 0.
  auto coeff = [&](int d) { return d >= 0 ? c[static_cast<std::size_t>(d)] : std::conj(c[static_cast<std::size_t>(-d)]); };

  const Eigen::Index size = 1 + static_cast<Eigen::Index>(q) * n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(size, size);
  m(0, 0) = c[0];
  for (int ray = 0; ray < q; ++ray) {
    const Eigen::Index base = 1 + static_cast<Eigen::Index>(ray) * n;
    for (int a = 1; a <= n; ++a) {
      m(0, base + a - 1) = coeff(a);
      m(base + a - 1, 0) = coeff(-a);
      for (int b = 1; b <= n; ++b) m(base + a - 1, base + b - 1) = coeff(b - a);
    }
  }

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(size));
  for (const auto& v : tq1_truncation(q, n)) labels.push_back(v.label());
  return HermitianMatrix(std::move(m), std::move(labels));
}

CnOracleReport cn_oracle(const SpectralMeasure& mu, int q, int n_max, double tol, bool stop_at_failure) {
  if (n_max < 1) throw InputError("n_max must be >= 1");
  if (n_max > kCnMaxOrder) throw CapacityError("C_n order exceeds " + std::to_string(kCnMaxOrder));
  CnOracleReport out;
  for (int n = 1; n <= n_max; ++n) {
    const PsdResult r = psd_check(build_cn(mu, q, n), tol);
    out.min_eigenvalues.push_back(r.min_eigenvalue);
    if (!r.psd) {
      out.all_psd = false;
      if (!out.first_failure) out.first_failure = n;
      if (stop_at_failure) break;
    }
  }
  return out;
}

TwoLevelBounds two_level_bounds(int q) {
  require_arity(q);
  const double root = std::sqrt(2.0 * q - 1.0);
  TwoLevelBounds out;
  out.lower = (q - 1.0) / (q + root);
  out.upper = 1.0 / out.lower;
  // sqrt(t) solves c u^2 - 2u + c = 0 with c = 1 - 1/q.
  const double u = (q - root) / (q - 1.0);
  out.equality_lower = u * u;
  out.equality_upper = 1.0 / out.equality_lower;
  return out;
}

TwoLevelCheck two_level_check(int q, double a, double b, double tol) {
  require_arity(q);
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw InputError("two-level values must be positive and finite");
  }
  TwoLevelCheck out;
  out.ratio = a / b;
  out.geometric_mean = std::sqrt(a * b);
  out.mass = 0.5 * (a + b);
  out.rhs = (1.0 - 1.0 / q) * out.mass;
  out.margin = out.geometric_mean - out.rhs;
  out.holds = out.margin >= -tol * std::max(1.0, out.rhs);
  return out;
}

SpectralMeasure two_level_density(double a, double b, std::size_t grid) {
  if (grid < 2 || grid % 2 != 0) throw InputError("two-level grid must be even");
  if (!(a >= 0.0) || !(b >= 0.0)) throw InputError("two-level values must be non-negative");
  std::vector<double> values(grid);
  for (std::size_t j = 0; j < grid; ++j) values[j] = j < grid / 2 ? a : b;
  return SpectralMeasure::grid_density(std::move(values));
}

SupNormReport sup_norm_sufficient(const TrigPoly& g, int q, std::size_t grid) {
  require_arity(q);
  if (!g.is_real_valued(1e-12 * std::max(1.0, wiener_norm(g)))) throw InputError("g must be real-valued");
  SupNormReport out;
  out.sup = sup_norm(g, grid);
  out.bound = 0.5 * std::log(static_cast<double>(q) / (q - 1.0));
  out.sufficient = out.sup <= out.bound;
  std::vector<double> values(grid);
  for (std::size_t j = 0; j < grid; ++j) values[j] = std::exp(g(kTwoPi * static_cast<double>(j) / grid).real());
  out.criterion = tq1_criterion(SpectralMeasure::grid_density(std::move(values)), q, grid);
  return out;
}

FourierBoundReport fourier_bound_check(const SpectralMeasure& nu, const GeneralRootedTree& tree, int n_max,
                                       double tol) {
  if (n_max < 1) throw InputError("n_max must be >= 1");
  const double mass = nu.fourier(0).real();
  if (!(mass > 0.0)) throw InputError("the zero measure cannot be normalized");
  FourierBoundReport out;
  for (int n = 1; n <= n_max; ++n) {
    const double sq = std::norm(nu.fourier(n) / mass);
    const std::size_t d = delta_n(tree, n);
    out.squared_coefficients.push_back(sq);
    out.delta.push_back(d);
    if (d > 0 && sq > (1.0 + tol) / static_cast<double>(d)) out.violations.push_back(n);
  }
  return out;
}

}  // namespace hpd
