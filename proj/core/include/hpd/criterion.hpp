#pragma once

// Admissibility tests for spectral measures: the T(q;1) inverse-Jensen
// criterion, its block-matrix oracle C_n, the two-level density interval,
// and the descendant-count bound on Fourier coefficients for general trees.

#include <optional>
#include <vector>

#include "hpd/circle.hpp"
#include "hpd/kernel.hpp"
#include "hpd/tree.hpp"

namespace hpd {

inline constexpr double kCriterionTolerance = 1e-6;
inline constexpr int kCnMaxOrder = 512;

struct CriterionReport {
  double lhs = 0.0;  // geometric mean of the absolutely continuous density
  double rhs = 0.0;  // (1 - 1/q) * total mass, atoms included
  bool holds = false;
  double margin = 0.0;     // lhs - rhs
  double tolerance = 0.0;  // holds <=> lhs >= rhs - tolerance
};

/// tolerance = tol * max(1, rhs).
CriterionReport tq1_criterion(const SpectralMeasure& mu, int q, std::size_t grid = kDefaultGrid,
                              double tol = kCriterionTolerance);

/// The (1 + q n)-square matrix indexed by tq1_truncation(q, n): the
/// Toeplitz block [mu^(j - i)] on each ray, the root coupled to ray position
/// k by mu^(k), and zero between distinct rays.
HermitianMatrix build_cn(const SpectralMeasure& mu, int q, int n);

struct CnOracleReport {
  bool all_psd = true;
  std::optional<int> first_failure;
  std::vector<double> min_eigenvalues;  // entry k is for n = k + 1
};

/// psd_check of build_cn for n = 1..n_max. Stops at the first failure when
/// stop_at_failure is set.
CnOracleReport cn_oracle(const SpectralMeasure& mu, int q, int n_max, double tol = kPsdTolerance,
                         bool stop_at_failure = false);

struct TwoLevelBounds {
  double lower = 0.0;  // (q-1)/(q+sqrt(2q-1))
  double upper = 0.0;
  // Ratios a/b at which sqrt(ab) = (1-1/q)(a+b)/2 holds with equality.
  double equality_lower = 0.0;
  double equality_upper = 0.0;
};

TwoLevelBounds two_level_bounds(int q);

struct TwoLevelCheck {
  double ratio = 0.0;           // a / b
  double geometric_mean = 0.0;  // sqrt(ab)
  double mass = 0.0;            // (a + b) / 2
  double rhs = 0.0;             // (1 - 1/q) * mass
  bool holds = false;
  double margin = 0.0;  // geometric_mean - rhs
};

/// Criterion for a*1_A + b*1_{T\A} with m(A) = 1/2, evaluated in closed form.
TwoLevelCheck two_level_check(int q, double a, double b, double tol = 1e-12);

/// The same two-level density as grid samples, A = [0, pi).
SpectralMeasure two_level_density(double a, double b, std::size_t grid = kDefaultGrid);

struct SupNormReport {
  double sup = 0.0;
  double bound = 0.0;  // log(q / (q - 1)) / 2
  bool sufficient = false;
  CriterionReport criterion;  // for the density e^g
};

/// Throws InputError when g is not real-valued.
SupNormReport sup_norm_sufficient(const TrigPoly& g, int q, std::size_t grid = kDefaultGrid);

struct FourierBoundReport {
  std::vector<int> violations;
  std::vector<double> squared_coefficients;  // |nu^(n)|^2 after normalization, n = 1..n_max
  std::vector<std::size_t> delta;            // Delta_n(tree)
};

/// Flags n <= n_max with |nu^(n)|^2 > (1 + tol) / Delta_n(tree). Levels with
/// Delta_n = 0 carry no constraint.
FourierBoundReport fourier_bound_check(const SpectralMeasure& nu, const GeneralRootedTree& tree, int n_max,
                                       double tol = 1e-9);

}  // namespace hpd
