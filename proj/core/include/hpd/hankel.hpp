#pragma once

// Hankel operators H_phi(f) = R_-(phi f) with Poisson-type symbols, grid
// verification of the weighted L^infinity inequalities, and the
// H^2 -> L^infinity boundedness tests.

#include <optional>
#include <string>
#include <vector>

#include "hpd/circle.hpp"

namespace hpd {

/// R_-(phi f); the result is supported on n <= 0.
TrigPoly hankel_apply(const TrigPoly& phi, const TrigPoly& f);

struct HankelOptions {
  std::size_t grid = 8192;
  int symbol_truncation = 128;  // harmonics kept from sampled (grid) densities
  double tol = 1e-9;
};

enum class Inequality { two_weight, en, smoothed };

struct InequalityReport {
  Inequality which = Inequality::two_weight;
  double sup_ratio = 0.0;  // max over the grid of |numerator| / denominator
  double bound = 0.0;      // constant * ||f||_{L^2(phi)}
  double slack = 0.0;      // bound - sup_ratio
  bool holds = false;      // sup_ratio - truncation_error <= bound + tol * max(1, bound)
  double argmax_theta = 0.0;
  double truncation_error = 0.0;  // bound on the ratio error from truncating sampled densities
  double min_denominator = 0.0;
  std::size_t grid = 0;
  std::string certification = "grid";  // the sup is taken over grid points only
};

/// |H_phi(f)| / sqrt(phi) against r / sqrt(1 - r^2) ||f||_{L^2(phi)}, phi = P_r * mu.
/// f must be analytic with f^(0) = 0 and not identically zero.
InequalityReport two_weight_check(const SpectralMeasure& mu, double r, const TrigPoly& f,
                                  const HankelOptions& opts = {});

/// |E_N[H_phi(B0 f)]| / sqrt(E_N[|B0|^2 phi]) against ||f||_{L^2(phi)}, phi = P_{1/sqrt 2} * mu.
/// B0 analytic of degree <= N - 1 and non-zero. f = 0 gives a zero report.
InequalityReport en_inequality_check(const SpectralMeasure& mu, const TrigPoly& b0, const TrigPoly& f, int n,
                                     const HankelOptions& opts = {});

/// |P_{1/sqrt 2} * H_phi(f)| / sqrt(P_{1/sqrt 2} * phi) against ||f||_{L^2(phi)},
/// phi = P_{sqrt(2/3)} * mu. f = 0 gives a zero report.
InequalityReport smoothed_inequality_check(const SpectralMeasure& mu, const TrigPoly& f,
                                           const HankelOptions& opts = {});

/// sup over the grid of (sum_{n=0}^{n_trunc} |sum_{m<=-n} phi^(m) e^{im theta}|^2)^{1/2}.
double h2_linf_norm(const TrigPoly& phi, int n_trunc, std::size_t grid = kDefaultGrid);

enum class Trend { converging, diverging, undetermined };
enum class TriState { bounded, unbounded, inconclusive };

struct SeriesTest {
  double value = 0.0;  // partial sum at the full truncation
  Trend trend = Trend::undetermined;
  std::vector<double> partial_sums;  // at degrees D/8, D/4, D/2, D
};

struct BoundednessReport {
  bool truncated = false;
  SeriesTest h_half;  // sum (1+m^2)^{1/2} |phi^(m)|^2 over m <= 0
  SeriesTest h_one;   // sum (1+m^2) |phi^(m)|^2 over m <= 0
  bool positive_coefficients = false;
  std::optional<SeriesTest> positive_test;  // sum_n (sum_{m<=-n} phi^(m))^2
  TriState verdict = TriState::inconclusive;
  std::string basis;  // "finite", "sobolev" or "positive-coefficients"
};

/// When `truncated` is false the symbol is taken as given and every sum is
/// finite. Otherwise the symbol is read as the truncation of an infinite
/// series and convergence is judged from partial sums at doubling degrees.
BoundednessReport boundedness_conditions(const TrigPoly& phi, bool truncated);

struct HlpPairing {
  double pairing = 0.0;  // sum_{m,n>=1} a_m b_n / max(m, n)
  double bound = 0.0;    // 4 ||a||_2 ||b||_2
  bool holds = false;
};

/// a[0] and b[0] hold a_1 and b_1. Entries must be non-negative.
HlpPairing hlp_pairing(const std::vector<double>& a, const std::vector<double>& b);

/// sum_{m=0}^{M} (1 + m^2)^{-1} (sum_{l=0}^{m} |a_l|)^2 with a scaled to unit
/// l^2 norm when it is larger.
double lem_hlp_sum(const std::vector<Complex>& a, int m);

std::string to_string(Inequality which);
std::string to_string(Trend trend);
std::string to_string(TriState state);

}  // namespace hpd
