#pragma once

// One-step prediction distances: the Szego value on T_q, the closed form on
// T(q;1), and finite-dimensional least-squares oracles.

#include <optional>
#include <string>
#include <vector>

#include "hpd/circle.hpp"
#include "hpd/criterion.hpp"
#include "hpd/kernel.hpp"

namespace hpd {

inline constexpr double kPinvCutoff = 1e-10;

/// Distance from coordinate `target` to the span of the others in the Gram
/// geometry of A: d^2 = A_tt - v B^+ v^*, eigenvalues of B below
/// kPinvCutoff * lambda_max treated as zero. Throws CheckFailed when A is not PSD.
double finite_distance(const HermitianMatrix& a, Eigen::Index target, double psd_tol = kPsdTolerance);

/// Distance from Theta_0 to span{Theta_1..Theta_n}, from the (n+1)-square
/// Toeplitz matrix of q^{k/2} alpha(k).
double symmetric_reduction(const HpdSequence& alpha, int n);

enum class Reduction { automatic, full_tree, symmetric };

struct OracleValue {
  int depth = 0;
  std::size_t vertices = 0;  // size of the tree window
  double distance = 0.0;
  std::string method;  // "full-tree" or "symmetric"
};

struct PredictionReport {
  double szego_value = 0.0;  // exp(1/2 \int log w dm)
  std::vector<OracleValue> oracle;
  bool converged = false;   // |last oracle - szego_value| < tol
  bool decreasing = false;  // oracle non-increasing over the schedule
  double gap = 0.0;         // last oracle - szego_value
};

inline const std::vector<int> kDefaultDepthSchedule{1, 2, 3, 4, 6, 8};
inline constexpr std::size_t kFullTreeLimit = 1023;

/// `nu` is the spectral measure nu_alpha; alpha(n) = q^{-n/2} nu^(n). With
/// Reduction::automatic the full tree kernel is used while it has at most
/// kFullTreeLimit vertices.
PredictionReport predict_tq(const SpectralMeasure& nu, int q, const std::vector<int>& depths = kDefaultDepthSchedule,
                            Reduction reduction = Reduction::automatic, std::size_t grid = kDefaultGrid,
                            double tol = 1e-6);

struct Tq1Prediction {
  bool valid = false;
  std::optional<double> value;
  bool clipped = false;  // radicand was negative within tolerance and set to 0
  CriterionReport criterion;
};

/// sqrt(q GM(mu_ac) - (q-1) mu(T)) when the T(q;1) criterion holds.
Tq1Prediction predict_tq1(const SpectralMeasure& mu, int q, std::size_t grid = kDefaultGrid);

std::string to_string(Reduction r);

}  // namespace hpd
