#include "hpd/predict.hpp"

#include <algorithm>
#include <cmath>

#include "hpd/errors.hpp"

namespace hpd {

namespace {

template <class Matrix, class Vector>
double projected_energy(const Matrix& b, const Vector& v) {
  using Solver = Eigen::SelfAdjointEigenSolver<Matrix>;
  Solver solver(b);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolve failed");
  const auto& lambda = solver.eigenvalues();
  const double cutoff = kPinvCutoff * std::max(0.0, lambda(lambda.size() - 1));
  const Vector y = solver.eigenvectors().adjoint() * v;
  double energy = 0.0;
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    if (lambda(k) > cutoff) energy += std::norm(y(k)) / lambda(k);
  }
  return energy;
}

template <class Matrix>
Matrix drop_index(const Matrix& a, Eigen::Index t) {
  const Eigen::Index n = a.rows();
  Matrix out(n - 1, n - 1);
  for (Eigen::Index i = 0, oi = 0; i < n; ++i) {
    if (i == t) continue;
    for (Eigen::Index j = 0, oj = 0; j < n; ++j) {
      if (j == t) continue;
      out(oi, oj++) = a(i, j);
    }
    ++oi;
  }
  return out;
}

template <class Matrix>
auto column_without(const Matrix& a, Eigen::Index t) {
  Eigen::Matrix<typename Matrix::Scalar, Eigen::Dynamic, 1> out(a.rows() - 1);
  for (Eigen::Index i = 0, o = 0; i < a.rows(); ++i) {
    if (i != t) out(o++) = a(i, t);
  }
  return out;
}

}  // namespace

double finite_distance(const HermitianMatrix& a, Eigen::Index target, double psd_tol) {
  if (target < 0 || target >= a.size()) throw InputError("target index out of range");
  const PsdResult psd = psd_check(a, psd_tol);
  if (!psd.psd) {
    throw CheckFailed("matrix is not PSD (min eigenvalue " + std::to_string(psd.min_eigenvalue) + ")");
  }
  const double att = a(target, target).real();
  if (a.size() == 1) return std::sqrt(std::max(att, 0.0));

  // v B^+ v^* with v the target row equals c^* B^+ c for the target column c.
  double energy = 0.0;
  const Eigen::MatrixXcd& m = a.entries();
  if (m.imag().cwiseAbs().maxCoeff() == 0.0) {
    const Eigen::MatrixXd re = m.real();
    energy = projected_energy(drop_index(re, target), column_without(re, target));
  } else {
    energy = projected_energy(drop_index(m, target), column_without(m, target));
  }
  return std::sqrt(std::max(att - energy, 0.0));
}

double symmetric_reduction(const HpdSequence& alpha, int n) {
  if (n < 0) throw InputError("order must be >= 0");
  return finite_distance(hpd_toeplitz(alpha, n + 1), 0);
}

PredictionReport predict_tq(const SpectralMeasure& nu, int q, const std::vector<int>& depths, Reduction reduction,
                            std::size_t grid, double tol) {
  if (q < 2) throw InputError("arity q must be >= 2");
  if (depths.empty()) throw InputError("depth schedule is empty");
  for (int d : depths) {
    if (d < 0) throw InputError("depths must be >= 0");
  }
  const int deepest = *std::max_element(depths.begin(), depths.end());
  const HpdSequence alpha = alpha_from_measure(nu, q, deepest);

  PredictionReport out;
  out.szego_value = nu.has_density() ? std::sqrt(szego_mean(nu.absolutely_continuous_part(), grid).value) : 0.0;

  for (int d : depths) {
    OracleValue value;
    value.depth = d;
    value.vertices = homogeneous_vertex_count(q, d, kDefaultVertexCap);
    const bool full = reduction == Reduction::full_tree ||
                      (reduction == Reduction::automatic && value.vertices <= kFullTreeLimit);
    if (full) {
      value.distance = finite_distance(branching_toeplitz(alpha, truncate(q, d)), 0);
      value.method = "full-tree";
    } else {
      value.distance = symmetric_reduction(alpha, d);
      value.method = "symmetric";
    }
    out.oracle.push_back(value);
  }

  out.decreasing = true;
  for (std::size_t i = 1; i < out.oracle.size(); ++i) {
    if (out.oracle[i].depth >= out.oracle[i - 1].depth &&
        out.oracle[i].distance > out.oracle[i - 1].distance + tol) {
      out.decreasing = false;
    }
  }
  out.gap = out.oracle.back().distance - out.szego_value;
  out.converged = std::abs(out.gap) < tol;
  return out;
}

Tq1Prediction predict_tq1(const SpectralMeasure& mu, int q, std::size_t grid) {
  Tq1Prediction out;
  out.criterion = tq1_criterion(mu, q, grid);
  out.valid = out.criterion.holds;
  if (!out.valid) return out;
  const double radicand = q * out.criterion.lhs - (q - 1.0) * mu.total_mass();
  if (radicand < 0.0) out.clipped = true;
  out.value = std::sqrt(std::max(radicand, 0.0));
  return out;
}

std::string to_string(Reduction r) {
  switch (r) {
    case Reduction::automatic:
      return "auto";
    case Reduction::full_tree:
      return "full-tree";
    case Reduction::symmetric:
      return "symmetric";
  }
  return "unknown";
}

}  // namespace hpd
