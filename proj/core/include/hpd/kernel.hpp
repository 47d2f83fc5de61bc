#pragma once

// Branching-Toeplitz kernels on truncated trees, PSD testing, q-HPD
// classification, Markov products and the Cantor-measure Gram factorization.

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hpd/circle.hpp"
#include "hpd/tree.hpp"

namespace hpd {

inline constexpr double kPsdTolerance = 1e-9;
inline constexpr double kHermitianTolerance = 1e-12;

/// A candidate q-HPD function alpha(0..N_max), extended to negative arguments
/// by alpha(-n) = conj(alpha(n)).
class HpdSequence {
 public:
  HpdSequence(int q, std::vector<Complex> values);

  /// beta_q(n) = q^{-n/2}.
  static HpdSequence beta(int q, int n_max);
  /// alpha(n) = delta_{n0}.
  static HpdSequence white_noise(int q, int n_max);

  int arity() const { return q_; }
  int max_index() const { return static_cast<int>(values_.size()) - 1; }
  std::span<const Complex> values() const { return values_; }

  Complex operator()(int n) const;

 private:
  int q_;
  std::vector<Complex> values_;
};

/// Complex Hermitian matrix with optional row labels.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  /// Throws InputError when entries fail Hermitian symmetry by more than
  /// kHermitianTolerance relative to the largest entry, or when the label
  /// count does not match.
  explicit HermitianMatrix(Eigen::MatrixXcd entries, std::vector<std::string> labels = {});

  Eigen::Index size() const { return entries_.rows(); }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

  std::optional<Eigen::Index> index_of(const std::string& label) const;

 private:
  Eigen::MatrixXcd entries_;
  std::vector<std::string> labels_;
};

struct PsdResult {
  bool psd = false;
  double min_eigenvalue = 0.0;
  double threshold = 0.0;  // psd <=> min_eigenvalue >= -threshold
};

/// psd <=> lambda_min >= -tol_rel * max(1, trace).
PsdResult psd_check(const HermitianMatrix& a, double tol_rel = kPsdTolerance);

/// Entry (sigma, delta) = alpha(d) if sigma precedes delta, conj(alpha(d)) if
/// delta precedes sigma, 0 otherwise. Rows follow the truncation's index.
HermitianMatrix branching_toeplitz(const HpdSequence& alpha, const TreeTruncation& trunc);
/// Same kernel restricted to an arbitrary vertex list (rows in list order).
HermitianMatrix branching_toeplitz(const HpdSequence& alpha, std::span<const Vertex> vertices);

/// Markov product K1 *_{x0} K2 on the union of the two label sets. Rows are
/// K1's labels followed by K2's labels without x0.
HermitianMatrix markov_product(const HermitianMatrix& k1, const HermitianMatrix& k2, const std::string& shared);

struct CantorGram {
  std::vector<Vertex> vertices;  // breadth-first, as in truncate(q, depth)
  Eigen::MatrixXd vectors;       // row sigma: q^{|sigma|/2} on the leaf cylinders below sigma
  HermitianMatrix gram;          // inner products with leaf weight q^{-depth}
};

CantorGram cantor_gram(int q, int depth, std::size_t cap = kDefaultVertexCap);

/// alpha(n) = q^{-n/2} nu^(n), n = 0..n_max.
HpdSequence alpha_from_measure(const SpectralMeasure& nu, int q, int n_max);

/// alpha_nu(n) = nu^(n) alpha(n).
HpdSequence modulate(const HpdSequence& alpha, const SpectralMeasure& nu);

/// The order x order Toeplitz matrix T[i][j] = q^{(j-i)/2} alpha(j-i) with the
/// conjugation convention for negative arguments; this is [nu_alpha^(j-i)].
HermitianMatrix hpd_toeplitz(const HpdSequence& alpha, int order);

enum class HpdMethod { decay_reject, toeplitz, tree_oracle };

struct HpdReport {
  bool consistent = false;  // "consistent up to order"; never a proof of q-HPD-ness
  int order = 0;
  HpdMethod method = HpdMethod::toeplitz;
  std::optional<int> decay_violation;  // first n with |alpha(n)| > alpha(0) q^{-n/2} + tol
  std::optional<double> toeplitz_min_eigenvalue;
  std::optional<int> oracle_depth;
  std::optional<double> tree_min_eigenvalue;
  std::optional<bool> tree_agrees;

  std::string summary() const;
};

/// Three-stage semi-decision at finite order: decay quick-reject, Toeplitz
/// PSD test of order `order`, and an optional tree-kernel cross-check at
/// `oracle_depth`. The verdict is always the Toeplitz (or decay) result.
HpdReport hpd_check(const HpdSequence& alpha, int order, std::optional<int> oracle_depth = std::nullopt,
                    double decay_tol = 1e-12, double psd_tol = kPsdTolerance);

std::string to_string(HpdMethod method);

}  // namespace hpd
