#include "hpd/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "hpd/errors.hpp"

namespace hpd {

namespace {

bool is_real(const Eigen::MatrixXcd& m) { return m.imag().cwiseAbs().maxCoeff() == 0.0; }

double min_eigenvalue(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0) return 0.0;
  if (is_real(m)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.real(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolve failed");
    return solver.eigenvalues()(0);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolve failed");
  return solver.eigenvalues()(0);
}

Complex kernel_entry(const HpdSequence& alpha, const Vertex& a, const Vertex& b) {
  const Relation rel = relation(a, b);
  if (!rel.comparable) return 0.0;
  if (rel.distance > alpha.max_index()) {
    throw InputError("vertex distance " + std::to_string(rel.distance) + " exceeds the sequence length");
  }
  const Complex value = alpha(rel.distance);
  return rel.ancestor == Ancestor::first ? value : std::conj(value);
}

}  // namespace

HpdSequence::HpdSequence(int q, std::vector<Complex> values) : q_(q), values_(std::move(values)) {
  if (q < 2) throw InputError("arity q must be >= 2");
  if (values_.empty()) throw InputError("an HPD sequence needs at least alpha(0)");
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw InputError("non-finite sequence value");
  }
}

HpdSequence HpdSequence::beta(int q, int n_max) {
  std::vector<Complex> v(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) v[static_cast<std::size_t>(n)] = std::pow(static_cast<double>(q), -0.5 * n);
  return HpdSequence(q, std::move(v));
}

HpdSequence HpdSequence::white_noise(int q, int n_max) {
  std::vector<Complex> v(static_cast<std::size_t>(n_max) + 1, 0.0);
  v[0] = 1.0;
  return HpdSequence(q, std::move(v));
}

Complex HpdSequence::operator()(int n) const {
  const auto k = static_cast<std::size_t>(std::abs(n));
  if (k >= values_.size()) throw InputError("sequence index " + std::to_string(n) + " out of range");
  return n >= 0 ? values_[k] : std::conj(values_[k]);
}

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd entries, std::vector<std::string> labels)
    : entries_(std::move(entries)), labels_(std::move(labels)) {
  if (entries_.rows() != entries_.cols()) throw InputError("matrix is not square");
  if (!labels_.empty() && static_cast<Eigen::Index>(labels_.size()) != entries_.rows()) {
    throw InputError("label count does not match the matrix size");
  }
  if (entries_.size() == 0) return;
  if (!entries_.allFinite()) throw InputError("matrix has non-finite entries");
  const double scale = entries_.cwiseAbs().maxCoeff();
  const double defect = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (defect > kHermitianTolerance * scale) throw InputError("matrix is not Hermitian within tolerance");
}

std::optional<Eigen::Index> HermitianMatrix::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Eigen::Index>(it - labels_.begin());
}

PsdResult psd_check(const HermitianMatrix& a, double tol_rel) {
  PsdResult out;
  const double trace = a.entries().trace().real();
  out.threshold = tol_rel * std::max(1.0, trace);
  out.min_eigenvalue = min_eigenvalue(a.entries());
  out.psd = out.min_eigenvalue >= -out.threshold;
  return out;
}

HermitianMatrix branching_toeplitz(const HpdSequence& alpha, const TreeTruncation& trunc) {
  if (trunc.arity() != alpha.arity()) throw InputError("tree arity does not match the sequence arity");
  if (trunc.depth() > alpha.max_index()) throw InputError("truncation depth exceeds the sequence length");
  return branching_toeplitz(alpha, std::span<const Vertex>(trunc.vertices()));
}

HermitianMatrix branching_toeplitz(const HpdSequence& alpha, std::span<const Vertex> vertices) {
  const auto m = static_cast<Eigen::Index>(vertices.size());
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(m, m);
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (Eigen::Index i = 0; i < m; ++i) {
    labels.push_back(vertices[static_cast<std::size_t>(i)].label());
    for (Eigen::Index j = i; j < m; ++j) {
      const Complex v = kernel_entry(alpha, vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]);
      k(i, j) = v;
      k(j, i) = std::conj(v);
    }
  }
  // The diagonal is alpha(0); force it real so complex inputs stay Hermitian.
  for (Eigen::Index i = 0; i < m; ++i) k(i, i) = k(i, i).real();
  return HermitianMatrix(std::move(k), std::move(labels));
}

HermitianMatrix markov_product(const HermitianMatrix& k1, const HermitianMatrix& k2, const std::string& shared) {
  if (k1.labels().empty() || k2.labels().empty()) throw InputError("Markov product needs labelled kernels");
  const auto x1 = k1.index_of(shared);
  const auto x2 = k2.index_of(shared);
  if (!x1 || !x2) throw InputError("shared label '" + shared + "' missing from a kernel");
  std::unordered_set<std::string> first(k1.labels().begin(), k1.labels().end());
  for (const auto& l : k2.labels()) {
    if (l != shared && first.count(l)) throw InputError("label sets intersect beyond the shared point");
  }
  if (std::abs(k1(*x1, *x1) - 1.0) > kHermitianTolerance || std::abs(k2(*x2, *x2) - 1.0) > kHermitianTolerance) {
    throw InputError("Markov product requires K(x0, x0) = 1 in both kernels");
  }

  std::vector<Eigen::Index> rest;
  for (Eigen::Index j = 0; j < k2.size(); ++j) {
    if (j != *x2) rest.push_back(j);
  }
  const Eigen::Index n1 = k1.size();
  const Eigen::Index n = n1 + static_cast<Eigen::Index>(rest.size());
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(n, n);
  k.topLeftCorner(n1, n1) = k1.entries();
  std::vector<std::string> labels = k1.labels();
  for (std::size_t a = 0; a < rest.size(); ++a) {
    const Eigen::Index ra = n1 + static_cast<Eigen::Index>(a);
    labels.push_back(k2.labels()[static_cast<std::size_t>(rest[a])]);
    for (std::size_t b = 0; b < rest.size(); ++b) {
      k(ra, n1 + static_cast<Eigen::Index>(b)) = k2(rest[a], rest[b]);
    }
    for (Eigen::Index i = 0; i < n1; ++i) {
      const Complex cross = k1(i, *x1) * k2(*x2, rest[a]);
      k(i, ra) = cross;
      k(ra, i) = std::conj(cross);
    }
  }
  return HermitianMatrix(std::move(k), std::move(labels));
}

CantorGram cantor_gram(int q, int depth, std::size_t cap) {
  const TreeTruncation trunc(q, depth, cap);
  const std::size_t leaves = trunc.level_size(depth);
  const auto m = static_cast<Eigen::Index>(trunc.size());
  if (leaves * trunc.size() > cap * 64) {
    throw CapacityError("Cantor Gram vectors exceed the size cap");
  }
  CantorGram out;
  out.vertices = trunc.vertices();
  out.vectors = Eigen::MatrixXd::Zero(m, static_cast<Eigen::Index>(leaves));
  const std::size_t leaf_begin = trunc.level_begin(depth);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Vertex& v = trunc.vertex(static_cast<std::size_t>(i));
    const int below = depth - static_cast<int>(v.length());
    std::size_t span = 1;
    for (int k = 0; k < below; ++k) span *= static_cast<std::size_t>(q);
    // Leaf cylinders under v are contiguous in breadth-first order.
    Vertex first_leaf = v;
    for (int k = 0; k < below; ++k) first_leaf = first_leaf.child(1);
    const std::size_t start = *trunc.index_of(first_leaf) - leaf_begin;
    const double height = std::pow(static_cast<double>(q), 0.5 * static_cast<double>(v.length()));
    for (std::size_t l = 0; l < span; ++l) out.vectors(i, static_cast<Eigen::Index>(start + l)) = height;
  }
  const double weight = 1.0 / static_cast<double>(leaves);
  Eigen::MatrixXd gram = weight * out.vectors * out.vectors.transpose();
  out.gram = HermitianMatrix(gram.cast<Complex>(), trunc.labels());
  return out;
}

HpdSequence alpha_from_measure(const SpectralMeasure& nu, int q, int n_max) {
  if (n_max < 0) throw InputError("n_max must be >= 0");
  std::vector<Complex> v(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    v[static_cast<std::size_t>(n)] = std::pow(static_cast<double>(q), -0.5 * n) * nu.fourier(n);
  }
  v[0] = v[0].real();
  return HpdSequence(q, std::move(v));
}

HpdSequence modulate(const HpdSequence& alpha, const SpectralMeasure& nu) {
  std::vector<Complex> v(alpha.values().begin(), alpha.values().end());
  for (std::size_t n = 0; n < v.size(); ++n) v[n] *= nu.fourier(static_cast<int>(n));
  v[0] = v[0].real();
  return HpdSequence(alpha.arity(), std::move(v));
}

HermitianMatrix hpd_toeplitz(const HpdSequence& alpha, int order) {
  if (order < 1) throw InputError("Toeplitz order must be >= 1");
  if (order - 1 > alpha.max_index()) throw InputError("Toeplitz order exceeds the sequence length");
  const double q = alpha.arity();
  Eigen::MatrixXcd t(order, order);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) t(i, j) = std::pow(q, 0.5 * std::abs(j - i)) * alpha(j - i);
    t(i, i) = t(i, i).real();
  }
  return HermitianMatrix(std::move(t));
}

std::string HpdReport::summary() const {
  if (!consistent) {
    if (decay_violation) return "rejected: decay bound fails at n=" + std::to_string(*decay_violation);
    return "rejected: Toeplitz matrix of order " + std::to_string(order) + " is not PSD";
  }
  return "consistent up to " + std::to_string(order);
}

HpdReport hpd_check(const HpdSequence& alpha, int order, std::optional<int> oracle_depth, double decay_tol,
                    double psd_tol) {
  if (order < 1) throw InputError("order must be >= 1");
  if (order - 1 > alpha.max_index()) throw InputError("order exceeds the sequence length");
  HpdReport report;
  report.order = order;

  const double a0 = alpha(0).real();
  const double q = alpha.arity();
  const int last = std::min(order, alpha.max_index());
  for (int n = 0; n <= last; ++n) {
    if (std::abs(alpha(n)) > a0 * std::pow(q, -0.5 * n) + decay_tol) {
      report.method = HpdMethod::decay_reject;
      report.decay_violation = n;
      report.consistent = false;
      return report;
    }
  }

  const PsdResult toeplitz = psd_check(hpd_toeplitz(alpha, order), psd_tol);
  report.method = HpdMethod::toeplitz;
  report.toeplitz_min_eigenvalue = toeplitz.min_eigenvalue;
  report.consistent = toeplitz.psd;

  if (oracle_depth) {
    if (*oracle_depth < 0 || *oracle_depth > alpha.max_index()) {
      throw InputError("oracle depth exceeds the sequence length");
    }
    const PsdResult tree = psd_check(branching_toeplitz(alpha, truncate(alpha.arity(), *oracle_depth)), psd_tol);
    report.method = HpdMethod::tree_oracle;
    report.oracle_depth = oracle_depth;
    report.tree_min_eigenvalue = tree.min_eigenvalue;
    report.tree_agrees = tree.psd == toeplitz.psd;
  }
  return report;
}

std::string to_string(HpdMethod method) {
  switch (method) {
    case HpdMethod::decay_reject:
      return "decay-reject";
    case HpdMethod::toeplitz:
      return "toeplitz";
    case HpdMethod::tree_oracle:
      return "tree-oracle";
  }
  return "unknown";
}

}  // namespace hpd
