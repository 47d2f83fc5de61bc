#include "hpd/circle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "hpd/errors.hpp"

namespace hpd {

namespace {

Complex unit(double angle) { return std::polar(1.0, angle); }

double reduce_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

double grid_angle(std::size_t j, std::size_t grid) {
  return kTwoPi * static_cast<double>(j) / static_cast<double>(grid);
}

// Largest harmonic with r^m above double-precision relevance.
int poisson_cutoff(double r, int hard_max) {
  if (r <= 0.0) return 0;
  const int m = static_cast<int>(std::ceil(std::log(1e-17) / std::log(r)));
  return std::min(std::max(m, 1), hard_max);
}

double grid_value(const GridDensity& g, double theta) {
  const std::size_t size = g.values.size();
  const double pos = reduce_angle(theta) / kTwoPi * static_cast<double>(size);
  const auto lo = static_cast<std::size_t>(std::floor(pos)) % size;
  const std::size_t hi = (lo + 1) % size;
  const double frac = pos - std::floor(pos);
  return (1.0 - frac) * g.values[lo] + frac * g.values[hi];
}

Complex grid_fourier(const GridDensity& g, int n) {
  const std::size_t size = g.values.size();
  Complex sum = 0.0;
  for (std::size_t j = 0; j < size; ++j) {
    sum += g.values[j] * unit(-static_cast<double>(n) * grid_angle(j, size));
  }
  return sum / static_cast<double>(size);
}

double atoms_mass(const std::vector<Atom>& atoms) {
  double total = 0.0;
  for (const auto& a : atoms) total += a.mass;
  return total;
}

Complex atoms_fourier(const std::vector<Atom>& atoms, int n) {
  Complex sum = 0.0;
  for (const auto& a : atoms) sum += a.mass * unit(-static_cast<double>(n) * a.theta);
  return sum;
}

void validate_atoms(std::vector<Atom>& atoms) {
  for (auto& a : atoms) {
    if (!std::isfinite(a.theta) || !std::isfinite(a.mass)) throw InputError("atom has a non-finite value");
    if (a.mass <= 0.0) throw InputError("atom masses must be positive");
    a.theta = reduce_angle(a.theta);
  }
}

}  // namespace

// ---------------------------------------------------------------- TrigPoly

TrigPoly::TrigPoly(int min_degree, std::vector<Complex> coefficients)
    : min_(min_degree), coeffs_(std::move(coefficients)) {
  normalize();
}

void TrigPoly::normalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == Complex{}) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    min_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == Complex{}) --last;
  coeffs_ = std::vector<Complex>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                 coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
  min_ += static_cast<int>(first);
}

TrigPoly TrigPoly::constant(Complex c) { return TrigPoly(0, {c}); }

TrigPoly TrigPoly::monomial(int n, Complex c) { return TrigPoly(n, {c}); }

TrigPoly TrigPoly::from_terms(std::span<const std::pair<int, Complex>> terms) {
  if (terms.empty()) return {};
  std::map<int, Complex> acc;
  for (const auto& [n, c] : terms) acc[n] += c;
  const int lo = acc.begin()->first;
  const int hi = acc.rbegin()->first;
  std::vector<Complex> coeffs(static_cast<std::size_t>(hi - lo) + 1);
  for (const auto& [n, c] : acc) coeffs[static_cast<std::size_t>(n - lo)] = c;
  return TrigPoly(lo, std::move(coeffs));
}

Complex TrigPoly::coeff(int n) const {
  if (coeffs_.empty() || n < min_ || n > max_degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(n - min_)];
}

Complex TrigPoly::operator()(double theta) const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    sum += coeffs_[i] * unit(static_cast<double>(min_ + static_cast<int>(i)) * theta);
  }
  return sum;
}

TrigPoly TrigPoly::trimmed(double tol) const {
  std::vector<Complex> c = coeffs_;
  for (auto& v : c) {
    if (std::abs(v) <= tol) v = 0.0;
  }
  return TrigPoly(min_, std::move(c));
}

TrigPoly TrigPoly::conjugate() const {
  if (is_zero()) return {};
  std::vector<Complex> out(coeffs_.rbegin(), coeffs_.rend());
  for (auto& v : out) v = std::conj(v);
  return TrigPoly(-max_degree(), std::move(out));
}

bool TrigPoly::is_real_valued(double tol) const {
  for (int n = min_degree(); n <= max_degree() && !is_zero(); ++n) {
    if (std::abs(coeff(n) - std::conj(coeff(-n))) > tol) return false;
  }
  return true;
}

TrigPoly TrigPoly::scaled(Complex c) const {
  return transformed([c](int, Complex a) { return a * c; });
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int lo = std::min(a.min_degree(), b.min_degree());
  const int hi = std::max(a.max_degree(), b.max_degree());
  std::vector<Complex> c(static_cast<std::size_t>(hi - lo) + 1);
  for (int n = lo; n <= hi; ++n) c[static_cast<std::size_t>(n - lo)] = a.coeff(n) + b.coeff(n);
  return TrigPoly(lo, std::move(c));
}

TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) { return a + b.scaled(-1.0); }

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TrigPoly(a.min_ + b.min_, std::move(c));
}

// ---------------------------------------------------------------- operators

RieszParts riesz(const TrigPoly& f) { return {riesz_plus(f), riesz_minus(f)}; }

TrigPoly riesz_plus(const TrigPoly& f) {
  return f.transformed([](int n, Complex a) { return n >= 0 ? a : Complex{}; });
}

TrigPoly riesz_minus(const TrigPoly& f) {
  return f.transformed([](int n, Complex a) { return n <= 0 ? a : Complex{}; });
}

TrigPoly e_n_average(const TrigPoly& f, int n) {
  if (n < 1) throw InputError("E_N requires N >= 1");
  if (f.is_zero()) return {};
  std::vector<std::pair<int, Complex>> terms;
  for (int k = f.min_degree(); k <= f.max_degree(); ++k) {
    if (k % n == 0) terms.emplace_back(k / n, f.coeff(k));
  }
  return TrigPoly::from_terms(terms);
}

double poisson_kernel(double r, double theta) {
  return (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(theta) + r * r);
}

// ---------------------------------------------------------------- SpectralMeasure

SpectralMeasure::SpectralMeasure(std::vector<Atom> atoms, std::vector<DensityTerm> density)
    : atoms_(std::move(atoms)) {
  validate_atoms(atoms_);
  TrigPoly merged;
  bool have_trig = false;
  for (auto& term : density) {
    if (auto* t = std::get_if<TrigDensity>(&term)) {
      const double scale = std::max(1.0, wiener_norm(t->poly));
      if (!t->poly.is_real_valued(1e-12 * scale)) {
        throw InputError("trigonometric density is not real-valued (coefficients not Hermitian)");
      }
      const int degree = t->poly.is_zero() ? 0 : std::max(-t->poly.min_degree(), t->poly.max_degree());
      const std::size_t check_grid = std::max<std::size_t>(512, 16 * static_cast<std::size_t>(degree + 1));
      double lowest = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < check_grid; ++j) {
        lowest = std::min(lowest, t->poly(grid_angle(j, check_grid)).real());
      }
      if (lowest < -1e-9 * scale) throw InputError("trigonometric density is negative somewhere");
      merged = merged + t->poly;
      have_trig = true;
    } else if (auto* g = std::get_if<GridDensity>(&term)) {
      if (g->values.empty()) throw InputError("grid density has no samples");
      for (double v : g->values) {
        if (!std::isfinite(v) || v < 0.0) throw InputError("grid density values must be finite and >= 0");
      }
      density_.push_back(std::move(term));
    } else {
      auto& p = std::get<PoissonAtomDensity>(term);
      if (!(p.radius >= 0.0 && p.radius < 1.0)) throw InputError("Poisson radius must lie in [0, 1)");
      validate_atoms(p.atoms);
      if (!p.atoms.empty()) density_.push_back(std::move(term));
    }
  }
  if (have_trig && !merged.is_zero()) density_.insert(density_.begin(), TrigDensity{merged});
}

SpectralMeasure SpectralMeasure::lebesgue(double mass) {
  return SpectralMeasure({}, {TrigDensity{TrigPoly::constant(mass)}});
}

SpectralMeasure SpectralMeasure::atom(double theta, double mass) {
  return SpectralMeasure({Atom{theta, mass}}, {});
}

SpectralMeasure SpectralMeasure::trig_density(TrigPoly density) {
  return SpectralMeasure({}, {TrigDensity{std::move(density)}});
}

SpectralMeasure SpectralMeasure::grid_density(std::vector<double> values) {
  return SpectralMeasure({}, {GridDensity{std::move(values)}});
}

double SpectralMeasure::atom_mass() const { return atoms_mass(atoms_); }

double SpectralMeasure::density_mass() const {
  double total = 0.0;
  for (const auto& term : density_) {
    if (auto* t = std::get_if<TrigDensity>(&term)) {
      total += t->poly.coeff(0).real();
    } else if (auto* g = std::get_if<GridDensity>(&term)) {
      total += std::accumulate(g->values.begin(), g->values.end(), 0.0) / static_cast<double>(g->values.size());
    } else {
      total += atoms_mass(std::get<PoissonAtomDensity>(term).atoms);
    }
  }
  return total;
}

Complex SpectralMeasure::fourier(int n) const {
  Complex sum = atoms_fourier(atoms_, n);
  for (const auto& term : density_) {
    if (auto* t = std::get_if<TrigDensity>(&term)) {
      sum += t->poly.coeff(n);
    } else if (auto* g = std::get_if<GridDensity>(&term)) {
      sum += grid_fourier(*g, n);
    } else {
      const auto& p = std::get<PoissonAtomDensity>(term);
      sum += std::pow(p.radius, std::abs(n)) * atoms_fourier(p.atoms, n);
    }
  }
  return sum;
}

double SpectralMeasure::density(double theta) const {
  double value = 0.0;
  for (const auto& term : density_) {
    if (auto* t = std::get_if<TrigDensity>(&term)) {
      value += t->poly(theta).real();
    } else if (auto* g = std::get_if<GridDensity>(&term)) {
      value += grid_value(*g, theta);
    } else {
      const auto& p = std::get<PoissonAtomDensity>(term);
      for (const auto& a : p.atoms) value += a.mass * poisson_kernel(p.radius, theta - a.theta);
    }
  }
  return value;
}

std::vector<double> SpectralMeasure::density_on_grid(std::size_t grid) const {
  if (grid == 0) throw InputError("grid size must be positive");
  std::vector<double> out(grid);
  for (std::size_t j = 0; j < grid; ++j) out[j] = density(grid_angle(j, grid));
  return out;
}

SpectralMeasure SpectralMeasure::absolutely_continuous_part() const { return SpectralMeasure({}, density_); }

SpectralMeasure SpectralMeasure::scaled(double c) const {
  if (!(c > 0.0)) throw InputError("measures may only be scaled by a positive factor");
  std::vector<Atom> atoms = atoms_;
  for (auto& a : atoms) a.mass *= c;
  std::vector<DensityTerm> terms = density_;
  for (auto& term : terms) {
    if (auto* t = std::get_if<TrigDensity>(&term)) {
      t->poly = t->poly.scaled(c);
    } else if (auto* g = std::get_if<GridDensity>(&term)) {
      for (auto& v : g->values) v *= c;
    } else {
      for (auto& a : std::get<PoissonAtomDensity>(term).atoms) a.mass *= c;
    }
  }
  return SpectralMeasure(std::move(atoms), std::move(terms));
}

SpectralMeasure operator+(const SpectralMeasure& a, const SpectralMeasure& b) {
  std::vector<Atom> atoms = a.atoms_;
  atoms.insert(atoms.end(), b.atoms_.begin(), b.atoms_.end());
  std::vector<DensityTerm> terms = a.density_;
  terms.insert(terms.end(), b.density_.begin(), b.density_.end());
  return SpectralMeasure(std::move(atoms), std::move(terms));
}

SpectralMeasure poisson_convolve(const SpectralMeasure& mu, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw InputError("Poisson convolution requires 0 <= r < 1");
  std::vector<DensityTerm> terms;
  if (!mu.atoms().empty()) terms.push_back(PoissonAtomDensity{r, mu.atoms()});
  for (const auto& term : mu.density_terms()) {
    if (auto* t = std::get_if<TrigDensity>(&term)) {
      terms.push_back(TrigDensity{t->poly.transformed([r](int n, Complex a) { return a * std::pow(r, std::abs(n)); })});
    } else if (auto* g = std::get_if<GridDensity>(&term)) {
      const std::size_t size = g->values.size();
      const int cutoff = poisson_cutoff(r, std::max(0, static_cast<int>(size / 2) - 1));
      std::vector<Complex> coeffs(static_cast<std::size_t>(cutoff) + 1);
      for (int m = 0; m <= cutoff; ++m) coeffs[static_cast<std::size_t>(m)] = std::pow(r, m) * grid_fourier(*g, m);
      std::vector<double> values(size);
      for (std::size_t j = 0; j < size; ++j) {
        double v = coeffs[0].real();
        for (int m = 1; m <= cutoff; ++m) {
          v += 2.0 * (coeffs[static_cast<std::size_t>(m)] * unit(m * grid_angle(j, size))).real();
        }
        values[j] = std::max(v, 0.0);
      }
      terms.push_back(GridDensity{std::move(values)});
    } else {
      const auto& p = std::get<PoissonAtomDensity>(term);
      terms.push_back(PoissonAtomDensity{p.radius * r, p.atoms});
    }
  }
  return SpectralMeasure({}, std::move(terms));
}

// ---------------------------------------------------------------- Szego mean

SzegoMean szego_mean_samples(std::span<const double> density_samples) {
  SzegoMean out;
  out.method = "quadrature";
  if (density_samples.empty()) throw InputError("no density samples");
  double log_sum = 0.0;
  for (double v : density_samples) {
    if (!(v >= kLogFloor)) {
      ++out.floored_points;
      v = kLogFloor;
    }
    log_sum += std::log(v);
  }
  if (static_cast<double>(out.floored_points) > 0.01 * static_cast<double>(density_samples.size())) {
    out.vanished = true;
    out.value = 0.0;
    out.log_integral = -std::numeric_limits<double>::infinity();
    return out;
  }
  out.log_integral = log_sum / static_cast<double>(density_samples.size());
  out.value = std::exp(out.log_integral);
  return out;
}

SzegoMean szego_mean_trig(const TrigPoly& density) {
  SzegoMean out;
  out.method = "mahler";
  double scale = 0.0;
  for (const auto& c : density.coefficients()) scale = std::max(scale, std::abs(c));
  const TrigPoly p = density.trimmed(1e-14 * scale);
  if (p.is_zero()) {
    out.vanished = true;
    out.log_integral = -std::numeric_limits<double>::infinity();
    return out;
  }
  // |w(theta)| = |Q(e^{i theta})| with Q(z) = sum_k c_{lo+k} z^k; by Jensen's
  // formula \int log|Q| dm = log|c_hi| + sum_{roots} log max(1, |z|).
  const int lo = p.min_degree();
  const int hi = p.max_degree();
  const int degree = hi - lo;
  double log_integral = std::log(std::abs(p.coeff(hi)));
  if (degree > 0) {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    const Complex lead = p.coeff(hi);
    for (int k = 0; k < degree; ++k) companion(0, k) = -p.coeff(hi - 1 - k) / lead;
    for (int k = 1; k < degree; ++k) companion(k, k - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("polynomial root finding failed");
    for (int k = 0; k < degree; ++k) {
      const double modulus = std::abs(solver.eigenvalues()(k));
      if (modulus > 1.0) log_integral += std::log(modulus);
    }
  }
  out.log_integral = log_integral;
  out.value = std::exp(log_integral);
  return out;
}

SzegoMean szego_mean(const SpectralMeasure& mu, std::size_t grid) {
  const auto& terms = mu.density_terms();
  if (terms.empty()) {
    SzegoMean out;
    out.method = "empty";
    out.vanished = true;
    out.log_integral = -std::numeric_limits<double>::infinity();
    return out;
  }
  if (terms.size() == 1) {
    if (auto* t = std::get_if<TrigDensity>(&terms.front())) return szego_mean_trig(t->poly);
    if (auto* g = std::get_if<GridDensity>(&terms.front())) return szego_mean_samples(g->values);
  }
  const auto samples = mu.density_on_grid(grid);
  return szego_mean_samples(samples);
}

// ---------------------------------------------------------------- norms

double sobolev_norm(const TrigPoly& f, double s) {
  double sum = 0.0;
  for (int n = f.min_degree(); n <= f.max_degree() && !f.is_zero(); ++n) {
    sum += std::pow(1.0 + static_cast<double>(n) * n, s) * std::norm(f.coeff(n));
  }
  return std::sqrt(sum);
}

double wiener_norm(const TrigPoly& f) {
  double sum = 0.0;
  for (const auto& c : f.coefficients()) sum += std::abs(c);
  return sum;
}

double sup_norm(const TrigPoly& f, std::size_t grid) {
  double best = 0.0;
  for (std::size_t j = 0; j < grid; ++j) best = std::max(best, std::abs(f(grid_angle(j, grid))));
  return best;
}

double l2_norm(const TrigPoly& f, const SpectralMeasure& mu) {
  if (f.is_zero()) return 0.0;
  const int lo = f.min_degree();
  const int hi = f.max_degree();
  const int span = hi - lo;
  // \int |f|^2 dmu = sum_{j,k} a_j conj(a_k) mu^(k - j)
  std::vector<Complex> moments(2 * static_cast<std::size_t>(span) + 1);
  for (int d = -span; d <= span; ++d) moments[static_cast<std::size_t>(d + span)] = mu.fourier(d);
  Complex sum = 0.0;
  for (int j = lo; j <= hi; ++j) {
    for (int k = lo; k <= hi; ++k) {
      sum += f.coeff(j) * std::conj(f.coeff(k)) * moments[static_cast<std::size_t>(k - j + span)];
    }
  }
  return std::sqrt(std::max(sum.real(), 0.0));
}

PoissonLogBound poisson_log_bound(const SpectralMeasure& mu, double r, std::size_t grid, double tol) {
  const double mass = mu.total_mass();
  if (!(mass > 0.0)) throw InputError("Poisson log bound needs a non-zero measure");
  const auto smoothed = poisson_convolve(mu.scaled(1.0 / mass), r);
  PoissonLogBound out;
  out.lhs = szego_mean(smoothed, grid).log_integral;
  out.rhs = std::log(1.0 - r * r);
  out.holds = out.lhs >= out.rhs - tol;
  return out;
}

}  // namespace hpd
