#pragma once

// Measures and functions on the unit circle.
//
// Conventions: the reference measure is normalized Haar measure dm (m(T) = 1),
// Fourier coefficients are mu^(n) = \int e^{-in theta} dmu, and the Poisson
// kernel is normalized so that its n-th coefficient is r^{|n|}:
//
//   P_r(theta) = (1 - r^2) / |1 - r e^{i theta}|^2,   \int P_r dm = 1.

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hpd {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr std::size_t kDefaultGrid = 4096;
inline constexpr double kLogFloor = 1e-300;

/// Finitely supported Fourier series sum_n a_n e^{in theta}.
class TrigPoly {
 public:
  TrigPoly() = default;
  TrigPoly(int min_degree, std::vector<Complex> coefficients);

  static TrigPoly constant(Complex c);
  static TrigPoly monomial(int n, Complex c = 1.0);
  /// Coefficients given as (n, a_n) pairs; repeated n are summed.
  static TrigPoly from_terms(std::span<const std::pair<int, Complex>> terms);

  bool is_zero() const { return coeffs_.empty(); }
  int min_degree() const { return min_; }
  int max_degree() const { return min_ + static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coefficients() const { return coeffs_; }

  Complex coeff(int n) const;
  Complex operator()(double theta) const;

  /// Coefficients with |a_n| <= tol removed from both ends.
  TrigPoly trimmed(double tol = 0.0) const;
  /// The function conj(f(theta)): coefficient n becomes conj(a_{-n}).
  TrigPoly conjugate() const;
  /// True when f is real-valued, i.e. a_{-n} = conj(a_n) within tol.
  bool is_real_valued(double tol) const;

  /// Applies `fn(n, a_n) -> Complex` to every stored coefficient.
  template <class Fn>
  TrigPoly transformed(Fn&& fn) const {
    std::vector<Complex> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      out[i] = fn(min_ + static_cast<int>(i), coeffs_[i]);
    }
    return TrigPoly(min_, std::move(out));
  }

  TrigPoly scaled(Complex c) const;
  friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator-(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

 private:
  void normalize();

  int min_ = 0;
  std::vector<Complex> coeffs_;
};

struct RieszParts {
  TrigPoly plus;   // coefficients n >= 0
  TrigPoly minus;  // coefficients n <= 0
};

/// R+ f + R- f = f + f^(0).
RieszParts riesz(const TrigPoly& f);
TrigPoly riesz_plus(const TrigPoly& f);
TrigPoly riesz_minus(const TrigPoly& f);

/// E_N f, computed on coefficients: (E_N f)^(n) = f^(nN).
TrigPoly e_n_average(const TrigPoly& f, int n);

/// Pointwise E_N g(theta) = (1/N) sum_k g((theta + 2 pi k)/N) for any callable g.
template <class Fn>
auto e_n_pointwise(Fn&& g, int n, double theta) {
  using R = decltype(g(theta));
  R sum{};
  for (int k = 0; k < n; ++k) sum += g((theta + kTwoPi * k) / n);
  return sum / static_cast<double>(n);
}

double poisson_kernel(double r, double theta);

struct Atom {
  double theta = 0.0;
  double mass = 0.0;
};

/// Density given by a real-valued trigonometric polynomial.
struct TrigDensity {
  TrigPoly poly;
};

/// Density sampled on theta_j = 2 pi j / G; linear interpolation off-grid.
/// Fourier coefficients are the rectangle-rule values, aliased for |n| > G/2.
struct GridDensity {
  std::vector<double> values;
};

/// sum_k mass_k P_r(theta - theta_k): the Poisson smoothing of an atomic measure.
struct PoissonAtomDensity {
  double radius = 0.0;
  std::vector<Atom> atoms;
};

using DensityTerm = std::variant<TrigDensity, GridDensity, PoissonAtomDensity>;

/// Positive measure on the circle: atoms plus an absolutely continuous part
/// whose density is a sum of terms.
class SpectralMeasure {
 public:
  SpectralMeasure() = default;
  /// Validates: finite angles, positive atom masses, real and essentially
  /// non-negative densities. Angles are reduced to [0, 2 pi); trig terms are merged.
  SpectralMeasure(std::vector<Atom> atoms, std::vector<DensityTerm> density);

  static SpectralMeasure lebesgue(double mass = 1.0);
  static SpectralMeasure atom(double theta, double mass = 1.0);
  static SpectralMeasure trig_density(TrigPoly density);
  static SpectralMeasure grid_density(std::vector<double> values);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<DensityTerm>& density_terms() const { return density_; }
  bool has_density() const { return !density_.empty(); }
  bool is_zero() const { return total_mass() <= 0.0; }

  double atom_mass() const;
  double density_mass() const;
  double total_mass() const { return atom_mass() + density_mass(); }

  Complex fourier(int n) const;

  /// Radon-Nikodym derivative of the absolutely continuous part at theta.
  double density(double theta) const;
  /// Density on theta_j = 2 pi j / grid.
  std::vector<double> density_on_grid(std::size_t grid) const;

  SpectralMeasure absolutely_continuous_part() const;
  SpectralMeasure scaled(double c) const;
  friend SpectralMeasure operator+(const SpectralMeasure& a, const SpectralMeasure& b);

 private:
  std::vector<Atom> atoms_;
  std::vector<DensityTerm> density_;
};

/// P_r * mu; purely absolutely continuous. Throws InputError unless 0 <= r < 1.
SpectralMeasure poisson_convolve(const SpectralMeasure& mu, double r);

struct SzegoMean {
  double value = 0.0;         // exp(\int log w dm), 0 when the density vanishes
  double log_integral = 0.0;  // -inf when value is 0
  bool vanished = false;
  std::size_t floored_points = 0;
  std::string method;  // "mahler" or "quadrature"
};

/// Geometric mean of the absolutely continuous density of `mu`. A single
/// trigonometric-polynomial density is handled exactly through the roots of
/// its associated polynomial (Jensen's formula); every other density uses
/// the rectangle rule on `grid` points with values clipped at kLogFloor.
/// If more than 1% of the grid hits the floor the density is reported as vanishing.
SzegoMean szego_mean(const SpectralMeasure& mu, std::size_t grid = kDefaultGrid);
SzegoMean szego_mean_samples(std::span<const double> density_samples);
/// Exact route for a real trigonometric-polynomial density.
SzegoMean szego_mean_trig(const TrigPoly& density);

double sobolev_norm(const TrigPoly& f, double s);
double wiener_norm(const TrigPoly& f);
double sup_norm(const TrigPoly& f, std::size_t grid = kDefaultGrid);
/// (\int |f|^2 dmu)^{1/2}, exact whenever the Fourier coefficients of mu are.
double l2_norm(const TrigPoly& f, const SpectralMeasure& mu);

struct PoissonLogBound {
  double lhs = 0.0;  // \int log(P_r * mu) dm, mu normalized to mass 1
  double rhs = 0.0;  // log(1 - r^2)
  bool holds = false;
};

PoissonLogBound poisson_log_bound(const SpectralMeasure& mu, double r, std::size_t grid = kDefaultGrid,
                                  double tol = 1e-9);

}  // namespace hpd
