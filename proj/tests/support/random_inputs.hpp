#pragma once

// Reproducible random inputs for property tests. Uniforms are built from the
// raw mt19937_64 output so sequences do not depend on the standard library.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "hpd/circle.hpp"
#include "hpd/kernel.hpp"

namespace hpd::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin(double p = 0.5) { return uniform() < p; }
  Complex disk(double radius = 1.0) {
    const double rho = radius * std::sqrt(uniform());
    const double t = kTwoPi * uniform();
    return std::polar(rho, t);
  }

 private:
  std::mt19937_64 engine_;
};

/// Analytic polynomial sum_{k=lo}^{hi} c_k e^{ik theta} with c_k in the unit disk.
inline TrigPoly random_analytic(Rng& rng, int lo, int hi) {
  std::vector<Complex> c;
  for (int k = lo; k <= hi; ++k) c.push_back(rng.disk());
  if (std::abs(c.back()) < 1e-3) c.back() = 1.0;
  return TrigPoly(lo, std::move(c));
}

/// |p|^2 + c for a random analytic p: a non-negative real trig density.
inline TrigPoly random_trig_density(Rng& rng, int degree, double floor) {
  const TrigPoly p = random_analytic(rng, 0, degree);
  return (p * p.conjugate()).trimmed() + TrigPoly::constant(floor);
}

/// Positive measure mixing atoms, a trig density and Poisson-smoothed atoms.
/// With `require_density` the absolutely continuous part is bounded below.
inline SpectralMeasure random_measure(Rng& rng, bool require_density = true) {
  std::vector<Atom> atoms;
  const int n_atoms = rng.integer(0, 2);
  for (int i = 0; i < n_atoms; ++i) atoms.push_back({rng.uniform(0.0, kTwoPi), rng.uniform(0.05, 1.0)});
  std::vector<DensityTerm> density;
  if (require_density || rng.coin(0.8)) {
    density.emplace_back(TrigDensity{random_trig_density(rng, rng.integer(0, 3), rng.uniform(0.05, 0.5))});
  }
  if (rng.coin(0.4)) {
    density.emplace_back(PoissonAtomDensity{rng.uniform(0.0, 0.8), {{rng.uniform(0.0, kTwoPi), rng.uniform(0.1, 1.0)}}});
  }
  if (atoms.empty() && density.empty()) atoms.push_back({0.0, 1.0});
  return SpectralMeasure(std::move(atoms), std::move(density));
}

}  // namespace hpd::testing
