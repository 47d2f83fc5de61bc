#include "hpd/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "hpd/errors.hpp"

namespace hpd {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// A Poisson-type symbol split into parts with exact Hankel evaluation.
struct Symbol {
  std::vector<PoissonAtomDensity> poisson;
  TrigPoly trig;      // trigonometric terms plus sampled terms cut at the truncation
  double tail = 0.0;  // sum of |phi^(m)| over discarded m < 0
};

Symbol split_symbol(const SpectralMeasure& phi, int n_sym) {
  Symbol out;
  for (const auto& term : phi.density_terms()) {
    if (auto* t = std::get_if<TrigDensity>(&term)) {
      out.trig = out.trig + t->poly;
    } else if (auto* p = std::get_if<PoissonAtomDensity>(&term)) {
      out.poisson.push_back(*p);
    } else {
      const SpectralMeasure single({}, {term});
      const int half = static_cast<int>(std::get<GridDensity>(term).values.size() / 2) - 1;
      const int keep = std::max(0, std::min(n_sym, half));
      std::vector<Complex> c(2 * static_cast<std::size_t>(keep) + 1);
      for (int m = -keep; m <= keep; ++m) c[static_cast<std::size_t>(m + keep)] = single.fourier(m);
      out.trig = out.trig + TrigPoly(-keep, std::move(c));
      for (int m = keep + 1; m <= half; ++m) out.tail += std::abs(single.fourier(-m));
    }
  }
  return out;
}

void require_analytic(const TrigPoly& f, int lowest, const char* name) {
  if (!f.is_zero() && f.min_degree() < lowest) {
    throw InputError(std::string(name) + " must be analytic" + (lowest > 0 ? " with zero mean" : ""));
  }
}

Complex horner(const TrigPoly& g, Complex z) {
  if (g.is_zero()) return 0.0;
  Complex acc = 0.0;
  const auto c = g.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  for (int k = 0; k < g.min_degree(); ++k) acc *= z;
  return acc;
}

// theta -> E_N[P_s * H_phi(g)](theta) for analytic g.
class HankelEvaluator {
 public:
  HankelEvaluator(const Symbol& symbol, const TrigPoly& g, double s, int n) {
    for (const auto& p : symbol.poisson) {
      const double w = std::pow(p.radius * s, n);
      for (const auto& a : p.atoms) {
        poles_.push_back({a.mass * horner(g, std::polar(p.radius, a.theta)), w, n * a.theta});
      }
    }
    const TrigPoly h = hankel_apply(symbol.trig, g).transformed(
        [s](int k, Complex c) { return c * std::pow(s, std::abs(k)); });
    trig_ = e_n_average(h, n);
  }

  Complex operator()(double theta) const {
    Complex value = trig_(theta);
    for (const auto& p : poles_) value += p.residue / (1.0 - p.weight * std::polar(1.0, p.phase - theta));
    return value;
  }

 private:
  struct Pole {
    Complex residue;
    double weight;
    double phase;
  };
  std::vector<Pole> poles_;
  TrigPoly trig_;
};

InequalityReport scan(Inequality which, const std::function<Complex(double)>& numerator,
                      const std::function<double(double)>& denominator_sq, double bound, double tail_factor,
                      const HankelOptions& opts) {
  if (opts.grid == 0) throw InputError("grid size must be positive");
  InequalityReport out;
  out.which = which;
  out.bound = bound;
  out.grid = opts.grid;
  out.min_denominator = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < opts.grid; ++j) {
    const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(opts.grid);
    const double den = std::sqrt(std::max(denominator_sq(theta), 0.0));
    const double num = std::abs(numerator(theta));
    out.min_denominator = std::min(out.min_denominator, den);
    double ratio = 0.0;
    if (den > 0.0) {
      ratio = num / den;
    } else if (num > 0.0) {
      ratio = std::numeric_limits<double>::infinity();
    }
    if (ratio > out.sup_ratio) {
      out.sup_ratio = ratio;
      out.argmax_theta = theta;
    }
  }
  if (tail_factor > 0.0) {
    out.truncation_error = out.min_denominator > 0.0 ? tail_factor / out.min_denominator
                                                     : std::numeric_limits<double>::infinity();
  }
  out.slack = out.bound - out.sup_ratio;
  out.holds = out.sup_ratio - out.truncation_error <= out.bound + opts.tol * std::max(1.0, out.bound);
  return out;
}

InequalityReport zero_report(Inequality which, const HankelOptions& opts) {
  InequalityReport out;
  out.which = which;
  out.holds = true;
  out.grid = opts.grid;
  return out;
}

void require_measure(const SpectralMeasure& mu) {
  if (!(mu.total_mass() > 0.0)) throw InputError("the measure must be non-zero");
}

}  // namespace

TrigPoly hankel_apply(const TrigPoly& phi, const TrigPoly& f) { return riesz_minus(phi * f); }

InequalityReport two_weight_check(const SpectralMeasure& mu, double r, const TrigPoly& f, const HankelOptions& opts) {
  require_measure(mu);
  if (f.is_zero()) throw InputError("f must not be identically zero");
  require_analytic(f, 1, "f");
  const SpectralMeasure phi = poisson_convolve(mu, r);
  const Symbol symbol = split_symbol(phi, opts.symbol_truncation);
  const HankelEvaluator h(symbol, f, 1.0, 1);
  const double bound = r / std::sqrt(1.0 - r * r) * l2_norm(f, phi);
  return scan(
      Inequality::two_weight, [&](double t) { return h(t); }, [&](double t) { return phi.density(t); }, bound,
      symbol.tail * wiener_norm(f), opts);
}

InequalityReport en_inequality_check(const SpectralMeasure& mu, const TrigPoly& b0, const TrigPoly& f, int n,
                                     const HankelOptions& opts) {
  require_measure(mu);
  if (n < 1) throw InputError("N must be >= 1");
  if (b0.is_zero()) throw InputError("B0 must not be identically zero");
  require_analytic(b0, 0, "B0");
  if (b0.max_degree() > n - 1) throw InputError("B0 must have degree at most N - 1");
  require_analytic(f, 1, "f");
  if (f.is_zero()) return zero_report(Inequality::en, opts);

  const SpectralMeasure phi = poisson_convolve(mu, kInvSqrt2);
  const Symbol symbol = split_symbol(phi, opts.symbol_truncation);
  const TrigPoly g = b0 * f;
  const HankelEvaluator h(symbol, g, 1.0, n);
  auto weight = [&](double x) { return std::norm(b0(x)) * phi.density(x); };
  const double bound = l2_norm(f, phi);
  return scan(
      Inequality::en, [&](double t) { return h(t); }, [&](double t) { return e_n_pointwise(weight, n, t); }, bound,
      symbol.tail * wiener_norm(g), opts);
}

InequalityReport smoothed_inequality_check(const SpectralMeasure& mu, const TrigPoly& f, const HankelOptions& opts) {
  require_measure(mu);
  require_analytic(f, 1, "f");
  if (f.is_zero()) return zero_report(Inequality::smoothed, opts);

  const SpectralMeasure phi = poisson_convolve(mu, std::sqrt(2.0 / 3.0));
  const SpectralMeasure smoothed_phi = poisson_convolve(phi, kInvSqrt2);
  const Symbol symbol = split_symbol(phi, opts.symbol_truncation);
  const HankelEvaluator h(symbol, f, kInvSqrt2, 1);
  const double bound = l2_norm(f, phi);
  return scan(
      Inequality::smoothed, [&](double t) { return h(t); }, [&](double t) { return smoothed_phi.density(t); },
      bound, symbol.tail * wiener_norm(f), opts);
}

double h2_linf_norm(const TrigPoly& phi, int n_trunc, std::size_t grid) {
  if (n_trunc < 0) throw InputError("n_trunc must be >= 0");
  if (grid == 0) throw InputError("grid size must be positive");
  if (phi.is_zero() || phi.min_degree() > 0) return 0.0;
  const int lowest = phi.min_degree();
  double best = 0.0;
  for (std::size_t j = 0; j < grid; ++j) {
    const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(grid);
    // tail = sum_{m <= -n} phi^(m) e^{im theta}, built from the most negative m upward.
    Complex tail = 0.0;
    double sum = 0.0;
    for (int n = -lowest; n >= 0; --n) {
      tail += phi.coeff(-n) * std::polar(1.0, -n * theta);
      if (n <= n_trunc) sum += std::norm(tail);
    }
    best = std::max(best, sum);
  }
  return std::sqrt(best);
}

namespace {

constexpr double kDivergingRatio = 0.95;
constexpr double kConvergingRatio = 0.8;

// Partial sums of sum_{d=0}^{D} term(d) at D/8, D/4, D/2, D and a trend
// read off the ratios of consecutive increments.
SeriesTest series_test(const std::vector<double>& partial, bool truncated) {
  SeriesTest out;
  const std::size_t top = partial.size() - 1;
  out.value = partial.back();
  if (!truncated) {
    out.partial_sums = {out.value};
    out.trend = Trend::converging;
    return out;
  }
  if (top < 8) {
    out.partial_sums = {out.value};
    return out;
  }
  for (std::size_t d : {top / 8, top / 4, top / 2, top}) out.partial_sums.push_back(partial[d]);
  const auto& s = out.partial_sums;
  const double d1 = s[1] - s[0];
  const double d2 = s[2] - s[1];
  const double d3 = s[3] - s[2];
  if (d3 <= 1e-12 * std::max(std::abs(s[3]), std::numeric_limits<double>::min())) {
    out.trend = Trend::converging;
  } else if (d1 > 0.0 && d2 > 0.0 && d2 / d1 >= kDivergingRatio && d3 / d2 >= kDivergingRatio) {
    out.trend = Trend::diverging;
  } else if (d1 > 0.0 && d2 > 0.0 && d2 / d1 <= kConvergingRatio && d3 / d2 <= kConvergingRatio) {
    out.trend = Trend::converging;
  }
  return out;
}

// prefix[d] = sum_{k=0}^{d} term(k)
template <class Term>
std::vector<double> prefix_sums(int top, Term&& term) {
  std::vector<double> out(static_cast<std::size_t>(top) + 1);
  double acc = 0.0;
  for (int d = 0; d <= top; ++d) {
    acc += term(d);
    out[static_cast<std::size_t>(d)] = acc;
  }
  return out;
}

// sum_{n=0}^{D} (sum_{m=-D}^{-n} phi^(m))^2 for the symbol truncated at degree D.
double positive_sum(const TrigPoly& phi, int degree) {
  double tail = 0.0;
  double sum = 0.0;
  for (int n = degree; n >= 0; --n) {
    tail += phi.coeff(-n).real();
    sum += tail * tail;
  }
  return sum;
}

}  // namespace

BoundednessReport boundedness_conditions(const TrigPoly& phi, bool truncated) {
  BoundednessReport out;
  out.truncated = truncated;
  const TrigPoly minus = riesz_minus(phi);
  const int top = minus.is_zero() ? 0 : -minus.min_degree();

  out.h_half = series_test(prefix_sums(top, [&](int d) { return std::sqrt(1.0 + double(d) * d) * std::norm(minus.coeff(-d)); }),
                           truncated);
  out.h_one = series_test(prefix_sums(top, [&](int d) { return (1.0 + double(d) * d) * std::norm(minus.coeff(-d)); }),
                          truncated);

  out.positive_coefficients = !minus.is_zero();
  for (const auto& c : minus.coefficients()) {
    if (c.imag() != 0.0 || c.real() < 0.0) out.positive_coefficients = false;
  }

  if (!truncated) {
    out.verdict = TriState::bounded;
    out.basis = "finite";
  } else if (out.h_one.trend == Trend::converging) {
    out.verdict = TriState::bounded;
    out.basis = "sobolev";
  } else if (out.h_half.trend == Trend::diverging) {
    out.verdict = TriState::unbounded;
    out.basis = "sobolev";
  } else {
    out.verdict = TriState::inconclusive;
    out.basis = "sobolev";
  }

  if (out.positive_coefficients) {
    std::vector<double> partial(static_cast<std::size_t>(top) + 1, 0.0);
    if (truncated && top >= 8) {
      for (int d : {top / 8, top / 4, top / 2, top}) partial[static_cast<std::size_t>(d)] = positive_sum(minus, d);
    } else {
      partial.back() = positive_sum(minus, top);
    }
    out.positive_test = series_test(partial, truncated);
    if (truncated && out.positive_test->trend != Trend::undetermined) {
      out.verdict = out.positive_test->trend == Trend::converging ? TriState::bounded : TriState::unbounded;
      out.basis = "positive-coefficients";
    }
  }
  return out;
}

HlpPairing hlp_pairing(const std::vector<double>& a, const std::vector<double>& b) {
  for (double x : a) {
    if (!(x >= 0.0)) throw InputError("sequence entries must be non-negative");
  }
  for (double x : b) {
    if (!(x >= 0.0)) throw InputError("sequence entries must be non-negative");
  }
  // Pairs with max(m, n) = k contribute (a_k B_k + b_k A_{k-1}) / k.
  HlpPairing out;
  const std::size_t len = std::max(a.size(), b.size());
  double prefix_a = 0.0;
  double prefix_b = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double ak = i < a.size() ? a[i] : 0.0;
    const double bk = i < b.size() ? b[i] : 0.0;
    prefix_b += bk;
    out.pairing += (ak * prefix_b + bk * prefix_a) / static_cast<double>(i + 1);
    prefix_a += ak;
  }
  double na = 0.0;
  double nb = 0.0;
  for (double x : a) na += x * x;
  for (double x : b) nb += x * x;
  out.bound = 4.0 * std::sqrt(na) * std::sqrt(nb);
  out.holds = out.pairing <= out.bound * (1.0 + 1e-12);
  return out;
}

double lem_hlp_sum(const std::vector<Complex>& a, int m) {
  if (m < 0) throw InputError("M must be >= 0");
  double norm = 0.0;
  for (const auto& x : a) norm += std::norm(x);
  norm = std::sqrt(norm);
  const double scale = norm > 1.0 ? 1.0 / norm : 1.0;
  double prefix = 0.0;
  double sum = 0.0;
  for (int k = 0; k <= m; ++k) {
    if (static_cast<std::size_t>(k) < a.size()) prefix += scale * std::abs(a[static_cast<std::size_t>(k)]);
    sum += prefix * prefix / (1.0 + double(k) * k);
  }
  return sum;
}

std::string to_string(Inequality which) {
  switch (which) {
    case Inequality::two_weight:
      return "two-weight";
    case Inequality::en:
      return "en";
    case Inequality::smoothed:
      return "smoothed";
  }
  return "unknown";
}

std::string to_string(Trend trend) {
  switch (trend) {
    case Trend::converging:
      return "converging";
    case Trend::diverging:
      return "diverging";
    case Trend::undetermined:
      return "undetermined";
  }
  return "unknown";
}

std::string to_string(TriState state) {
  switch (state) {
    case TriState::bounded:
      return "bounded";
    case TriState::unbounded:
      return "unbounded";
    case TriState::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

}  // namespace hpd
