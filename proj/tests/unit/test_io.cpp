#include <doctest.h>

#include <cmath>
#include <functional>
#include <string>

#include "../support/random_inputs.hpp"
#include "hpd/errors.hpp"
#include "hpd/io.hpp"

using namespace hpd;
using hpd::testing::Rng;

namespace {

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("measure shorthands") {
    const auto leb = io::parse_measure("lebesgue");
    CHECK(leb.atoms().empty());
    CHECK(leb.density(1.0) == doctest::Approx(1.0));
    const auto atom = io::parse_measure("atom0");
    REQUIRE(atom.atoms().size() == 1);
    CHECK(atom.atoms()[0].theta == 0.0);
    CHECK(atom.atoms()[0].mass == 1.0);
    CHECK(io::parse_measure("poisson:0.5").fourier(3).real() == doctest::Approx(0.125));
    CHECK(io::parse_measure("cos:2:2").density(0.0) == doctest::Approx(4.0));
    CHECK_THROWS_AS(io::parse_measure("poisson:1.5"), InputError);
    CHECK_THROWS_AS(io::parse_measure("nonsense"), InputError);
  }

  TEST_CASE("inline measure") {
    const auto m = io::parse_measure(
        R"({"atoms":[{"theta":3.14159,"mass":0.5}],"density":{"kind":"trig","coeffs":[[0,1,0]]}})");
    CHECK(m.total_mass() == doctest::Approx(1.5));
  }

  TEST_CASE("round trip keeps Fourier coefficients") {
    Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
      auto mu = hpd::testing::random_measure(rng, false);
      if (rng.coin(0.3)) {
        std::vector<double> g(64);
        for (auto& x : g) x = rng.uniform();
        mu = mu + SpectralMeasure::grid_density(g);
      }
      const auto back = io::parse_measure(io::to_json(mu).dump());
      for (int n = -64; n <= 64; ++n) CHECK(std::abs(back.fourier(n) - mu.fourier(n)) < 1e-12);
    }
  }

  TEST_CASE("errors carry a line and column") {
    const std::string text = "{\n  \"atoms\": [\n    {\"theta\": 0, \"mass\": -1}\n  ]\n}";
    const std::string msg = error_of([&] { io::parse_measure(text); });
    CHECK(msg.find("<inline>:3:") != std::string::npos);
    CHECK(msg.find("positive") != std::string::npos);

    const std::string syntax = error_of([] { io::parse_measure("{\"atoms\": [}"); });
    CHECK(syntax.find("<inline>:1:") != std::string::npos);

    CHECK_FALSE(error_of([] { io::parse_measure(R"({"atoms":[],"colour":1})"); }).empty());
    CHECK_FALSE(error_of([] { io::parse_measure("/no/such/file.json"); }).empty());
    CHECK_FALSE(error_of([] { io::parse_measure(R"({"density":{"kind":"grid","values":[1,-2]}})"); }).empty());
  }

  TEST_CASE("trig polynomials and symbols") {
    CHECK(io::parse_trig("monomial:3") == TrigPoly::monomial(3));
    CHECK(io::parse_trig("zero").is_zero());
    const auto f = io::parse_trig(R"({"coeffs":[[1,0.5],[-2,0,1]]})");
    CHECK(f.coeff(-2) == Complex(0, 1));
    CHECK(io::parse_trig(io::to_json(f).dump()) == f);

    const auto geo = io::parse_symbol(R"({"kind":"geometric","ratio":0.5,"terms":3})");
    CHECK(geo.truncated);
    CHECK(geo.poly.coeff(-3) == Complex(0.125));
    const auto har = io::parse_symbol(R"({"kind":"harmonic","terms":4})");
    CHECK(har.poly.coeff(-4) == Complex(0.25));
    CHECK_FALSE(io::parse_symbol(R"({"coeffs":[[-1,1]]})").truncated);
  }

  TEST_CASE("sequences, trees and matrices") {
    const auto a = io::parse_alpha(R"({"q":3,"alpha":[1,[0.1,0.2]]})", 2, 0);
    CHECK(a.arity() == 3);
    CHECK(a(1) == Complex(0.1, 0.2));
    CHECK(io::parse_alpha("beta", 2, 4).max_index() == 4);
    CHECK_THROWS_AS(io::parse_alpha(R"({"alpha":[[1,1]]})", 2, 0), InputError);

    CHECK(io::parse_tree(R"({"kind":"homogeneous","q":2,"depth":3})").size() == 15);
    CHECK(io::parse_tree(R"({"kind":"tq1","q":3,"n":2})").size() == 7);
    CHECK(io::parse_tree(R"({"kind":"parent_array","parents":[-1,0,0,1]})").size() == 4);

    const auto k = branching_toeplitz(HpdSequence(2, {1.0, Complex(0.3, 0.1)}), truncate(2, 1));
    const auto back = io::parse_matrix(io::to_json(k).dump());
    CHECK(back.entries() == k.entries());
    CHECK(back.labels() == k.labels());
    CHECK(io::to_csv(k).rfind("1,0,0.29999999999999999,0.10000000000000001,", 0) == 0);
  }

  TEST_CASE("non-finite numbers are written as strings") {
    CHECK(io::number(1.5) == nlohmann::json(1.5));
    CHECK(io::number(std::nan("")).is_string());
    CHECK(io::number(-INFINITY) == nlohmann::json("-inf"));
  }
}
