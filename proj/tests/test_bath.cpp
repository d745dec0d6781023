#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eet/bath.hpp"
#include "eet/units.hpp"

using namespace eet;

namespace {
const BathModel gaas = BathModel::gaas_10k();
}

TEST_CASE("bath model validation and preset") {
  CHECK(gaas.eta_ps2 == 0.035);
  CHECK(gaas.omega_c_rad_ps == 1.41);
  CHECK(gaas.r_corr_nm == 3.0);
  CHECK(gaas.temperature_K == 10.0);
  CHECK_NOTHROW(gaas.validate());
  BathModel bad = gaas;
  bad.temperature_K = 0.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = gaas;
  bad.omega_c_rad_ps = -1.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = gaas;
  bad.eta_ps2 = -0.01;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("derive_bath_params") {
  SUBCASE("omega_c = sqrt(2) u / l") {
    // u = 1000 m/s = 1 nm/ps against l = 1 nm
    const MaterialParams m{7.0, 1.0, 5300.0, 1000.0, 1.0};
    CHECK(derive_bath_params(m).omega_c_rad_ps ==
          doctest::Approx(std::numbers::sqrt2).epsilon(1e-14));
  }
  SUBCASE("equal deformation potentials decouple the bath") {
    const MaterialParams m{6.5, 6.5, 5300.0, 4700.0, 5.0};
    CHECK(derive_bath_params(m).eta_ps2 == 0.0);
  }
  SUBCASE("any u, l with sqrt(2) u / l = 1.41 reproduces the cutoff") {
    const double l = 5.0;                                   // nm
    const double u = 1.41 * l / std::numbers::sqrt2 * 1e3;  // m/s
    const MaterialParams m{8.5, 0.5, 5317.0, u, l};
    const DerivedBathParams derived = derive_bath_params(m);
    CHECK(derived.omega_c_rad_ps == doctest::Approx(1.41).epsilon(1e-12));
    // plausible GaAs numbers should land near the quoted eta magnitude
    CHECK(derived.eta_ps2 > 0.0);
    CHECK(std::isfinite(derived.eta_ps2));
  }
  SUBCASE("GaAs-like constants give eta of the right order") {
    const MaterialParams m{9.0, 0.5, 5317.0, 4730.0, 4.74};
    const DerivedBathParams derived = derive_bath_params(m);
    CHECK(derived.eta_ps2 > 0.01);
    CHECK(derived.eta_ps2 < 0.1);
    CHECK(derived.omega_c_rad_ps == doctest::Approx(1.41).epsilon(2e-3));
  }
  SUBCASE("invalid inputs") {
    CHECK_THROWS_AS(derive_bath_params({7.0, 1.0, -1.0, 1000.0, 1.0}), Error);
    CHECK_THROWS_AS(derive_bath_params({7.0, 1.0, 5300.0, 0.0, 1.0}), Error);
    CHECK_THROWS_AS(derive_bath_params({7.0, 1.0, 5300.0, 1000.0, -2.0}),
                    Error);
    CHECK_THROWS_AS(derive_bath_params({0.0, 1.0, 5300.0, 1000.0, 1.0}),
                    Error);
    CHECK_THROWS_AS(derive_bath_params({7.0, -1.0, 5300.0, 1000.0, 1.0}),
                    Error);
  }
}

TEST_CASE("spectral_density") {
  CHECK(spectral_density(-0.5, gaas) == 0.0);
  CHECK(spectral_density(0.0, gaas) == 0.0);
  CHECK(std::abs(spectral_density(1.41, gaas) - 0.03610) <= 1e-4);
  SUBCASE("argmax at omega_c sqrt(3/2)") {
    double best_w = 0.0;
    double best = -1.0;
    for (double w = 0.5; w <= 3.0; w += 1e-4) {
      const double j = spectral_density(w, gaas);
      if (j > best) {
        best = j;
        best_w = w;
      }
    }
    CHECK(std::abs(best_w - 1.7268) <= 1e-3);
  }
  SUBCASE("vanishes on the whole negative axis") {
    for (double w = -20.0; w < 0.0; w += 0.37) {
      CHECK(spectral_density(w, gaas) == 0.0);
    }
  }
}

TEST_CASE("bose_einstein") {
  const double w_thermal = units::thermal_frequency(10.0);
  CHECK(std::abs(bose_einstein(w_thermal, 10.0) - 0.58198) <= 1e-5);
  CHECK(bose_einstein(20.0 * w_thermal, 10.0) < 3e-9);
  CHECK_THROWS_AS(bose_einstein(0.0, 10.0), Error);
  SUBCASE("n(-w) = -(n(w) + 1)") {
    for (double w = 0.05; w < 8.0; w += 0.13) {
      const double lhs = bose_einstein(-w, 10.0);
      const double rhs = -(bose_einstein(w, 10.0) + 1.0);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
    }
  }
}

TEST_CASE("correlation_c") {
  CHECK(std::abs(correlation_c(1.0, gaas) - 0.24897) <= 1e-4);
  CHECK(std::abs(correlation_c(-1.0, gaas) - 0.11599) <= 1e-4);
  CHECK(correlation_c(0.0, gaas) == 0.0);

  SUBCASE("detailed balance on a grid") {
    const double w_thermal = units::thermal_frequency(gaas.temperature_K);
    for (double w = 0.01; w <= 10.0; w += 0.01) {
      const double ratio = std::exp(-w / w_thermal);
      const double lhs = correlation_c(-w, gaas);
      const double rhs = ratio * correlation_c(w, gaas);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(lhs, rhs));
    }
  }
  SUBCASE("nonnegative everywhere") {
    for (double w = -30.0; w <= 30.0; w += 0.037) {
      CHECK(correlation_c(w, gaas) >= 0.0);
    }
  }
  SUBCASE("continuous at zero") {
    // C ~ 2 pi eta w^2 w_thermal near 0, so |C(1e-8)| is of order 1e-17.
    CHECK(std::abs(correlation_c(1e-8, gaas)) < 1e-16);
    CHECK(std::abs(correlation_c(-1e-8, gaas)) < 1e-16);
  }
  SUBCASE("peak magnitude matches the tabulated largest log C") {
    double best = -1.0;
    for (double w = 0.1; w <= 4.0; w += 1e-4) {
      best = std::max(best, correlation_c(w, gaas));
    }
    const double log_c = std::log10(best * units::ps_inv_to_s_inv);
    CHECK(std::abs(log_c - 11.54) <= 0.10);
  }
  SUBCASE("no overflow or NaN far outside the cutoff") {
    for (double w : {-1e4, -300.0, -50.0, 50.0, 300.0, 1e4}) {
      const double c = correlation_c(w, gaas);
      CHECK(std::isfinite(c));
      CHECK(c >= 0.0);
    }
  }
}

TEST_CASE("spatial_correlation") {
  CHECK(spatial_correlation(0.0, 3.0) == 1.0);
  CHECK(std::abs(spatial_correlation(3.0, 3.0) - 0.36788) <= 1e-5);
  CHECK(std::abs(spatial_correlation(5.0, 3.0) - 0.18888) <= 1e-5);
  CHECK_THROWS_AS(spatial_correlation(-1.0, 3.0), Error);
  CHECK_THROWS_AS(spatial_correlation(1.0, 0.0), Error);
}

TEST_CASE("pv_hilbert") {
  SUBCASE("zero coupling gives exactly zero") {
    BathModel silent = gaas;
    silent.eta_ps2 = 0.0;
    CHECK(pv_hilbert(1.3, silent) == 0.0);
  }
  SUBCASE("matches an independent adaptive reference") {
    // Frozen values from a weighted-Cauchy quadrature of the same integral
    // (absolute error ~1e-13).
    const struct {
      double omega0;
      double value;
    } reference[] = {
        {0.0, -0.273161944573115},
        {0.5, -0.622691052040118},
        {1.0, -0.586793976706423},
        {1.7269, 0.182403069301959},
        {2.43082791679, 0.659872560630711},
        {3.0, 0.61375653446231},
        {-1.0, -0.10914874730954},
        {-2.5, -0.344807429138318},
        {5.0, 0.232851605706633},
    };
    for (const auto& point : reference) {
      const double value = pv_hilbert(point.omega0, gaas, 1e-9);
      CHECK(std::abs(value - point.value) <= 1e-6 * std::abs(point.value));
    }
  }
  SUBCASE("deterministic") {
    CHECK(pv_hilbert(1.234, gaas) == pv_hilbert(1.234, gaas));
  }
  SUBCASE("tolerance domain") {
    CHECK_THROWS_AS(pv_hilbert(1.0, gaas, 0.0), Error);
    CHECK_THROWS_AS(pv_hilbert(1.0, gaas, 1e-2), Error);
    CHECK_NOTHROW(pv_hilbert(1.0, gaas, 1e-3));
  }
}
