#include <catch_amalgamated.hpp>

#include <cmath>

#include "xychain/entanglement.hpp"
#include "xychain/thermal.hpp"

using namespace xychain;
using Catch::Matchers::WithinAbs;

namespace {

bool throws_code(auto&& fn, Errc code) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

double matrix_path(double J, double B, double gamma, double T) { return concurrence(gibbs_state({T, B, gamma, J})).value; }

// exp(-H/T)/Z by a truncated Taylor series with scaling and squaring; an
// oracle independent of the eigensolver.
ComplexMatrix gibbs_by_series(const ComplexMatrix& h, double T) {
  const double norm = h.max_abs() * 4 / T;
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.5) ++squarings;
  const ComplexMatrix a = h * (-1.0 / (T * std::pow(2.0, squarings)));
  ComplexMatrix term = ComplexMatrix::identity(4), sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * a * (1.0 / k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum * (1.0 / sum.trace().real());
}

}  // namespace

TEST_CASE("isotropic closed-form state equals the Gibbs state") {
  for (double J : {1.0, -1.0, 0.4})
    for (double B : {0.0, 0.5, 1.2, -0.7})
      for (double T : {0.05, 0.3, 1.0, 4.0}) {
        const ComplexMatrix closed = thermal_state_isotropic(J, B, T);
        CHECK(max_abs_diff(closed, gibbs_state({T, B, 0.0, J})) <= 1e-12);
        CHECK(max_abs_diff(closed, gibbs_by_series(build_hamiltonian({2, J, 0.0, B}), T)) <= 1e-12);
      }
}

TEST_CASE("anisotropic closed-form state equals the Gibbs state") {
  for (double J : {1.0, -1.0, 2.0})
    for (double g : {0.0, 0.3, 0.6, 0.8, 1.0})
      for (double T : {0.05, 0.3, 1.0, 4.0}) {
        const ComplexMatrix closed = thermal_state_anisotropic(J, g, T);
        CHECK(max_abs_diff(closed, gibbs_state({T, 0.0, g, J})) <= 1e-12);
        CHECK(max_abs_diff(closed, gibbs_by_series(build_hamiltonian({2, J, g, 0.0}), T)) <= 1e-12);
      }
  CHECK(max_abs_diff(thermal_state_anisotropic(1.0, 0.0, 0.7), thermal_state_isotropic(1.0, 0.0, 0.7)) <= 1e-15);
}

TEST_CASE("Gibbs states are valid and commute with H") {
  for (double T : {0.01, 0.2, 1.0, 10.0})
    for (double g : {0.0, 0.6}) {
      const double B = g == 0.0 ? 0.8 : 0.0;
      const ComplexMatrix rho = gibbs_state({T, B, g, 1.0});
      const ComplexMatrix h = build_hamiltonian({2, 1.0, g, B});
      CHECK(std::abs(rho.trace() - 1.0) <= 1e-12);
      CHECK(hermiticity_defect(rho) <= 1e-14);
      CHECK(eig_hermitian(rho).values.front() >= -1e-14);
      CHECK(max_abs_diff(rho * h, h * rho) <= 1e-12);
    }
}

TEST_CASE("reference concurrence values") {
  CHECK_THAT(concurrence_isotropic_closed_form(1.0, 0.0, 0.1),
             WithinAbs((std::sinh(10.0) - 1) / (std::cosh(10.0) + 1), 1e-15));
  CHECK_THAT(concurrence_isotropic_closed_form(1.0, 0.0, 0.1), WithinAbs(0.99982, 1e-5));
  CHECK_THAT(matrix_path(1.0, 0.0, 0.0, 0.1), WithinAbs(concurrence_isotropic_closed_form(1.0, 0.0, 0.1), 1e-10));
  CHECK(concurrence_isotropic_closed_form(1.0, 0.0, 100.0) == 0.0);
  CHECK(matrix_path(1.0, 0.0, 0.0, 100.0) == 0.0);
  CHECK(concurrence_isotropic_closed_form(1.0, 0.3, 1.1346) <= 1e-4);
  CHECK(concurrence_isotropic_closed_form(1.0, 1.2, 1e-3) <= 1e-12);
  CHECK(matrix_path(1.0, 1.2, 0.0, 1e-3) <= 1e-12);
  CHECK_THAT(concurrence_anisotropic_closed_form(1.0, 0.0, 1.0), WithinAbs(concurrence_isotropic_closed_form(1.0, 0.0, 1.0), 1e-15));
  CHECK(concurrence_anisotropic_closed_form(1.0, 1.0, 0.5) == 0.0);
  const double g06 = concurrence_anisotropic_closed_form(1.0, 0.6, 0.5);
  CHECK(g06 > 0.0);
  CHECK_THAT(g06, WithinAbs((std::sinh(2.0) - std::cosh(1.2)) / (std::cosh(2.0) + std::cosh(1.2)), 1e-15));
  CHECK_THAT(matrix_path(1.0, 0.0, 0.6, 0.5), WithinAbs(g06, 1e-10));
  CHECK_THAT(concurrence_anisotropic_closed_form(1.0, 0.6, 1e-3), WithinAbs(1.0, 1e-12));
}

TEST_CASE("closed forms agree with the matrix path on a grid") {
  int points = 0;
  double dev_iso = 0.0, dev_aniso = 0.0;
  for (int i = 1; i <= 40; ++i) {
    const double T = 0.005 * std::pow(600.0, (i - 1) / 39.0);  // 0.005 .. 3
    for (double B : {0.0, 0.3, 0.6, 0.9, 1.0, 1.1, 1.5, 2.0, -0.5, -1.2, 3.0, 0.99, 1.01}) {
      dev_iso = std::max(dev_iso, std::abs(concurrence_isotropic_closed_form(1.0, B, T) - matrix_path(1.0, B, 0.0, T)));
      ++points;
    }
    for (double g : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 1.0})
      dev_aniso = std::max(dev_aniso, std::abs(concurrence_anisotropic_closed_form(1.0, g, T) - matrix_path(1.0, 0.0, g, T)));
  }
  CHECK(points >= 500);
  CHECK(dev_iso <= 1e-10);
  CHECK(dev_aniso <= 1e-10);
}

TEST_CASE("ferromagnetic and antiferromagnetic chains share concurrence") {
  double dev = 0.0;
  for (double T : {0.01, 0.1, 0.5, 1.0, 1.5})
    for (double B : {0.0, 0.5, 1.0, 1.2})
      dev = std::max(dev, std::abs(matrix_path(1.0, B, 0.0, T) - matrix_path(-1.0, B, 0.0, T)));
  for (double T : {0.01, 0.1, 0.5, 1.0})
    for (double g : {0.2, 0.6, 0.8})
      dev = std::max(dev, std::abs(matrix_path(1.0, 0.0, g, T) - matrix_path(-1.0, 0.0, g, T)));
  CHECK(dev <= 1e-10);
  CHECK_THAT(matrix_path(-1.0, 0.0, 0.0, 1.0), WithinAbs((std::sinh(1.0) - 1) / (std::cosh(1.0) + 1), 1e-10));
}

TEST_CASE("isotropic critical temperature") {
  const auto tc = critical_temperature_isotropic(1.0);
  CHECK_THAT(tc.value, WithinAbs(1.0 / std::log(1.0 + std::sqrt(2.0)), 1e-15));
  CHECK_THAT(tc.value, WithinAbs(1.1346, 1e-4));
  CHECK(tc.residual <= 1e-10);
  CHECK_THAT(critical_temperature_isotropic(2.0).value, WithinAbs(2.26918, 1e-5));
  CHECK(critical_temperature_isotropic(-1.0).value == tc.value);
  // concurrence vanishes just above T_c for the ferromagnet, whatever the field
  for (double B : {0.0, 0.5, 1.0, 1.2, 2.0}) {
    CHECK(matrix_path(-1.0, B, 0.0, tc.value * 1.001) <= 1e-14);
    CHECK(matrix_path(1.0, B, 0.0, tc.value * 1.001) <= 1e-14);
    CHECK(matrix_path(1.0, B, 0.0, 3.0) <= 1e-14);
  }
  CHECK(throws_code([] { critical_temperature_isotropic(0.0); }, Errc::ZeroCoupling));
}

TEST_CASE("zero-temperature limit and the field-driven step") {
  CHECK(zero_temperature_limit(1.0, 0.5) == 1.0);
  CHECK(zero_temperature_limit(1.0, 1.0) == 0.5);
  CHECK(zero_temperature_limit(1.0, 1.5) == 0.0);
  CHECK(concurrence_isotropic_closed_form(1.0, 0.9, 1e-3) >= 0.99);
  CHECK(concurrence_isotropic_closed_form(1.0, 1.1, 1e-3) <= 0.01);
  CHECK(matrix_path(1.0, 0.9, 0.0, 1e-3) >= 0.99);
  CHECK(matrix_path(1.0, 1.1, 0.0, 1e-3) <= 0.01);
  // finite T at B = J stays continuous and does not snap to the limit
  CHECK_THAT(concurrence_isotropic_closed_form(1.0, 1.0, 1e-3), WithinAbs(0.5, 1e-6));
}

TEST_CASE("anisotropic critical temperature") {
  const auto t0 = critical_temperature_anisotropic(1.0, 0.0);
  CHECK_THAT(t0.value, WithinAbs(critical_temperature_isotropic(1.0).value, 1e-12));

  const auto t6 = critical_temperature_anisotropic(1.0, 0.6);
  CHECK(t6.value < 1.13459);
  CHECK(std::abs(std::sinh(1.0 / t6.value) - std::cosh(0.6 / t6.value)) <= 1e-10);
  CHECK(t6.residual <= 1e-10);
  CHECK(concurrence_anisotropic_closed_form(1.0, 0.6, t6.value * 1.001) == 0.0);
  CHECK(concurrence_anisotropic_closed_form(1.0, 0.6, t6.value * 0.999) > 0.0);

  double prev = 2.0;
  for (double g = 0.0; g < 0.99; g += 0.05) {
    const double tc = critical_temperature_anisotropic(1.0, g).value;
    CHECK(tc < prev);
    prev = tc;
  }
  CHECK(critical_temperature_anisotropic(1.0, 0.999).residual <= 1e-10);
  CHECK_THAT(critical_temperature_anisotropic(-2.0, 0.6).value, WithinAbs(2 * t6.value, 1e-12));

  CHECK(throws_code([] { critical_temperature_anisotropic(1.0, 1.0); }, Errc::NoRoot));
  CHECK(throws_code([] { critical_temperature_anisotropic(1.0, 1.2); }, Errc::BadGamma));
  CHECK(throws_code([] { critical_temperature_anisotropic(0.0, 0.5); }, Errc::ZeroCoupling));
}

TEST_CASE("Ising limit carries no thermal entanglement") {
  for (double T : {1e-3, 0.01, 0.1, 0.5, 1.0, 5.0}) {
    CHECK(concurrence_anisotropic_closed_form(1.0, 1.0, T) == 0.0);
    CHECK(matrix_path(1.0, 0.0, 1.0, T) <= 1e-12);
  }
}

TEST_CASE("anisotropic concurrence decays monotonically with temperature") {
  for (double g : {0.0, 0.3, 0.6, 0.8}) {
    const double tc = critical_temperature_anisotropic(1.0, g).value;
    double prev = 1.0 + 1e-15;
    for (int i = 1; i <= 2000; ++i) {
      const double c = concurrence_anisotropic_closed_form(1.0, g, tc * i / 2000.0);
      CHECK(c <= prev);
      prev = c;
    }
  }
}

TEST_CASE("closed forms stay finite at very low temperature") {
  for (double T : {1e-2, 1e-3, 1e-5, 1e-8}) {
    const double c = concurrence_isotropic_closed_form(1.0, 0.5, T);
    CHECK(std::isfinite(c));
    CHECK_THAT(c, WithinAbs(1.0, 1e-6));
    const ComplexMatrix rho = thermal_state_isotropic(1.0, 0.5, T);
    CHECK(std::abs(rho.trace() - 1.0) <= 1e-14);
    CHECK_THAT(concurrence(rho).value, WithinAbs(c, 1e-10));
  }
}

TEST_CASE("thermal errors") {
  CHECK(throws_code([] { thermal_state_isotropic(1.0, 0.0, 0.0); }, Errc::BadTemperature));
  CHECK(throws_code([] { thermal_state_isotropic(1.0, 0.0, -1.0); }, Errc::BadTemperature));
  CHECK(throws_code([] { concurrence_isotropic_closed_form(1.0, 0.0, 0.0); }, Errc::BadTemperature));
  CHECK(throws_code([] { thermal_state_anisotropic(1.0, -0.1, 1.0); }, Errc::BadGamma));
  CHECK(throws_code([] { concurrence_anisotropic_closed_form(1.0, 1.5, 1.0); }, Errc::BadGamma));
  CHECK(throws_code([] { gibbs_state({0.0, 0.0, 0.0, 1.0}); }, Errc::BadTemperature));
}
