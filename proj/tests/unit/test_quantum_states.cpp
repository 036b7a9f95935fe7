#include <gtest/gtest.h>

#include <numeric>

#include "generators.hpp"
#include "oracles.hpp"
#include "photonpath/photonpath.hpp"

namespace pp = photonpath;
using pp::cdouble;
using pp::kPi;

namespace {

pp::ModeSpec linear_mode() {
  // Propagation along +z, polarization along x.
  return {pp::WaveParams::from_wavelength(500e-9), {0.0, 0.0}, {pp::CVec3(1, 0, 0)}, 1e-12};
}

pp::ModeSpec circular_mode() {
  const double h = 1 / std::sqrt(2.0);
  return {pp::WaveParams::from_wavelength(500e-9), {0.0, 0.0}, {pp::CVec3(h, cdouble(0, h), 0)}, 1e-12};
}

pp::ModeSpec elliptical_mode() {
  return {pp::WaveParams::from_wavelength(500e-9), {0.0, 0.0}, {pp::CVec3(0.8, cdouble(0.36, 0.48), 0)}, 1e-12};
}

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

TEST(PhotonStatistics, Examples) {
  const auto c = pp::photon_statistics(pp::CoherentState{2.0});
  EXPECT_NEAR(c.mean, 4.0, 1e-12);
  EXPECT_NEAR(c.variance, 4.0, 1e-12);
  const auto n = pp::photon_statistics(pp::NumberState{3});
  EXPECT_EQ(n.mean, 3.0);
  EXPECT_EQ(n.variance, 0.0);
  ASSERT_EQ(n.pmf.size(), 4u);
  EXPECT_EQ(n.pmf[3], 1.0);
  const auto t = pp::photon_statistics(pp::ThermalState::from_zeta(0.5));
  EXPECT_NEAR(t.mean, 2.0, 1e-12);
  EXPECT_NEAR(t.variance, 6.0, 1e-12);
}

TEST(PhotonStatistics, PmfsNormalizedAndMomentsMatch) {
  pp::testing::Gen gen(31);
  for (int i = 0; i < 60; ++i) {
    pp::PhotonState st;
    if (i % 2) st = pp::CoherentState{gen.complex_in_box(4.0)};
    else st = pp::ThermalState::from_mean(gen.uniform(0.0, 20.0));
    const auto s = pp::photon_statistics(st);
    EXPECT_NEAR(sum(s.pmf), 1.0, 1e-9);
    double m1 = 0.0, m2 = 0.0;
    for (std::size_t k = 0; k < s.pmf.size(); ++k) {
      EXPECT_GE(s.pmf[k], 0.0);
      m1 += k * s.pmf[k];
      m2 += double(k) * k * s.pmf[k];
    }
    EXPECT_NEAR(m1, s.mean, 1e-8 * (1 + s.mean));
    EXPECT_NEAR(m2 - m1 * m1, s.variance, 1e-7 * (1 + s.variance));
  }
}

TEST(PhotonStatistics, TruncationTailIsBelowBound) {
  for (double mean : {0.1, 1.0, 7.5, 40.0}) {
    const pp::PhotonState st = pp::CoherentState{std::sqrt(mean)};
    const int n = pp::pmf_truncation(st);
    double tail = 0.0;
    for (int k = n + 1; k < n + 2000; ++k) tail += pp::poisson_pmf(mean, k);
    EXPECT_LT(tail, pp::kPmfTailBound);
    const pp::PhotonState th = pp::ThermalState::from_mean(mean);
    const int m = pp::pmf_truncation(th);
    const double q = mean / (1 + mean);
    EXPECT_LT(std::pow(q, m + 1), pp::kPmfTailBound);
  }
}

TEST(ThermalState, Constructors) {
  const auto a = pp::ThermalState::from_zeta(0.25);
  EXPECT_NEAR(a.mean_n(), 4.0, 1e-15);
  EXPECT_NEAR(a.mean_n() * a.zeta(), 1.0, 1e-15);
  EXPECT_EQ(pp::ThermalState::from_zeta(std::numeric_limits<double>::infinity()).pmf(0), 1.0);
  EXPECT_THROW(pp::ThermalState::from_zeta(0.0), pp::DomainError);
  EXPECT_THROW(pp::ThermalState::from_mean(-1.0), pp::DomainError);
  const auto wave = pp::WaveParams::from_wavelength(10e-6);
  const auto& k = pp::Constants::codata();
  const auto t = pp::ThermalState::from_temperature(wave, 300.0);
  EXPECT_NEAR(t.zeta(), std::exp(k.hbar * wave.omega() / (k.kB * 300.0)) - 1.0, 1e-12);
}

TEST(FieldExpectations, VacuumAndZeroAmplitudeCoherentAgree) {
  const auto mode = linear_mode();
  const auto& k = pp::Constants::codata();
  const double unit = k.hbar * mode.wave.omega() / (k.eps0 * mode.volume);
  const auto vac = pp::field_expectations(pp::NumberState{0}, mode, pp::Vec3::Zero(), 0.0);
  EXPECT_EQ(vac.mean_E.norm(), 0.0);
  EXPECT_NEAR(vac.mean_E_sq / (0.5 * unit), 1.0, 1e-12);
  const auto coh = pp::field_expectations(pp::CoherentState{0.0}, mode, pp::Vec3(1e-7, 2e-7, 3e-7), 1e-15);
  EXPECT_NEAR(coh.mean_E_sq / vac.mean_E_sq, 1.0, 1e-12);
  EXPECT_NEAR(coh.var_E / vac.var_E, 1.0, 1e-12);
  EXPECT_NEAR(coh.mean_B_sq / vac.mean_B_sq, 1.0, 1e-12);
  EXPECT_NEAR(vac.mean_B_sq / (0.5 * k.mu0 * k.hbar * mode.wave.omega() / mode.volume), 1.0, 1e-12);
}

TEST(FieldExpectations, NumberAndThermalScaleWithOccupation) {
  const auto mode = circular_mode();
  const auto n3 = pp::field_expectations(pp::NumberState{3}, mode, pp::Vec3::Zero(), 0.0);
  const auto n0 = pp::field_expectations(pp::NumberState{0}, mode, pp::Vec3::Zero(), 0.0);
  EXPECT_NEAR(n3.mean_E_sq / n0.mean_E_sq, 7.0, 1e-12);
  const auto th = pp::field_expectations(pp::ThermalState::from_mean(2.5), mode, pp::Vec3::Zero(), 0.0);
  EXPECT_NEAR(th.mean_E_sq / n0.mean_E_sq, 6.0, 1e-12);
  EXPECT_EQ(th.mean_B.norm(), 0.0);
}

TEST(FieldExpectations, CoherentMeanFollowsClassicalForm) {
  const auto mode = linear_mode();
  const auto& k = pp::Constants::codata();
  const double omega = mode.wave.omega();
  const cdouble g(1.0, 1.0);
  const auto f = pp::field_expectations(pp::CoherentState{g}, mode, pp::Vec3::Zero(), 0.0);
  // -sqrt(2 hbar w / eps0 V) |g| [e' sin(psi) + e'' cos(psi)], psi = arg g.
  const double amp = std::sqrt(2 * k.hbar * omega / (k.eps0 * mode.volume)) * std::abs(g);
  const pp::Vec3 expect = -amp * std::sin(std::arg(g)) * pp::Vec3(1, 0, 0);
  EXPECT_NEAR((f.mean_E - expect).norm(), 0.0, 1e-12 * amp);
}

TEST(FieldExpectations, CoherentVarianceIndependentOfAmplitudeAndPosition) {
  pp::testing::Gen gen(32);
  const auto& k = pp::Constants::codata();
  for (const auto& mode : {linear_mode(), circular_mode(), elliptical_mode()}) {
    const double omega = mode.wave.omega();
    const double var_e = k.hbar * omega / (2 * k.eps0 * mode.volume);
    const double var_b = 0.5 * k.mu0 * k.hbar * omega / mode.volume;
    for (int i = 0; i < 100; ++i) {
      const auto f = pp::field_expectations(pp::CoherentState{gen.complex_in_box(5.0)}, mode, gen.vec3(1e-6),
                                            gen.uniform(0.0, 1e-14));
      EXPECT_NEAR((f.mean_E_sq - f.mean_E.squaredNorm()) / var_e, 1.0, 1e-9);
      EXPECT_NEAR((f.mean_B_sq - f.mean_B.squaredNorm()) / var_b, 1.0, 1e-9);
      EXPECT_NEAR(f.var_E / var_e, 1.0, 1e-12);
    }
  }
}

TEST(FieldExpectations, RejectsBadModes) {
  auto mode = linear_mode();
  mode.volume = 0.0;
  EXPECT_THROW(pp::field_expectations(pp::NumberState{1}, mode, pp::Vec3::Zero(), 0.0), pp::DomainError);
  mode = linear_mode();
  mode.pol.e = pp::CVec3(0, 0, 1);  // longitudinal
  EXPECT_THROW(pp::field_expectations(pp::NumberState{1}, mode, pp::Vec3::Zero(), 0.0), pp::DomainError);
}

TEST(Poynting, Examples) {
  const auto& k = pp::Constants::codata();
  const auto lin = linear_mode();
  const double unit = k.hbar * lin.wave.omega() * k.c / lin.volume;
  const pp::Vec3 vac = pp::poynting_expectation({0.0}, lin, pp::Vec3::Zero(), 0.0);
  EXPECT_NEAR((vac - 0.5 * unit * pp::Vec3(0, 0, 1)).norm(), 0.0, 1e-12 * unit);
  const pp::Vec3 lin1 = pp::poynting_expectation({1.0}, lin, pp::Vec3::Zero(), 0.0);
  EXPECT_NEAR(lin1.z() / unit, 0.5, 1e-12);
  const auto circ = circular_mode();
  pp::testing::Gen gen(33);
  const cdouble g(1.2, -0.4);
  for (int i = 0; i < 20; ++i) {
    const pp::Vec3 s = pp::poynting_expectation({g}, circ, gen.vec3(1e-6), gen.uniform(0, 1e-14));
    EXPECT_NEAR(s.z() / unit, 0.5 + std::norm(g), 1e-12);
  }
}

TEST(Poynting, RejectsNonOrthogonalQuadratures) {
  auto mode = linear_mode();
  const double a = 0.6, b = 0.8 * std::sqrt(0.5);
  mode.pol.e = pp::CVec3(cdouble(a, b), cdouble(0, b), 0);  // e' = (a,0,0), e'' = (b,b,0)
  mode.pol.e.normalize();
  EXPECT_THROW(pp::poynting_expectation({1.0}, mode, pp::Vec3::Zero(), 0.0), pp::DomainError);
}

TEST(GammaOperators, Examples) {
  const auto a = pp::compose_gamma_operators(cdouble(0.3, 0.2), 0.0);
  EXPECT_EQ(a.prefactor, 1.0);
  EXPECT_EQ(a.gamma_sum, cdouble(0.3, 0.2));
  const auto b = pp::compose_gamma_operators(1.0, cdouble(0, 1));
  EXPECT_NEAR(b.prefactor, 1.0, 1e-15);
  EXPECT_EQ(b.gamma_sum, cdouble(1, 1));
  const auto c = pp::compose_gamma_operators(2.0, 2.0);
  EXPECT_NEAR(c.prefactor, std::exp(4.0), 1e-12);
  EXPECT_EQ(c.gamma_sum, cdouble(4.0));
}

TEST(PRepresentation, ClosedFormValues) {
  const auto d = pp::thermal_from_p_representation(1.0);
  EXPECT_NEAR(d.mean, 1.0, 1e-15);
  for (int n = 0; n <= 40; ++n) EXPECT_NEAR(d.pmf[n], std::pow(2.0, -(n + 1)), 1e-15);
  EXPECT_NEAR(pp::thermal_from_p_representation(1e9).pmf[0], 1.0, 1e-8);
  EXPECT_THROW(pp::thermal_from_p_representation(0.0), pp::DomainError);
}

TEST(PRepresentation, MatchesPlaneQuadrature) {
  for (double zeta : {0.25, 1.0, 3.0}) {
    const auto d = pp::thermal_from_p_representation(zeta);
    EXPECT_NEAR(d.mean, 1 / zeta, 1e-12);
    for (int n = 0; n <= 40; ++n) EXPECT_NEAR(d.pmf[n], pp::oracle::p_representation_pmf(zeta, n), 1e-8) << n;
  }
}

TEST(PRepresentation, CoherentProjectorsResolveIdentity) {
  for (int n = 0; n <= 3; ++n) EXPECT_NEAR(pp::oracle::identity_resolution(n), 1.0, 1e-6);
}

TEST(CoherentStates, SuperpositionIsNotAnEigenstate) {
  // |g1> + |g2> (g1 != g2): applying a, then projecting onto number states,
  // gives coefficients that are not proportional to the original ones.
  const cdouble g1(1.0, 0.0), g2(-0.5, 0.8);
  auto coeff = [](cdouble g, int n) {
    return std::exp(-0.5 * std::norm(g)) * std::pow(g, n) / std::sqrt(std::tgamma(n + 1.0));
  };
  std::vector<cdouble> c(20), ac(19);
  for (int n = 0; n < 20; ++n) c[n] = coeff(g1, n) + coeff(g2, n);
  for (int n = 0; n < 19; ++n) ac[n] = std::sqrt(n + 1.0) * c[n + 1];  // a|psi>
  const cdouble ratio0 = ac[0] / c[0];
  double spread = 0.0;
  for (int n = 1; n < 10; ++n) spread = std::max(spread, std::abs(ac[n] / c[n] - ratio0));
  EXPECT_GT(spread, 1e-3);
}
