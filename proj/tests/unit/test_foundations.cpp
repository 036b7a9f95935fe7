#include <gtest/gtest.h>

#include "generators.hpp"
#include "photonpath/photonpath.hpp"

namespace pp = photonpath;
using pp::cdouble;
using pp::kPi;

TEST(Constants, ImpedanceAndPermittivityAgree) {
  const auto& k = pp::Constants::codata();
  EXPECT_NEAR(k.c * k.eps0 * k.Z0, 1.0, 1e-12);
  EXPECT_NEAR(1.0 / std::sqrt(k.mu0 * k.eps0) / k.c, 1.0, 1e-12);
  EXPECT_NEAR(std::sqrt(k.mu0 / k.eps0) / k.Z0, 1.0, 1e-12);
}

TEST(WaveParams, ConstructorsAgree) {
  const auto a = pp::WaveParams::from_wavelength(633e-9);
  EXPECT_NEAR(a.k0() * a.lambda0(), 2 * kPi, 1e-12 * 2 * kPi);
  const auto b = pp::WaveParams::from_omega(a.omega());
  const auto c = pp::WaveParams::from_k0(a.k0());
  EXPECT_NEAR(b.lambda0() / a.lambda0(), 1.0, 1e-12);
  EXPECT_NEAR(c.omega() / a.omega(), 1.0, 1e-12);
}

TEST(WaveParams, RejectsNonPositive) {
  EXPECT_THROW(pp::WaveParams::from_wavelength(0.0), pp::DomainError);
  EXPECT_THROW(pp::WaveParams::from_k0(-1.0), pp::DomainError);
}

TEST(Direction, UnitVectorHasUnitNorm) {
  pp::testing::Gen gen(11);
  for (int i = 0; i < 100; ++i) EXPECT_NEAR(pp::unit_vector(gen.direction()).norm(), 1.0, 1e-12);
}

TEST(CircularBasis, EquatorIsVertical) {
  for (double phi : {0.0, 0.7, 2.0, 5.5}) {
    const auto b = pp::circular_basis({kPi / 2, phi});
    EXPECT_NEAR((b.eps_prime - pp::Vec3(0, 0, 1)).norm(), 0.0, 1e-15);
  }
  const auto b = pp::circular_basis({kPi / 2, kPi / 2});
  EXPECT_NEAR((b.eps_dprime - pp::Vec3(1, 0, 0)).norm(), 0.0, 1e-15);
}

TEST(CircularBasis, OrthonormalAndRightHanded) {
  const auto b = pp::circular_basis({kPi / 3, kPi / 4});
  EXPECT_NEAR(b.eps_prime.dot(b.eps_dprime), 0.0, 1e-15);
  EXPECT_NEAR(b.eps_prime.norm(), 1.0, 1e-15);
  EXPECT_NEAR(b.eps_dprime.norm(), 1.0, 1e-15);
  pp::testing::Gen gen(12);
  for (int i = 0; i < 200; ++i) {
    const auto d = gen.direction();
    const auto c = pp::circular_basis(d);
    const pp::Vec3 k = pp::unit_vector(d);
    EXPECT_NEAR(c.eps_prime.dot(k), 0.0, 1e-12);
    EXPECT_NEAR(c.eps_dprime.dot(k), 0.0, 1e-12);
    EXPECT_NEAR((c.eps_prime.cross(c.eps_dprime) - k).norm(), 0.0, 1e-12);
  }
}

TEST(OrthogonalPolarization, LinearX) {
  const pp::Jones2 e2 = pp::orthogonal_polarization(pp::Jones2(1.0, 0.0));
  EXPECT_NEAR(std::abs(e2[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e2[1]), 1.0, 1e-15);
}

TEST(OrthogonalPolarization, RightCircularMapsToLeft) {
  const double s = 1.0 / std::sqrt(2.0);
  const pp::Jones2 e2 = pp::orthogonal_polarization(pp::Jones2(s, cdouble(0, s)));
  EXPECT_NEAR(std::abs(e2[0] - s), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e2[1] - cdouble(0, -s)), 0.0, 1e-15);
}

TEST(OrthogonalPolarization, GeneralElliptical) {
  const pp::Jones2 e1(0.8, std::polar(0.6, kPi / 3));
  const pp::Jones2 e2 = pp::orthogonal_polarization(e1);
  EXPECT_NEAR(std::abs(e1.dot(e2)), 0.0, 1e-12);  // dot conjugates its first argument
  EXPECT_NEAR(e2.norm(), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(e2[0]), 0.6, 1e-12);
  EXPECT_NEAR(std::abs(e2[1]), 0.8, 1e-12);
  EXPECT_EQ(std::arg(e2[0]), 0.0);
}

TEST(OrthogonalPolarization, RejectsUnnormalized) {
  EXPECT_THROW(pp::orthogonal_polarization(pp::Jones2(1.0, 0.1)), pp::DomainError);
}

TEST(OrthogonalPolarization, InvolutionAndSuperpositionNorm) {
  pp::testing::Gen gen(13);
  for (int i = 0; i < 200; ++i) {
    pp::Jones2 e1(gen.complex_normal(), gen.complex_normal());
    e1.normalize();
    const pp::Jones2 e2 = pp::orthogonal_polarization(e1);
    const pp::Jones2 e3 = pp::orthogonal_polarization(e2);
    // Proportional to e1: |<e1, e3>| = 1.
    EXPECT_NEAR(std::abs(e1.dot(e3)), 1.0, 1e-12);
    const cdouble c1 = gen.complex_normal(), c2 = gen.complex_normal();
    const pp::Jones2 sup = c1 * e1 + c2 * e2;
    EXPECT_NEAR(sup.squaredNorm(), std::norm(c1) + std::norm(c2), 1e-12 * (std::norm(c1) + std::norm(c2)));
  }
}

TEST(Library, VersionString) { EXPECT_STREQ(pp::library_version(), PHOTONPATH_VERSION_STRING); }

TEST(Cross, ComplexProductIsNotConjugated) {
  const pp::CVec3 a(1.0, 0.0, cdouble(0, -1)), b(0.0, 1.0, 0.0);
  const pp::CVec3 c = pp::cross(a, b);
  EXPECT_EQ(c, pp::CVec3(cdouble(0, 1), 0.0, 1.0));
  const pp::Vec3 u(0.3, -1.2, 2.0), v(-0.7, 0.4, 1.1);
  EXPECT_NEAR((pp::cross(u.cast<cdouble>(), v.cast<cdouble>()).real() - u.cross(v)).norm(), 0.0, 1e-15);
}
