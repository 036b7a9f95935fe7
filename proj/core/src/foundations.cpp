#include "photonpath/foundations.hpp"

#include <cmath>
#include <sstream>

#include "photonpath/errors.hpp"

namespace photonpath {

const char* library_version() { return PHOTONPATH_VERSION_STRING; }

const Constants& Constants::codata() {
  static const Constants k = [] {
    Constants c{};
    c.c = 299792458.0;
    c.mu0 = 1.25663706212e-6;
    c.eps0 = 1.0 / (c.mu0 * c.c * c.c);
    c.Z0 = c.mu0 * c.c;
    c.hbar = 1.054571817e-34;
    c.kB = 1.380649e-23;
    return c;
  }();
  return k;
}

Vec3 unit_vector(const Direction& d) {
  const double st = std::sin(d.theta);
  return {st * std::cos(d.phi), st * std::sin(d.phi), std::cos(d.theta)};
}

WaveParams WaveParams::from_wavelength(double lambda0) {
  if (!(lambda0 > 0.0) || !std::isfinite(lambda0)) {
    throw DomainError("wavelength must be positive and finite");
  }
  const double k0 = 2.0 * kPi / lambda0;
  return WaveParams(k0 * Constants::codata().c, k0, lambda0);
}

WaveParams WaveParams::from_omega(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("angular frequency must be positive and finite");
  }
  const double k0 = omega / Constants::codata().c;
  return WaveParams(omega, k0, 2.0 * kPi / k0);
}

WaveParams WaveParams::from_k0(double k0) {
  if (!(k0 > 0.0) || !std::isfinite(k0)) {
    throw DomainError("wavenumber must be positive and finite");
  }
  return WaveParams(k0 * Constants::codata().c, k0, 2.0 * kPi / k0);
}

CircularBasis circular_basis(const Direction& d) {
  const double ct = std::cos(d.theta), st = std::sin(d.theta);
  const double cp = std::cos(d.phi), sp = std::sin(d.phi);
  return {Vec3(-ct * cp, -ct * sp, st), Vec3(sp, -cp, 0.0)};
}

Jones2 orthogonal_polarization(const Jones2& e1) {
  const double n2 = e1.squaredNorm();
  if (std::abs(n2 - 1.0) > 1e-9) {
    std::ostringstream os;
    os << "orthogonal_polarization: input not normalized (|e|^2 = " << n2 << ")";
    throw DomainError(os.str());
  }
  const double phase_x = std::arg(e1(0));
  const double phase_y = std::arg(e1(1));
  // phi2x = 0, phi2y = phi2x - (phi1x - phi1y + pi)
  const double phase2y = -(phase_x - phase_y + kPi);
  return Jones2(cdouble(std::abs(e1(1)), 0.0), std::polar(std::abs(e1(0)), phase2y));
}

}  // namespace photonpath
