#pragma once

#include <complex>
#include <numbers>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace photonpath {

using cdouble = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using CMat3 = Eigen::Matrix3cd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cdouble kI{0.0, 1.0};

const char* library_version();

// SI constants. eps0 and Z0 are derived from c and mu0 so that c*eps0*Z0 == 1
// holds to rounding.
struct Constants {
  double c;
  double mu0;
  double eps0;
  double Z0;
  double hbar;
  double kB;

  static const Constants& codata();
};

struct Direction {
  double theta = 0.0;
  double phi = 0.0;
};

Vec3 unit_vector(const Direction& d);

// Angular frequency, vacuum wavenumber and vacuum wavelength of one mode.
class WaveParams {
 public:
  static WaveParams from_wavelength(double lambda0);
  static WaveParams from_omega(double omega);
  static WaveParams from_k0(double k0);

  double omega() const { return omega_; }
  double k0() const { return k0_; }
  double lambda0() const { return lambda0_; }

 private:
  WaveParams(double omega, double k0, double lambda0)
      : omega_(omega), k0_(k0), lambda0_(lambda0) {}
  double omega_;
  double k0_;
  double lambda0_;
};

// e = e' + i e''.
struct PolarizationVector {
  CVec3 e;

  Vec3 real_part() const { return e.real(); }
  Vec3 imag_part() const { return e.imag(); }
  double norm_squared() const { return e.squaredNorm(); }
};

// Transverse pair (x, y) used for the orthogonal-state construction.
using Jones2 = Eigen::Vector2cd;

struct CircularBasis {
  Vec3 eps_prime;
  Vec3 eps_dprime;
};

// eps' = -theta_hat, eps'' = -phi_hat; eps' x eps'' = k_hat.
CircularBasis circular_basis(const Direction& d);

// Returns e2 with e1 . conj(e2) == 0, |e2x| = |e1y|, |e2y| = |e1x| and the
// global phase fixed by arg(e2x) == 0. Throws DomainError if |e1| != 1.
Jones2 orthogonal_polarization(const Jones2& e1);

// Unconjugated bilinear product a.b used by the reciprocity relations.
inline cdouble bilinear(const CVec3& a, const CVec3& b) {
  return a.transpose() * b;
}

// a x b without conjugation (Eigen's cross() conjugates complex results).
inline CVec3 cross(const CVec3& a, const CVec3& b) {
  return CVec3(a.y() * b.z() - a.z() * b.y(), a.z() * b.x() - a.x() * b.z(),
               a.x() * b.y() - a.y() * b.x());
}

}  // namespace photonpath
