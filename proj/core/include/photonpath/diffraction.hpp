#pragma once

#include <string>
#include <utility>
#include <vector>

#include "photonpath/foundations.hpp"

namespace photonpath {

// Samples on a centered uniform grid in the z = 0+ plane:
// x_i = (i - (nx - 1)/2) dx, y_j = (j - (ny - 1)/2) dy.
// `a` holds the scalar field (or Ex); `ay` holds Ey for vector grids.
struct FieldGrid {
  double dx = 0.0;
  double dy = 0.0;
  Eigen::MatrixXcd a;
  Eigen::MatrixXcd ay;

  int nx() const { return static_cast<int>(a.rows()); }
  int ny() const { return static_cast<int>(a.cols()); }
  bool is_vector() const { return ay.size() != 0; }
  double x(int i) const { return (i - 0.5 * (nx() - 1)) * dx; }
  double y(int j) const { return (j - 0.5 * (ny() - 1)) * dy; }
  // Largest |x| or |y| of any sample.
  double half_extent() const;

  template <class F>
  static FieldGrid sample(int nx, int ny, double dx, double dy, F&& f) {
    FieldGrid g;
    g.dx = dx;
    g.dy = dy;
    g.a.resize(nx, ny);
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) g.a(i, j) = f(g.x(i), g.y(j));
    return g;
  }
};

void validate_grid(const FieldGrid& g);

// Midpoint-rule Fourier transform of one grid component at arbitrary
// frequencies: sum a(x, y) e^{-i(kx x + ky y)} dx dy.
class Spectrum {
 public:
  explicit Spectrum(const FieldGrid& g, bool y_component = false);

  cdouble operator()(double kx, double ky) const;
  // Tensor-product evaluation: result(p, q) at (kx[p], ky[q]).
  Eigen::MatrixXcd on_grid(const Eigen::VectorXd& kx, const Eigen::VectorXd& ky) const;
  // Transform along y only: result(i, q) = sum_j samples(i, j) e^{-i ky[q] y_j}.
  Eigen::MatrixXcd transform_y(const Eigen::VectorXd& ky) const;
  // Pointwise evaluation: result[n] at (kx[n], ky[n]).
  Eigen::VectorXcd at_points(const Eigen::VectorXd& kx, const Eigen::VectorXd& ky) const;
  // Smallest sigma in (0, 1] beyond which |spectrum(k0 sigma)| stays below
  // rel_tol times its peak (probed along rays).
  double support_radius(double k0, double rel_tol) const;

  const Eigen::VectorXd& xs() const { return xs_; }
  const Eigen::VectorXd& ys() const { return ys_; }
  double half_extent() const { return half_extent_; }

 private:
  Eigen::MatrixXcd values_;  // samples times dx dy
  Eigen::VectorXd xs_;
  Eigen::VectorXd ys_;
  double half_extent_;
};

// Spectrum of a scalar grid.
Spectrum spectrum(const FieldGrid& g);

struct FarFieldPoint {
  double x = 0.0;
  double y = 0.0;
  double z0 = 1.0;

  double r() const;
  Vec3 sigma() const;
};

struct FarFieldScalar {
  cdouble amplitude;
  std::vector<std::string> warnings;
};

struct FarFieldVector {
  cdouble plus;
  cdouble minus;
  std::vector<std::string> warnings;
};

// -(i / (lambda0 r)) sqrt(z0 / r) a0~(k0 x / r, k0 y / r) e^{i k0 r}.
FarFieldScalar far_field_scalar(const FieldGrid& g, const FarFieldPoint& p, const WaveParams& wave);

// Circular components of the plane wave with transverse spectrum (Ex, Ey)
// travelling along sigma.
std::pair<cdouble, cdouble> circular_components(const Vec3& sigma, cdouble ex, cdouble ey);

FarFieldVector far_field_vector(const FieldGrid& g, const FarFieldPoint& p, const WaveParams& wave);

enum class QuadratureScheme { kAuto, kCartesian, kPolar };

struct AngularSpectrumOptions {
  QuadratureScheme scheme = QuadratureScheme::kAuto;
  // Spectrum magnitude (relative to peak) treated as zero when sizing the
  // integration domain.
  double support_tolerance = 1e-10;
  // Phase advance allowed per 32-node Gauss-Legendre panel (rad).
  double panel_phase = 40.0;
};

// lambda0^-2 integral over sigma_x^2 + sigma_y^2 < 1 of
// sigma_z^{-1/2} a0~(k0 sigma) e^{i k0 (sigma_x x + sigma_y y + sigma_z z)}.
// Evaluated for every (xs[i], ys[j]) at one z; result(i, j).
Eigen::MatrixXcd angular_spectrum_plane(const FieldGrid& g, const std::vector<double>& xs,
                                        const std::vector<double>& ys, double z,
                                        const WaveParams& wave,
                                        const AngularSpectrumOptions& opt = {});

cdouble angular_spectrum_propagate(const FieldGrid& g, double x, double y, double z,
                                   const WaveParams& wave, const AngularSpectrumOptions& opt = {});

}  // namespace photonpath
