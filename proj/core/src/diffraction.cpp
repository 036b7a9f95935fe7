#include "photonpath/diffraction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "photonpath/errors.hpp"

namespace photonpath {

namespace {

constexpr int kGaussOrder = 32;
constexpr Eigen::Index kBlock = 256;

struct Nodes {
  std::vector<double> x;
  std::vector<double> w;
};

// Composite Gauss-Legendre over consecutive panels [breaks[k], breaks[k+1]].
Nodes composite_gauss(const std::vector<double>& breaks) {
  using Rule = boost::math::quadrature::gauss<double, kGaussOrder>;
  const auto& abs = Rule::abscissa();
  const auto& wts = Rule::weights();
  Nodes out;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double mid = 0.5 * (breaks[k] + breaks[k + 1]);
    const double half = 0.5 * (breaks[k + 1] - breaks[k]);
    for (std::size_t i = abs.size(); i-- > 0;) {
      out.x.push_back(mid - half * abs[i]);
      out.w.push_back(half * wts[i]);
    }
    for (std::size_t i = 0; i < abs.size(); ++i) {
      out.x.push_back(mid + half * abs[i]);
      out.w.push_back(half * wts[i]);
    }
  }
  return out;
}

// Panel breaks on [a, b] at equal increments of a nondecreasing phase
// bound, so no panel has to resolve more than `budget` radians.
std::vector<double> phase_breaks(const std::function<double(double)>& phase, double a, double b,
                                 double budget, int min_panels) {
  const double pa = phase(a);
  const double total = phase(b) - pa;
  const int n = std::max(min_panels, static_cast<int>(std::ceil(total / budget)));
  std::vector<double> breaks{a};
  for (int k = 1; k < n; ++k) {
    const double target = pa + total * k / n;
    double lo = breaks.back();
    double hi = b;
    for (int it = 0; it < 100 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
      const double m = 0.5 * (lo + hi);
      (phase(m) < target ? lo : hi) = m;
    }
    breaks.push_back(0.5 * (lo + hi));
  }
  breaks.push_back(b);
  return breaks;
}

Eigen::VectorXd centered_coords(int n, double d) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = (i - 0.5 * (n - 1)) * d;
  return v;
}

// e^{sign i k u_a x_b}, rows over u, columns over x.
Eigen::MatrixXcd phase_matrix(const Eigen::VectorXd& u, const Eigen::VectorXd& x, double k,
                              double sign) {
  Eigen::MatrixXcd m(u.size(), x.size());
  for (Eigen::Index b = 0; b < x.size(); ++b)
    for (Eigen::Index a = 0; a < u.size(); ++a) m(a, b) = std::polar(1.0, sign * k * u[a] * x[b]);
  return m;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

double FieldGrid::half_extent() const {
  return std::max(0.5 * (nx() - 1) * dx, 0.5 * (ny() - 1) * dy);
}

void validate_grid(const FieldGrid& g) {
  if (!(g.dx > 0.0) || !(g.dy > 0.0) || !std::isfinite(g.dx) || !std::isfinite(g.dy)) {
    throw DomainError("field grid: spacing must be positive and finite");
  }
  if (g.a.size() == 0) throw DomainError("field grid: no samples");
  if (!g.a.allFinite()) throw DomainError("field grid: non-finite sample");
  if (g.is_vector()) {
    if (g.ay.rows() != g.a.rows() || g.ay.cols() != g.a.cols()) {
      throw DomainError("field grid: Ex and Ey shapes differ");
    }
    if (!g.ay.allFinite()) throw DomainError("field grid: non-finite sample");
  }
}

Spectrum::Spectrum(const FieldGrid& g, bool y_component) {
  validate_grid(g);
  if (y_component && !g.is_vector()) throw DomainError("spectrum: grid has no y component");
  values_ = (y_component ? g.ay : g.a) * (g.dx * g.dy);
  xs_ = centered_coords(g.nx(), g.dx);
  ys_ = centered_coords(g.ny(), g.dy);
  half_extent_ = g.half_extent();
}

cdouble Spectrum::operator()(double kx, double ky) const {
  Eigen::VectorXd ux(1), uy(1);
  ux[0] = kx;
  uy[0] = ky;
  return at_points(ux, uy)[0];
}

Eigen::MatrixXcd Spectrum::on_grid(const Eigen::VectorXd& kx, const Eigen::VectorXd& ky) const {
  const Eigen::MatrixXcd ex = phase_matrix(kx, xs_, 1.0, -1.0);
  const Eigen::MatrixXcd ey = phase_matrix(ys_, ky, 1.0, -1.0);
  return ex * (values_ * ey);
}

Eigen::MatrixXcd Spectrum::transform_y(const Eigen::VectorXd& ky) const {
  return values_ * phase_matrix(ys_, ky, 1.0, -1.0);
}

Eigen::VectorXcd Spectrum::at_points(const Eigen::VectorXd& kx, const Eigen::VectorXd& ky) const {
  if (kx.size() != ky.size()) throw DomainError("spectrum: kx and ky lengths differ");
  Eigen::VectorXcd out(kx.size());
  for (Eigen::Index p0 = 0; p0 < kx.size(); p0 += kBlock) {
    const Eigen::Index n = std::min(kBlock, kx.size() - p0);
    const Eigen::MatrixXcd ex = phase_matrix(kx.segment(p0, n), xs_, 1.0, -1.0);
    const Eigen::MatrixXcd ey = phase_matrix(ky.segment(p0, n), ys_, 1.0, -1.0);
    const Eigen::MatrixXcd rows = ex * values_;
    out.segment(p0, n) = rows.cwiseProduct(ey).rowwise().sum();
  }
  return out;
}

double Spectrum::support_radius(double k0, double rel_tol) const {
  constexpr int kRays = 32;
  constexpr int kSteps = 200;
  const Eigen::Index n = static_cast<Eigen::Index>(kRays) * (kSteps + 1);
  Eigen::VectorXd kx(n), ky(n), sig(n);
  Eigen::Index idx = 0;
  for (int r = 0; r < kRays; ++r) {
    const double a = 2.0 * kPi * (r + 0.25) / kRays;
    for (int s = 0; s <= kSteps; ++s, ++idx) {
      sig[idx] = static_cast<double>(s) / kSteps;
      kx[idx] = k0 * sig[idx] * std::cos(a);
      ky[idx] = k0 * sig[idx] * std::sin(a);
    }
  }
  const Eigen::VectorXd mag = at_points(kx, ky).cwiseAbs();
  const double peak = mag.maxCoeff();
  if (peak == 0.0) return 0.0;
  double reach = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    if (mag[i] > rel_tol * peak) reach = std::max(reach, sig[i]);
  return std::min(1.0, reach + 0.02);
}

Spectrum spectrum(const FieldGrid& g) { return Spectrum(g, false); }

double FarFieldPoint::r() const { return std::sqrt(x * x + y * y + z0 * z0); }

Vec3 FarFieldPoint::sigma() const { return Vec3(x, y, z0) / r(); }

namespace {

std::vector<std::string> far_field_checks(const FarFieldPoint& p, const WaveParams& wave) {
  if (!(p.z0 > 0.0) || !std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw DomainError("far field: observation point needs z0 > 0");
  }
  std::vector<std::string> warnings;
  const double k0r = wave.k0() * p.r();
  if (k0r < 1e3) {
    std::ostringstream os;
    os << "far-field formula used at k0 r = " << k0r << " (< 1e3)";
    warnings.push_back(os.str());
  }
  return warnings;
}

cdouble far_field_factor(const FarFieldPoint& p, const WaveParams& wave) {
  const double r = p.r();
  return -kI / (wave.lambda0() * r) * std::sqrt(p.z0 / r) * std::polar(1.0, wave.k0() * r);
}

}  // namespace

FarFieldScalar far_field_scalar(const FieldGrid& g, const FarFieldPoint& p, const WaveParams& wave) {
  FarFieldScalar out;
  out.warnings = far_field_checks(p, wave);
  const Vec3 s = p.sigma();
  const cdouble a0 = Spectrum(g)(wave.k0() * s.x(), wave.k0() * s.y());
  out.amplitude = far_field_factor(p, wave) * a0;
  return out;
}

std::pair<cdouble, cdouble> circular_components(const Vec3& sigma, cdouble ex, cdouble ey) {
  if (std::abs(sigma.norm() - 1.0) > 1e-9) throw DomainError("circular_components: sigma must be a unit vector");
  if (!(sigma.z() > 0.0)) throw DomainError("circular_components: sigma_z must be positive");
  const double sx = sigma.x(), sy = sigma.y(), sz = sigma.z();
  const double rest = 1.0 - sx * sx;
  if (rest < 1e-12) throw DomainError("circular_components: sigma too close to the x axis");
  const double den = 2.0 * sz * std::sqrt(rest);
  const cdouble plus = ((sz - kI * sx * sy) * ex - kI * rest * ey) / den;
  const cdouble minus = ((sz + kI * sx * sy) * ex + kI * rest * ey) / den;
  return {plus, minus};
}

FarFieldVector far_field_vector(const FieldGrid& g, const FarFieldPoint& p, const WaveParams& wave) {
  if (!g.is_vector()) throw DomainError("far_field_vector: grid has no y component");
  FarFieldVector out;
  out.warnings = far_field_checks(p, wave);
  const Vec3 s = p.sigma();
  const double kx = wave.k0() * s.x(), ky = wave.k0() * s.y();
  const cdouble ex = Spectrum(g, false)(kx, ky);
  const cdouble ey = Spectrum(g, true)(kx, ky);
  const auto [plus, minus] = circular_components(s, ex, ey);
  const cdouble f = far_field_factor(p, wave);
  out.plus = f * plus;
  out.minus = f * minus;
  return out;
}

namespace {

// Tensor-product Gauss-Legendre over the square [-s, s]^2, keeping the disk
// sigma < s. Requires s < 1 so sigma_z stays away from 0.
Eigen::MatrixXcd cartesian_scheme(const Spectrum& spec, const std::vector<double>& xs,
                                  const std::vector<double>& ys, double z, double s,
                                  const WaveParams& wave, const AngularSpectrumOptions& opt) {
  const double k0 = wave.k0();
  const double K = k0 * z;
  const double sz_min = std::sqrt(1.0 - s * s);
  auto axis_nodes = [&](double obs_extent) {
    const double b = k0 * (obs_extent + spec.half_extent());
    auto phase = [=](double u) {
      const double a = std::abs(u);
      return std::copysign(K * a * a / (2.0 * sz_min) + b * a, u);
    };
    return composite_gauss(phase_breaks(phase, -s, s, opt.panel_phase, 4));
  };
  const Nodes gx = axis_nodes(max_abs(xs));
  const Nodes gy = axis_nodes(max_abs(ys));
  const Eigen::Index P = static_cast<Eigen::Index>(gx.x.size());
  const Eigen::Index Q = static_cast<Eigen::Index>(gy.x.size());
  const Eigen::Map<const Eigen::VectorXd> sx(gx.x.data(), P), sy(gy.x.data(), Q);
  const Eigen::Map<const Eigen::VectorXd> xo(xs.data(), static_cast<Eigen::Index>(xs.size()));
  const Eigen::Map<const Eigen::VectorXd> yo(ys.data(), static_cast<Eigen::Index>(ys.size()));

  const Eigen::MatrixXcd half = spec.transform_y(k0 * sy);  // (grid nx, Q)
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(xo.size(), Q);
  const double s2 = s * s;
  for (Eigen::Index p0 = 0; p0 < P; p0 += kBlock) {
    const Eigen::Index n = std::min(kBlock, P - p0);
    const Eigen::VectorXd sxb = sx.segment(p0, n);
    Eigen::MatrixXcd blk = phase_matrix(sxb, spec.xs(), k0, -1.0) * half;
    for (Eigen::Index q = 0; q < Q; ++q) {
      for (Eigen::Index p = 0; p < n; ++p) {
        const double r2 = sxb[p] * sxb[p] + sy[q] * sy[q];
        if (r2 >= s2) {
          blk(p, q) = 0.0;
          continue;
        }
        const double szv = std::sqrt(1.0 - r2);
        blk(p, q) *= gx.w[p0 + p] * gy.w[q] / std::sqrt(szv) * std::polar(1.0, K * szv);
      }
    }
    acc.noalias() += phase_matrix(xo, sxb, k0, 1.0) * blk;
  }
  const double inv_l2 = 1.0 / (wave.lambda0() * wave.lambda0());
  return acc * phase_matrix(sy, yo, k0, 1.0) * inv_l2;
}

// Polar nodes with sigma_z = t^2: d^2 sigma / sqrt(sigma_z) = 2 t^2 dt dalpha,
// which removes the inverse-square-root edge. Gauss-Legendre in t over
// [t_lo, 1], trapezoid in alpha.
Eigen::MatrixXcd polar_scheme(const Spectrum& spec, const std::vector<double>& xs,
                              const std::vector<double>& ys, double z, double s,
                              const WaveParams& wave, const AngularSpectrumOptions& opt) {
  const double k0 = wave.k0();
  const double K = k0 * z;
  double obs = 0.0;
  for (double x : xs)
    for (double y : ys) obs = std::max(obs, std::hypot(x, y));
  const double b = k0 * (obs + std::sqrt(2.0) * spec.half_extent());
  const double t_lo = s >= 1.0 ? 0.0 : std::pow(1.0 - s * s, 0.25);
  auto phase = [=](double t) { return K * t * t + b * (1.0 - std::sqrt(std::max(0.0, 1.0 - t * t * t * t))); };
  const Nodes gt = composite_gauss(phase_breaks(phase, t_lo, 1.0, opt.panel_phase, 4));
  int n_alpha = static_cast<int>(std::ceil(b * s)) + 32;
  n_alpha += (4 - n_alpha % 4) % 4;

  const Eigen::Index T = static_cast<Eigen::Index>(gt.x.size());
  const Eigen::Index N = T * n_alpha;
  Eigen::VectorXd kx(N), ky(N);
  Eigen::VectorXcd weight(N);
  const double dalpha = 2.0 * kPi / n_alpha;
  for (Eigen::Index it = 0; it < T; ++it) {
    const double t = gt.x[it];
    const double rho = std::sqrt(std::max(0.0, 1.0 - t * t * t * t));
    const cdouble w = gt.w[it] * dalpha * 2.0 * t * t * std::polar(1.0, K * t * t);
    for (int m = 0; m < n_alpha; ++m) {
      const Eigen::Index idx = it * n_alpha + m;
      const double a = dalpha * m;
      kx[idx] = k0 * rho * std::cos(a);
      ky[idx] = k0 * rho * std::sin(a);
      weight[idx] = w;
    }
  }
  const Eigen::VectorXcd f = spec.at_points(kx, ky).cwiseProduct(weight);
  const double inv_l2 = 1.0 / (wave.lambda0() * wave.lambda0());
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(ys.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      cdouble sum = 0.0;
      for (Eigen::Index n = 0; n < N; ++n) sum += f[n] * std::polar(1.0, kx[n] * xs[i] + ky[n] * ys[j]);
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sum * inv_l2;
    }
  }
  return out;
}

}  // namespace

Eigen::MatrixXcd angular_spectrum_plane(const FieldGrid& g, const std::vector<double>& xs,
                                        const std::vector<double>& ys, double z,
                                        const WaveParams& wave, const AngularSpectrumOptions& opt) {
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("angular spectrum: z must be positive");
  if (xs.empty() || ys.empty()) throw DomainError("angular spectrum: no observation points");
  for (double v : xs)
    if (!std::isfinite(v)) throw DomainError("angular spectrum: non-finite observation point");
  for (double v : ys)
    if (!std::isfinite(v)) throw DomainError("angular spectrum: non-finite observation point");
  const Spectrum spec(g);
  const double s = spec.support_radius(wave.k0(), opt.support_tolerance);
  if (s == 0.0) {
    return Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(ys.size()));
  }
  QuadratureScheme scheme = opt.scheme;
  if (scheme == QuadratureScheme::kAuto) {
    scheme = s <= 0.9 ? QuadratureScheme::kCartesian : QuadratureScheme::kPolar;
  }
  if (scheme == QuadratureScheme::kCartesian) {
    // The Cartesian rule needs sigma_z bounded away from zero.
    return cartesian_scheme(spec, xs, ys, z, std::min(s, 0.95), wave, opt);
  }
  return polar_scheme(spec, xs, ys, z, s, wave, opt);
}

cdouble angular_spectrum_propagate(const FieldGrid& g, double x, double y, double z,
                                   const WaveParams& wave, const AngularSpectrumOptions& opt) {
  return angular_spectrum_plane(g, {x}, {y}, z, wave, opt)(0, 0);
}

}  // namespace photonpath
