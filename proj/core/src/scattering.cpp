#include "photonpath/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "photonpath/errors.hpp"

namespace photonpath {

namespace {

const Direction kForward{kPi / 2, kPi / 2};

Eigen::Matrix3d cross_matrix(const Vec3& u) {
  Eigen::Matrix3d k;
  k << 0.0, -u.z(), u.y(), u.z(), 0.0, -u.x(), -u.y(), u.x(), 0.0;
  return k;
}

// Far-field coupling from a dipole of kind `from` at a to the field read by
// a dipole of kind `to` at b (E for electric, H for magnetic).
CMat3 leg_coupling(DipoleKind from, DipoleKind to, const Vec3& a, const Vec3& b,
                   const WaveParams& wave, const Constants& k) {
  const Vec3 d = b - a;
  const double r = d.norm();
  const Vec3 u = d / r;
  const double k0 = wave.k0();
  const cdouble c1 = k0 * k0 * std::exp(kI * (k0 * r)) / (4.0 * kPi * k.eps0 * r);
  const Eigen::Matrix3d proj = Eigen::Matrix3d::Identity() - u * u.transpose();
  const Eigen::Matrix3d cross = cross_matrix(u);
  if (from == DipoleKind::kElectric) {
    return to == DipoleKind::kElectric ? CMat3(c1 * proj.cast<cdouble>())
                                       : CMat3((c1 / k.Z0) * cross.cast<cdouble>());
  }
  return to == DipoleKind::kElectric ? CMat3((-c1 / k.Z0) * cross.cast<cdouble>())
                                     : CMat3((c1 / (k.Z0 * k.Z0)) * proj.cast<cdouble>());
}

Direction random_direction(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return {std::acos(1.0 - 2.0 * u(rng)), 2.0 * kPi * u(rng)};
}

}  // namespace

Vec3 beam_from_canonical(const Vec3& v) { return {v.z(), v.x(), v.y()}; }
Vec3 canonical_from_beam(const Vec3& v) { return {v.y(), v.z(), v.x()}; }
CVec3 beam_from_canonical(const CVec3& v) { return {v.z(), v.x(), v.y()}; }
CVec3 canonical_from_beam(const CVec3& v) { return {v.y(), v.z(), v.x()}; }

bool is_symmetric(const CMat3& m, double rel_tol) {
  const double scale = m.cwiseAbs().maxCoeff();
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

ScatterChannel reversed(const ScatterChannel& ch) {
  return {ch.dir_out, -ch.pol_out, ch.dir_in, -ch.pol_in};
}

Eigen::Matrix3d far_field_matrix(const Direction& d) {
  const double st = std::sin(d.theta), ct = std::cos(d.theta);
  const double sp = std::sin(d.phi), cp = std::cos(d.phi);
  Eigen::Matrix3d m;
  m << 1.0 - st * st * cp * cp, -st * st * sp * cp, -st * ct * cp,  //
      -st * st * sp * cp, 1.0 - st * st * sp * sp, -st * ct * sp,   //
      -st * ct * cp, -st * ct * sp, st * st;
  return m;
}

CVec3 dipole_radiated_field(const CVec3& p, const Direction& d, double r, const WaveParams& wave,
                            const Constants& k) {
  if (!(r > 0.0)) throw DomainError("dipole_radiated_field: distance must be positive");
  const double k0 = wave.k0();
  const cdouble g = k0 * k0 * std::exp(kI * (k0 * r)) / (4.0 * kPi * k.eps0 * r);
  return g * (far_field_matrix(d).cast<cdouble>() * p);
}

CVec3 incident_column(const Direction& d, int s) {
  const CircularBasis b = circular_basis(d);
  return b.eps_prime.cast<cdouble>() + (static_cast<double>(s) * kI) * b.eps_dprime.cast<cdouble>();
}

CVec3 output_row(const Direction& d, int s) { return incident_column(d, -s); }

CVec3 incident_column_magnetic(const Direction& d, int s) {
  const CircularBasis b = circular_basis(d);
  return b.eps_dprime.cast<cdouble>() - (static_cast<double>(s) * kI) * b.eps_prime.cast<cdouble>();
}

CVec3 output_row_magnetic(const Direction& d, int s) { return incident_column_magnetic(d, -s); }

cdouble electric_scattering_amplitude(const PolarizabilityTensor& alpha, const ScatterChannel& ch,
                                      cdouble E_in, const WaveParams& wave, const Constants& k) {
  const double k0 = wave.k0();
  const CVec3 p = alpha.a * incident_column(ch.dir_in, ch.pol_in) * E_in;
  return k0 * k0 / (8.0 * kPi * k.eps0) * bilinear(output_row(ch.dir_out, ch.pol_out), p);
}

cdouble magnetic_scattering_amplitude(const MagnetizabilityTensor& beta, const ScatterChannel& ch,
                                      cdouble E_in, const WaveParams& wave, const Constants& k) {
  const double k0 = wave.k0();
  const CVec3 m = beta.b * incident_column_magnetic(ch.dir_in, ch.pol_in) * (E_in / k.Z0);
  return k.c * k0 * k0 / (8.0 * kPi) * bilinear(output_row_magnetic(ch.dir_out, ch.pol_out), m);
}

ReciprocityReport reciprocity_check(const CMat3& tensor, DipoleKind kind, int trials,
                                    std::uint64_t seed, const WaveParams& wave,
                                    const Constants& k) {
  ReciprocityReport rep;
  rep.trials = trials;
  rep.tensor_symmetric = is_symmetric(tensor);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  auto amplitude = [&](const ScatterChannel& ch) {
    return kind == DipoleKind::kElectric
               ? electric_scattering_amplitude({tensor}, ch, 1.0, wave, k)
               : magnetic_scattering_amplitude({tensor}, ch, 1.0, wave, k);
  };
  for (int i = 0; i < trials; ++i) {
    ScatterChannel ch{random_direction(rng), coin(rng) ? 1 : -1, random_direction(rng),
                      coin(rng) ? 1 : -1};
    const cdouble a = amplitude(ch);
    const cdouble b = amplitude(reversed(ch));
    const double diff = std::abs(a - b);
    const double mag = std::max(std::abs(a), std::abs(b));
    rep.scale = std::max(rep.scale, mag);
    rep.max_abs_difference = std::max(rep.max_abs_difference, diff);
    if (mag > 0.0) rep.max_relative_difference = std::max(rep.max_relative_difference, diff / mag);
  }
  rep.passed = rep.max_abs_difference <= 1e-10 * rep.scale;
  return rep;
}

PathSumResult multi_scatterer_signal(const DipoleEndpoint& source, const ScattererAssembly& assembly,
                                     const DipoleEndpoint& dest, int max_order,
                                     const WaveParams& wave, const Constants& k) {
  if (max_order < 0) throw DomainError("multi_scatterer_signal: max_order must be >= 0");
  std::vector<Vec3> points{source.position, dest.position};
  for (const Scatterer& s : assembly) points.push_back(s.position);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (!((points[i] - points[j]).norm() > 0.0)) {
        throw DomainError("multi_scatterer_signal: coincident positions");
      }
    }
  }
  const std::int64_t n = static_cast<std::int64_t>(assembly.size());
  std::int64_t count = 1, level = 1;
  for (int o = 1; o <= max_order && n > 0; ++o) {
    level = (o == 1) ? n : level * (n - 1);
    count += level;
    if (count > kMaxScatteringSequences) {
      throw DomainError("multi_scatterer_signal: max_order too large (more than 1e7 sequences)");
    }
  }

  PathSumResult out;
  out.per_order.assign(static_cast<std::size_t>(max_order) + 1, 0.0);
  out.sequences = count;

  auto read_at_dest = [&](DipoleKind kind, const Vec3& pos, const CVec3& moment) {
    const CVec3 field = leg_coupling(kind, dest.kind, pos, dest.position, wave, k) * moment;
    return bilinear(dest.moment, field);
  };

  // Depth-first walk; each partial sequence carries the induced moment of
  // its last scatterer.
  auto walk = [&](auto&& self, int order, int last, DipoleKind kind, const Vec3& pos,
                  const CVec3& moment) -> void {
    out.per_order[order] += read_at_dest(kind, pos, moment);
    if (order == max_order) return;
    for (int j = 0; j < static_cast<int>(n); ++j) {
      if (j == last) continue;
      const Scatterer& s = assembly[j];
      const CVec3 field = leg_coupling(kind, s.kind, pos, s.position, wave, k) * moment;
      self(self, order + 1, j, s.kind, s.position, CVec3(s.tensor * field));
    }
  };
  walk(walk, 0, -1, source.kind, source.position, source.moment);
  for (const cdouble& v : out.per_order) out.total += v;
  return out;
}

PowerBalance dipole_power_balance(cdouble alpha, double E0, const WaveParams& wave,
                                  const Constants& k) {
  if (!(E0 > 0.0)) throw DomainError("dipole_power_balance: E0 must be positive");
  const double a = std::abs(alpha);
  const double s = a == 0.0 ? 0.0 : std::sin(std::arg(alpha));
  const double k0 = wave.k0();
  PowerBalance pb;
  pb.P_out = a * a * E0 * E0 * std::pow(k0, 4) / (12.0 * kPi * k.eps0 * k.eps0 * k.Z0);
  pb.P_in_mag = a * E0 * E0 * k0 * s / (2.0 * k.eps0 * k.Z0);
  pb.P_abs = 0.5 * a * E0 * E0 * wave.omega() * s;
  const double scale = std::max(std::abs(pb.P_in_mag), std::abs(pb.P_abs));
  if (std::abs(pb.P_in_mag - pb.P_abs) > 1e-12 * scale) {
    throw DomainError("dipole_power_balance: inflow and absorbed power disagree (c eps0 Z0 != 1)");
  }
  pb.physical = pb.P_in_mag >= pb.P_out * (1.0 - 1e-12);
  return pb;
}

PolarizabilityBound polarizability_bound(cdouble alpha, const WaveParams& wave,
                                         const Constants& k) {
  PolarizabilityBound out;
  if (alpha == cdouble(0.0)) {
    out.satisfied = true;
    return out;
  }
  const double phase = std::arg(alpha);
  const double l3 = std::pow(wave.lambda0(), 3);
  out.bound = 3.0 * k.eps0 * l3 * std::sin(phase) / (4.0 * kPi * kPi);
  out.in_model = phase > 0.0 && phase < kPi;
  out.satisfied = out.in_model && std::abs(alpha) <= out.bound * (1.0 + 1e-12);
  return out;
}

Susceptibility susceptibility_map(double N, cdouble alpha, const WaveParams& wave,
                                  const Constants& k) {
  if (!(N > 0.0)) throw DomainError("susceptibility_map: number density must be positive");
  const cdouble x = N * alpha / k.eps0;
  if (x == cdouble(0.0)) throw DomainError("susceptibility_map: singular inversion (N alpha = 0)");
  const double radiative = 4.0 * kPi * kPi / (3.0 * N * std::pow(wave.lambda0(), 3));
  const cdouble inv_chi = 1.0 / x - 1.0 / 3.0 + kI * radiative;
  if (inv_chi == cdouble(0.0)) throw DomainError("susceptibility_map: susceptibility diverges");
  Susceptibility out{1.0 / inv_chi, true};
  out.physical = out.chi_e.imag() >= -1e-12 * std::max(1.0, std::abs(out.chi_e));
  if (polarizability_bound(alpha, wave, k).satisfied && !out.physical) {
    throw DomainError("susceptibility_map: Im(chi_e) < 0 for a polarizability within the bound");
  }
  return out;
}

ForwardAmplitudes forward_amplitudes(const Scatterer& s, const IncidentCircular& inc,
                                     const WaveParams& wave, const Constants& k) {
  const double k0 = wave.k0();
  const cdouble phase_in = std::exp(kI * (k0 * s.position.y()));
  CVec3 field;
  if (s.kind == DipoleKind::kElectric) {
    const CVec3 e = inc.plus * incident_column(kForward, 1) + inc.minus * incident_column(kForward, -1);
    const CVec3 p = s.tensor * e * phase_in;
    field = k0 * k0 / (4.0 * kPi * k.eps0) * (far_field_matrix(kForward).cast<cdouble>() * p);
  } else {
    const CVec3 h = (inc.plus * incident_column_magnetic(kForward, 1) +
                     inc.minus * incident_column_magnetic(kForward, -1)) /
                    k.Z0;
    const CVec3 m = s.tensor * h * phase_in;
    field = k.c * k0 * k0 / (4.0 * kPi) * cross(m, unit_vector(kForward).cast<cdouble>());
  }
  field *= std::exp(-kI * (k0 * s.position.y()));
  return {0.5 * bilinear(output_row(kForward, 1), field),
          0.5 * bilinear(output_row(kForward, -1), field)};
}

OpticalTheorem optical_theorem_cross_section(const ScattererAssembly& assembly,
                                             const IncidentCircular& inc, const WaveParams& wave,
                                             const Constants& k) {
  const double intensity = std::norm(inc.plus) + std::norm(inc.minus);
  if (!(intensity > 0.0)) throw DomainError("optical theorem: zero incident flux");
  const CVec3 rcp = incident_column(kForward, 1);
  const CVec3 lcp = incident_column(kForward, -1);
  OpticalTheorem out;
  for (const Scatterer& s : assembly) {
    const ForwardAmplitudes f = forward_amplitudes(s, inc, wave, k);
    out.forward_vector += f.plus * rcp + f.minus * lcp;
  }
  const CVec3 e_in = inc.plus * rcp + inc.minus * lcp;
  const cdouble overlap = e_in.dot(out.forward_vector);  // conjugates e_in
  out.cross_section = 2.0 * kPi / wave.k0() * overlap.imag() / intensity;
  out.incident_flux = intensity / k.Z0;
  return out;
}

FringeResult two_particle_fringe(cdouble alpha, double d, const WaveParams& wave, double r0,
                                 double x, int out_pol, const Constants& k) {
  if (!(r0 > 0.0)) throw DomainError("two_particle_fringe: r0 must be positive");
  if (!(d >= 0.0)) throw DomainError("two_particle_fringe: separation must be >= 0");
  if (std::abs(x) > r0) throw DomainError("two_particle_fringe: |x| exceeds r0");
  if (out_pol != 1 && out_pol != -1) throw DomainError("two_particle_fringe: out_pol must be +1 or -1");
  FringeResult out;
  if (r0 < 100.0 * d) {
    out.warnings.push_back("observation distance r0 is less than 100 d; far-field fringe formula is approximate");
  }
  const double k0 = wave.k0();
  const double sin_theta = std::sqrt(1.0 - (x / r0) * (x / r0));
  const cdouble pre = alpha * k0 * k0 * std::exp(kI * (k0 * r0)) / (4.0 * kPi * k.eps0 * r0);
  out.amplitude = pre * (sin_theta + out_pol) * std::cos(kPi * d * x / (wave.lambda0() * r0));
  return out;
}

}  // namespace photonpath
