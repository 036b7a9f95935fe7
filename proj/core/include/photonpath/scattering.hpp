#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "photonpath/foundations.hpp"

namespace photonpath {

// All geometry here is in one canonical frame: polar axis z, and the forward
// direction of the optical-theorem and diffraction setups is (theta, phi) =
// (pi/2, pi/2), i.e. +y. The beam frame used by those setups (propagation
// along its own z) relabels axes as beam = (z, x, y) of the canonical frame.
Vec3 beam_from_canonical(const Vec3& v);
Vec3 canonical_from_beam(const Vec3& v);
CVec3 beam_from_canonical(const CVec3& v);
CVec3 canonical_from_beam(const CVec3& v);

struct PolarizabilityTensor {
  CMat3 a = CMat3::Zero();
  static PolarizabilityTensor isotropic(cdouble alpha) { return {CMat3::Identity() * alpha}; }
};

struct MagnetizabilityTensor {
  CMat3 b = CMat3::Zero();
  static MagnetizabilityTensor isotropic(cdouble beta) { return {CMat3::Identity() * beta}; }
};

bool is_symmetric(const CMat3& m, double rel_tol = 1e-12);

enum class DipoleKind { kElectric, kMagnetic };

// +1 right circular, -1 left circular.
struct ScatterChannel {
  Direction dir_in;
  int pol_in = 1;
  Direction dir_out;
  int pol_out = 1;
};

// The reversed channel: directions swapped and both helicity flags negated.
ScatterChannel reversed(const ScatterChannel& ch);

// Transverse projector I - r r^T in entry-by-entry form.
Eigen::Matrix3d far_field_matrix(const Direction& d);

// E = k0^2 e^{i k0 r} / (4 pi eps0 r) M p.
CVec3 dipole_radiated_field(const CVec3& p, const Direction& d, double r, const WaveParams& wave,
                            const Constants& k = Constants::codata());

// eps' + s i eps''. Incident electric polarization for helicity s; the
// outgoing projection row for helicity s is incident_column(d, -s).
CVec3 incident_column(const Direction& d, int s);
CVec3 output_row(const Direction& d, int s);
// Magnetic analogues: H_in = Z0^-1 E_in incident_column_magnetic(d, s).
CVec3 incident_column_magnetic(const Direction& d, int s);
CVec3 output_row_magnetic(const Direction& d, int s);

cdouble electric_scattering_amplitude(const PolarizabilityTensor& alpha, const ScatterChannel& ch,
                                      cdouble E_in, const WaveParams& wave,
                                      const Constants& k = Constants::codata());

cdouble magnetic_scattering_amplitude(const MagnetizabilityTensor& beta, const ScatterChannel& ch,
                                      cdouble E_in, const WaveParams& wave,
                                      const Constants& k = Constants::codata());

struct ReciprocityReport {
  int trials = 0;
  double max_abs_difference = 0.0;
  double max_relative_difference = 0.0;
  double scale = 0.0;
  bool tensor_symmetric = false;
  bool passed = false;
};

// Random channels (seeded) compared with their reversed counterparts;
// passes iff max |difference| < 1e-10 * scale, with scale the largest
// amplitude magnitude seen.
ReciprocityReport reciprocity_check(const CMat3& tensor, DipoleKind kind, int trials,
                                    std::uint64_t seed, const WaveParams& wave,
                                    const Constants& k = Constants::codata());

struct Scatterer {
  Vec3 position = Vec3::Zero();
  DipoleKind kind = DipoleKind::kElectric;
  CMat3 tensor = CMat3::Zero();
};

using ScattererAssembly = std::vector<Scatterer>;

struct DipoleEndpoint {
  Vec3 position = Vec3::Zero();
  DipoleKind kind = DipoleKind::kElectric;
  CVec3 moment = CVec3::Zero();
};

struct PathSumResult {
  cdouble total{0.0};
  std::vector<cdouble> per_order;  // index = number of scattering events
  std::int64_t sequences = 0;
};

inline constexpr std::int64_t kMaxScatteringSequences = 10'000'000;

// Coherent sum over every scattering sequence of length <= max_order
// (no immediate self-scattering) of the destination reading: E.p_d for an
// electric destination, H.m_d for a magnetic one. Legs use far-field
// propagators only. Swapping source and destination returns the same value
// when their kinds agree and its negative when they differ.
PathSumResult multi_scatterer_signal(const DipoleEndpoint& source, const ScattererAssembly& assembly,
                                     const DipoleEndpoint& dest, int max_order,
                                     const WaveParams& wave,
                                     const Constants& k = Constants::codata());

struct PowerBalance {
  double P_out = 0.0;     // radiated
  double P_in_mag = 0.0;  // magnitude of the inward Poynting flux through a far sphere
  double P_abs = 0.0;     // work done by the incident field on the dipole
  bool physical = false;  // P_in_mag >= P_out
};

// Linearly polarized incident plane wave of amplitude E0.
PowerBalance dipole_power_balance(cdouble alpha, double E0, const WaveParams& wave,
                                  const Constants& k = Constants::codata());

struct PolarizabilityBound {
  double bound = 0.0;
  bool satisfied = false;
  bool in_model = true;  // false when arg(alpha) is outside (0, pi)
};

PolarizabilityBound polarizability_bound(cdouble alpha, const WaveParams& wave,
                                         const Constants& k = Constants::codata());

struct Susceptibility {
  cdouble chi_e;
  bool physical = true;  // Im(chi_e) >= -1e-12
};

// Inverts N alpha / eps0 = [chi^-1 + 1/3 - i 4 pi^2 / (3 N lambda0^3)]^-1.
Susceptibility susceptibility_map(double N, cdouble alpha, const WaveParams& wave,
                                  const Constants& k = Constants::codata());

struct IncidentCircular {
  cdouble plus{0.0};
  cdouble minus{0.0};
};

struct ForwardAmplitudes {
  cdouble plus{0.0};
  cdouble minus{0.0};
};

// Forward (+y) scattered circular amplitudes of one dipole, per unit
// e^{i k0 z0}/z0, phase-referenced to the origin.
ForwardAmplitudes forward_amplitudes(const Scatterer& s, const IncidentCircular& inc,
                                     const WaveParams& wave, const Constants& k = Constants::codata());

struct OpticalTheorem {
  double cross_section = 0.0;  // m^2
  double incident_flux = 0.0;  // W/m^2
  CVec3 forward_vector = CVec3::Zero();
};

// Extinction cross-section of independent dipoles from the imaginary part of
// the coherent forward amplitude. Incidence along +y.
OpticalTheorem optical_theorem_cross_section(const ScattererAssembly& assembly,
                                             const IncidentCircular& inc, const WaveParams& wave,
                                             const Constants& k = Constants::codata());

struct FringeResult {
  cdouble amplitude;
  std::vector<std::string> warnings;
};

// Two identical isotropic particles a distance d apart on the x axis, lit
// along z by a right circular photon; amplitude per unit incident field at
// observation coordinate x on a screen at distance r0.
FringeResult two_particle_fringe(cdouble alpha, double d, const WaveParams& wave, double r0,
                                 double x, int out_pol, const Constants& k = Constants::codata());

}  // namespace photonpath
