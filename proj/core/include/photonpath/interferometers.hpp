#pragma once

#include <array>
#include <optional>
#include <string>

#include "photonpath/splitter.hpp"

namespace photonpath {

// s2 is entered from the left by the lower arm (rho, tau) and from below by
// the upper arm (rho_prime = rho'', tau_prime = tau').
struct MachZehnderConfig {
  SplitterCoefficients s1;
  SplitterCoefficients s2;
  double phi1 = 0.0;  // upper arm, reached by reflection at s1
  double phi2 = 0.0;  // lower arm, reached by transmission at s1
  bool strict = true;  // require 50/50 splitters
};

struct MzPath {
  const char* name;
  int exit;  // 1 or 2
  cdouble amplitude;
};

// The four single-photon routes through the interferometer.
std::array<MzPath, 4> mzi_paths(const MachZehnderConfig& cfg);

struct MzExitAmplitudes {
  cdouble exit1;
  cdouble exit2;
};

MzExitAmplitudes mzi_exit_amplitudes(const MachZehnderConfig& cfg);

// Warning text when the arm length difference is not small against the
// wavepacket length c*dt (threshold: 10% of c*dt).
std::optional<std::string> coherence_warning(double path_difference, double packet_duration);

struct SagnacGeometry {
  Vec3 S = Vec3::Zero();
  Vec3 M1 = Vec3::Zero();
  Vec3 M2 = Vec3::Zero();
  Vec3 C = Vec3::Zero();
  Vec3 Omega = Vec3::Zero();
  WaveParams wave = WaveParams::from_wavelength(633e-9);
};

struct SagnacPhaseRoutes {
  double leg_sum;      // 2 (k0/c) sum_i (R_i x r_i) . Omega over S->M1->M2->S
  double closed_form;  // (4 k0/c) A . Omega
  Vec3 area;           // A = (M1 - S) x (M2 - S) / 2
};

// Both routes for the relative phase 2*dphi of the counter-propagating beams.
SagnacPhaseRoutes sagnac_phase_routes(const SagnacGeometry& g);

// Leg sum, after checking it agrees with the closed form to 1e-12 relative.
double sagnac_phase(const SagnacGeometry& g);

// |rho rho'' e^{i dphi} + tau tau' e^{-i dphi}|^2 with dphi = sagnac_phase / 2.
double sagnac_detection_probability(const SagnacGeometry& g, const SplitterCoefficients& s);

}  // namespace photonpath
