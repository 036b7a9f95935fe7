#include "photonpath/interferometers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "photonpath/errors.hpp"

namespace photonpath {

std::array<MzPath, 4> mzi_paths(const MachZehnderConfig& cfg) {
  const SplitterCoefficients& a = cfg.s1;
  const SplitterCoefficients& b = cfg.s2;
  const cdouble upper = std::exp(kI * cfg.phi1);
  const cdouble lower = std::exp(kI * cfg.phi2);
  return {{
      {"reflect s1, transmit s2 (from below)", 1, a.rho * b.tau_prime * upper},
      {"transmit s1, reflect s2 (from left)", 1, a.tau * b.rho * lower},
      {"reflect s1, reflect s2 (from below)", 2, a.rho * b.rho_prime * upper},
      {"transmit s1, transmit s2 (from left)", 2, a.tau * b.tau * lower},
  }};
}

MzExitAmplitudes mzi_exit_amplitudes(const MachZehnderConfig& cfg) {
  require_lossless(cfg.s1, "mzi: first splitter");
  require_lossless(cfg.s2, "mzi: second splitter");
  if (cfg.strict && !(is_balanced(cfg.s1) && is_balanced(cfg.s2))) {
    throw DomainError("mzi: strict mode requires 50/50 splitters");
  }
  MzExitAmplitudes out{0.0, 0.0};
  for (const MzPath& p : mzi_paths(cfg)) (p.exit == 1 ? out.exit1 : out.exit2) += p.amplitude;
  return out;
}

std::optional<std::string> coherence_warning(double path_difference, double packet_duration) {
  const double packet_length = Constants::codata().c * packet_duration;
  if (std::abs(path_difference) < 0.1 * packet_length) return std::nullopt;
  std::ostringstream os;
  os << "arm length difference " << path_difference << " m is not small against the packet length "
     << packet_length << " m";
  return os.str();
}

SagnacPhaseRoutes sagnac_phase_routes(const SagnacGeometry& g) {
  const Vec3 legs[3] = {g.M1 - g.S, g.M2 - g.M1, g.S - g.M2};
  const Vec3 ends[3] = {g.M1, g.M2, g.S};
  const double scale = g.wave.k0() / Constants::codata().c;
  const double longest = std::max({legs[0].norm(), legs[1].norm(), legs[2].norm()});
  const Vec3 area = 0.5 * (g.M1 - g.S).cross(g.M2 - g.S);
  if (!(area.norm() > 1e-12 * longest * longest)) {
    throw DomainError("sagnac: splitter and mirrors are collinear (degenerate triangle)");
  }
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) sum += (ends[i] - g.C).cross(legs[i]).dot(g.Omega);
  return {2.0 * scale * sum, 4.0 * scale * area.dot(g.Omega), area};
}

double sagnac_phase(const SagnacGeometry& g) {
  const SagnacPhaseRoutes r = sagnac_phase_routes(g);
  const double magnitude =
      4.0 * g.wave.k0() / Constants::codata().c * r.area.norm() * g.Omega.norm();
  if (std::abs(r.leg_sum - r.closed_form) > 1e-12 * magnitude + 1e-300) {
    std::ostringstream os;
    os.precision(17);
    os << "sagnac: leg sum " << r.leg_sum << " disagrees with closed form " << r.closed_form;
    throw DomainError(os.str());
  }
  return r.leg_sum;
}

double sagnac_detection_probability(const SagnacGeometry& g, const SplitterCoefficients& s) {
  require_lossless(s, "sagnac");
  if (!is_balanced(s)) throw DomainError("sagnac: splitter must be 50/50");
  const double half = 0.5 * sagnac_phase(g);
  const cdouble clockwise = s.rho * s.rho_prime * std::exp(kI * half);
  const cdouble counter = s.tau * s.tau_prime * std::exp(-kI * half);
  return std::norm(clockwise + counter);
}

}  // namespace photonpath
