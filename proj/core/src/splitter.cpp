#include "photonpath/splitter.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "photonpath/errors.hpp"

namespace photonpath {

SplitterCoefficients make_symmetric_splitter(double mod_rho, double phi_rho) {
  if (!(mod_rho >= 0.0 && mod_rho <= 1.0)) {
    std::ostringstream os;
    os << "splitter reflection modulus " << mod_rho << " outside [0, 1]";
    throw DomainError(os.str());
  }
  const cdouble rho = std::polar(mod_rho, phi_rho);
  const double mod_tau = std::sqrt(std::max(0.0, 1.0 - mod_rho * mod_rho));
  const cdouble tau = mod_tau == 0.0 ? cdouble(0.0) : std::polar(mod_tau, phi_rho + kPi / 2);
  return {rho, tau, rho, tau};
}

const char* constraint_name(SplitterConstraint c) {
  switch (c) {
    case SplitterConstraint::kFrontEnergy: return "front energy |rho|^2+|tau|^2=1";
    case SplitterConstraint::kBackEnergy: return "back energy |rho'|^2+|tau'|^2=1";
    case SplitterConstraint::kTransmission: return "transmission symmetry tau'=tau";
    case SplitterConstraint::kReflectionModulus: return "reflection modulus |rho'|=|rho|";
    case SplitterConstraint::kPhase: return "phase relation phi_tau=(phi_rho+phi_rho')/2+-pi/2";
  }
  return "unknown";
}

std::string ValidationReport::failures() const {
  std::string out;
  for (int i = 0; i < kSplitterConstraintCount; ++i) {
    if (!pass[i]) {
      if (!out.empty()) out += ", ";
      out += constraint_name(static_cast<SplitterConstraint>(i));
    }
  }
  return out;
}

ValidationReport validate_lossless(const SplitterCoefficients& s) {
  ValidationReport r;
  r.residual[0] = std::abs(std::norm(s.rho) + std::norm(s.tau) - 1.0);
  r.residual[1] = std::abs(std::norm(s.rho_prime) + std::norm(s.tau_prime) - 1.0);
  r.residual[2] = std::abs(s.tau_prime - s.tau);
  r.residual[3] = std::abs(std::abs(s.rho_prime) - std::abs(s.rho));
  // A vanishing coefficient has no phase; the relation is then vacuous.
  const double smallest = std::min({std::abs(s.rho), std::abs(s.rho_prime), std::abs(s.tau)});
  if (smallest < 1e-12) {
    r.residual[4] = 0.0;
  } else {
    const double a = 2.0 * std::arg(s.tau) - std::arg(s.rho) - std::arg(s.rho_prime);
    r.residual[4] = std::abs(std::cos(a) + 1.0);
  }
  r.valid = true;
  for (int i = 0; i < kSplitterConstraintCount; ++i) {
    r.pass[i] = std::isfinite(r.residual[i]) && r.residual[i] < kSplitterTolerance;
    r.valid = r.valid && r.pass[i];
  }
  return r;
}

void require_lossless(const SplitterCoefficients& s, const char* context) {
  const ValidationReport r = validate_lossless(s);
  if (!r.valid) {
    throw DomainError(std::string(context) + ": invalid splitter (" + r.failures() + ")");
  }
}

bool is_balanced(const SplitterCoefficients& s, double tol) {
  return std::abs(std::norm(s.rho) - 0.5) < tol && std::abs(std::norm(s.rho_prime) - 0.5) < tol;
}

PcmRoundTrip pcm_roundtrip(const SplitterCoefficients& s) {
  return {s.rho * std::conj(s.rho) + s.tau_prime * std::conj(s.tau),
          s.tau * std::conj(s.rho) + s.rho_prime * std::conj(s.tau)};
}

double two_beam_energy_residual(const SplitterCoefficients& s, cdouble e1, cdouble e2) {
  const cdouble out1 = s.rho * e1 + s.tau_prime * e2;
  const cdouble out2 = s.tau * e1 + s.rho_prime * e2;
  return std::norm(out1) + std::norm(out2) - (std::norm(e1) + std::norm(e2));
}

cdouble cross_term(const SplitterCoefficients& s) {
  return s.rho * std::conj(s.tau_prime) + s.tau * std::conj(s.rho_prime);
}

}  // namespace photonpath
