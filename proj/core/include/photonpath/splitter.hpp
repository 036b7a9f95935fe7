#pragma once

#include <array>
#include <string>

#include "photonpath/foundations.hpp"

namespace photonpath {

// Front-side (rho, tau) and back-side (rho_prime, tau_prime) Fresnel
// coefficients of a lossless four-port splitter.
struct SplitterCoefficients {
  cdouble rho{0.0};
  cdouble tau{0.0};
  cdouble rho_prime{0.0};
  cdouble tau_prime{0.0};
};

inline constexpr double kSplitterTolerance = 1e-9;

// rho = rho' = mod_rho e^{i phi_rho}, tau = tau' = sqrt(1 - mod_rho^2) e^{i(phi_rho + pi/2)}.
SplitterCoefficients make_symmetric_splitter(double mod_rho, double phi_rho);

enum class SplitterConstraint {
  kFrontEnergy,      // |rho|^2 + |tau|^2 = 1
  kBackEnergy,       // |rho'|^2 + |tau'|^2 = 1
  kTransmission,     // tau' = tau
  kReflectionModulus,  // |rho'| = |rho|
  kPhase,            // cos(2 phi_tau - phi_rho - phi_rho') = -1
};
inline constexpr int kSplitterConstraintCount = 5;

const char* constraint_name(SplitterConstraint c);

struct ValidationReport {
  std::array<double, kSplitterConstraintCount> residual{};
  std::array<bool, kSplitterConstraintCount> pass{};
  bool valid = false;

  double operator[](SplitterConstraint c) const { return residual[static_cast<int>(c)]; }
  bool passed(SplitterConstraint c) const { return pass[static_cast<int>(c)]; }
  // Names of failing constraints, comma separated; empty when valid.
  std::string failures() const;
};

// Never throws; a bad splitter produces a failing report.
ValidationReport validate_lossless(const SplitterCoefficients& s);

// Throws DomainError naming the failing constraints unless s is valid.
void require_lossless(const SplitterCoefficients& s, const char* context);

bool is_balanced(const SplitterCoefficients& s, double tol = kSplitterTolerance);

struct PcmRoundTrip {
  cdouble channel1;
  cdouble channel2;
};

// channel1 = rho rho* + tau' tau*, channel2 = tau rho* + rho' tau*.
PcmRoundTrip pcm_roundtrip(const SplitterCoefficients& s);

// |rho E1 + tau' E2|^2 + |tau E1 + rho' E2|^2 - (|E1|^2 + |E2|^2).
double two_beam_energy_residual(const SplitterCoefficients& s, cdouble e1, cdouble e2);

// rho tau'* + tau rho'*; vanishes for every valid splitter.
cdouble cross_term(const SplitterCoefficients& s);

}  // namespace photonpath
