#pragma once

#include <vector>

#include "photonpath/quantum_states.hpp"
#include "photonpath/splitter.hpp"

namespace photonpath {

struct FockPairInput {
  int n1 = 0;
  int n2 = 0;
  int max_total = 24;
};

// amps[m] is the amplitude for m photons leaving through port 3 and
// total - m through port 4.
struct AmplitudeDistribution {
  int total = 0;
  std::vector<cdouble> amps;

  std::vector<double> probabilities() const;
};

// Port 1 couples to ports (3, 4) through (rho, tau), port 2 through
// (tau', rho'). For a symmetric splitter this is the usual
// a1+ -> rho a3+ + tau a4+, a2+ -> tau a3+ + rho a4+.
//
// Double sum over (m1, m2) with m1 + m2 = m, factorials in log-gamma form.
AmplitudeDistribution fock_transform(const FockPairInput& inp, const SplitterCoefficients& s);

// Expands (rho x + tau y)^n1 (tau' x + rho' y)^n2 by repeated convolution
// and rescales the x^m y^(N-m) coefficient by sqrt(m!(N-m)!/(n1!n2!)).
AmplitudeDistribution fock_oracle(const FockPairInput& inp, const SplitterCoefficients& s);

// |rho rho' + tau tau'|^2, the |1,1> coincidence probability.
double hom_coincidence_probability(const SplitterCoefficients& s);

struct CoherentPair {
  cdouble g3;
  cdouble g4;
};

// g3 = rho g1 + tau' g2, g4 = tau g1 + rho' g2.
CoherentPair coherent_combine(cdouble g1, cdouble g2, const SplitterCoefficients& s);

struct ReflectedCountStats {
  double mean;
  double second_moment;
  std::vector<double> pmf;
};

ReflectedCountStats number_state_reflect_stats(int n, const SplitterCoefficients& s);

// Reflected arm of a thermal beam: Bose-Einstein with mean |rho|^2 <n>.
ThermalState thermal_split(const ThermalState& t, const SplitterCoefficients& s);

}  // namespace photonpath
