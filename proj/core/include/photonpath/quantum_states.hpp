#pragma once

#include <variant>
#include <vector>

#include "photonpath/foundations.hpp"

namespace photonpath {

struct NumberState {
  int n = 0;
};

struct CoherentState {
  cdouble gamma{0.0};
};

// Bose-Einstein state. Stored by mean photon number so that the vacuum
// limit (zeta -> infinity) is representable; zeta = 1 / mean_n.
class ThermalState {
 public:
  static ThermalState from_zeta(double zeta);
  static ThermalState from_mean(double mean_n);
  // zeta = exp(hbar omega / kB T) - 1
  static ThermalState from_temperature(const WaveParams& wave, double temperature);

  double mean_n() const { return mean_n_; }
  double zeta() const;
  double pmf(int n) const;

 private:
  explicit ThermalState(double mean_n) : mean_n_(mean_n) {}
  double mean_n_;
};

using PhotonState = std::variant<NumberState, CoherentState, ThermalState>;

inline constexpr double kPmfTailBound = 1e-12;

struct PhotonStatistics {
  double mean = 0.0;
  double variance = 0.0;
  // pmf[n] for n = 0..n_max where the tail beyond n_max is below kPmfTailBound.
  std::vector<double> pmf;
};

double poisson_pmf(double mean, int n);
double binomial_pmf(int n, int m, double p);

// Probability of n photons; total over n >= 0.
double photon_probability(const PhotonState& state, int n);

// Smallest n_max with P(N > n_max) < kPmfTailBound (analytic tail bounds).
int pmf_truncation(const PhotonState& state);

PhotonStatistics photon_statistics(const PhotonState& state);

struct ModeSpec {
  WaveParams wave;
  Direction khat;
  PolarizationVector pol;
  double volume;
};

// Throws DomainError unless V > 0, |pol| = 1 and khat . pol = 0 (tolerance 1e-9).
void validate_mode(const ModeSpec& mode);

struct FieldExpectations {
  Vec3 mean_E = Vec3::Zero();
  double mean_E_sq = 0.0;
  double var_E = 0.0;
  Vec3 mean_B = Vec3::Zero();
  double mean_B_sq = 0.0;
  double var_B = 0.0;
};

FieldExpectations field_expectations(const PhotonState& state, const ModeSpec& mode, const Vec3& r,
                                     double t, const Constants& k = Constants::codata());

// Requires e' . e'' = 0 (tolerance 1e-9).
Vec3 poynting_expectation(const CoherentState& state, const ModeSpec& mode, const Vec3& r,
                          double t, const Constants& k = Constants::codata());

struct GammaComposition {
  double prefactor;
  cdouble gamma_sum;
};

// Gamma(g1) Gamma(g2) = exp(Re(g1 g2*)) Gamma(g1 + g2).
GammaComposition compose_gamma_operators(cdouble g1, cdouble g2);

struct ThermalDistribution {
  double mean;
  std::vector<double> pmf;
};

// Bose-Einstein pmf induced by P(gamma) = (zeta/pi) exp(-zeta |gamma|^2),
// tabulated for n = 0..n_max.
ThermalDistribution thermal_from_p_representation(double zeta, int n_max = 40);

}  // namespace photonpath
