#include "photonpath/quantum_states.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "photonpath/errors.hpp"

namespace photonpath {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

ThermalState ThermalState::from_zeta(double zeta) {
  if (!(zeta > 0.0)) throw DomainError("thermal state requires zeta > 0");
  return ThermalState(std::isinf(zeta) ? 0.0 : 1.0 / zeta);
}

ThermalState ThermalState::from_mean(double mean_n) {
  if (!(mean_n >= 0.0) || !std::isfinite(mean_n)) {
    throw DomainError("thermal state requires a finite mean photon number >= 0");
  }
  return ThermalState(mean_n);
}

ThermalState ThermalState::from_temperature(const WaveParams& wave, double temperature) {
  if (!(temperature > 0.0)) throw DomainError("temperature must be positive");
  const Constants& k = Constants::codata();
  return from_zeta(std::expm1(k.hbar * wave.omega() / (k.kB * temperature)));
}

double ThermalState::zeta() const {
  return mean_n_ == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / mean_n_;
}

double ThermalState::pmf(int n) const {
  if (n < 0) return 0.0;
  if (mean_n_ == 0.0) return n == 0 ? 1.0 : 0.0;
  // (1/(1+m)) (m/(1+m))^n
  return std::exp(n * std::log(mean_n_ / (1.0 + mean_n_)) - std::log1p(mean_n_));
}

double poisson_pmf(double mean, int n) {
  if (n < 0) return 0.0;
  if (mean == 0.0) return n == 0 ? 1.0 : 0.0;
  return std::exp(-mean + n * std::log(mean) - std::lgamma(n + 1.0));
}

double binomial_pmf(int n, int m, double p) {
  if (m < 0 || m > n) return 0.0;
  if (p <= 0.0) return m == 0 ? 1.0 : 0.0;
  if (p >= 1.0) return m == n ? 1.0 : 0.0;
  const double log_c = std::lgamma(n + 1.0) - std::lgamma(m + 1.0) - std::lgamma(n - m + 1.0);
  return std::exp(log_c + m * std::log(p) + (n - m) * std::log1p(-p));
}

double photon_probability(const PhotonState& state, int n) {
  return std::visit(Overloaded{
                        [n](const NumberState& s) { return n == s.n ? 1.0 : 0.0; },
                        [n](const CoherentState& s) { return poisson_pmf(std::norm(s.gamma), n); },
                        [n](const ThermalState& s) { return s.pmf(n); },
                    },
                    state);
}

int pmf_truncation(const PhotonState& state) {
  return std::visit(
      Overloaded{
          [](const NumberState& s) { return s.n; },
          [](const CoherentState& s) {
            const double mu = std::norm(s.gamma);
            // P(X >= k) <= p(k) (k + 1) / (k + 1 - mu) for k + 1 > mu.
            int n = static_cast<int>(std::ceil(mu));
            while (true) {
              const int k = n + 1;
              const double bound = poisson_pmf(mu, k) * (k + 1.0) / (k + 1.0 - mu);
              if (bound < kPmfTailBound) return n;
              ++n;
            }
          },
          [](const ThermalState& s) {
            const double m = s.mean_n();
            if (m == 0.0) return 0;
            // P(X > n) = q^{n+1}, q = m / (1 + m)
            const double log_q = std::log(m / (1.0 + m));
            const double need = std::log(kPmfTailBound) / log_q;
            int n = std::max(0, static_cast<int>(std::ceil(need)) - 1);
            while ((n + 1) * log_q >= std::log(kPmfTailBound)) ++n;
            return n;
          },
      },
      state);
}

PhotonStatistics photon_statistics(const PhotonState& state) {
  PhotonStatistics out;
  std::visit(Overloaded{
                 [&](const NumberState& s) {
                   if (s.n < 0) throw DomainError("number state requires n >= 0");
                   out.mean = s.n;
                   out.variance = 0.0;
                 },
                 [&](const CoherentState& s) {
                   out.mean = std::norm(s.gamma);
                   out.variance = out.mean;
                 },
                 [&](const ThermalState& s) {
                   out.mean = s.mean_n();
                   out.variance = out.mean + out.mean * out.mean;
                 },
             },
             state);
  const int n_max = pmf_truncation(state);
  out.pmf.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out.pmf[n] = photon_probability(state, n);
  return out;
}

void validate_mode(const ModeSpec& mode) {
  if (!(mode.volume > 0.0)) throw DomainError("mode volume V must be positive");
  if (std::abs(mode.pol.norm_squared() - 1.0) > 1e-9) {
    throw DomainError("mode polarization must satisfy e.e* = 1");
  }
  const cdouble kdote = unit_vector(mode.khat).cast<cdouble>().dot(mode.pol.e);
  if (std::abs(kdote) > 1e-9) throw DomainError("mode polarization must be transverse (k.e = 0)");
}

FieldExpectations field_expectations(const PhotonState& state, const ModeSpec& mode, const Vec3& r,
                                     double t, const Constants& k) {
  validate_mode(mode);
  const double omega = mode.wave.omega();
  const double quantum = k.hbar * omega / mode.volume;  // hbar omega / V
  const double e_unit = quantum / k.eps0;                // hbar omega / (eps0 V)
  const double b_unit = k.mu0 * quantum;                 // mu0 hbar omega / V
  const Vec3 khat = unit_vector(mode.khat);

  FieldExpectations f;
  f.var_E = 0.5 * e_unit;
  f.var_B = 0.5 * b_unit;

  auto incoherent = [&](double mean_n) {
    f.mean_E_sq = (mean_n + 0.5) * e_unit;
    f.mean_B_sq = (mean_n + 0.5) * b_unit;
    f.var_E = f.mean_E_sq;
    f.var_B = f.mean_B_sq;
  };

  std::visit(Overloaded{
                 [&](const NumberState& s) {
                   if (s.n < 0) throw DomainError("number state requires n >= 0");
                   incoherent(s.n);
                 },
                 [&](const ThermalState& s) { incoherent(s.mean_n()); },
                 [&](const CoherentState& s) {
                   const double chi = mode.wave.k0() * khat.dot(r) - omega * t;
                   const cdouble g = s.gamma;
                   const CVec3 w = mode.pol.e * (g * std::exp(kI * chi));
                   f.mean_E = -std::sqrt(2.0 * e_unit) * w.imag();
                   f.mean_B = khat.cross(f.mean_E) / k.c;
                   const cdouble g2 = g * g * std::exp(2.0 * kI * chi);
                   const cdouble ee = bilinear(mode.pol.e, mode.pol.e);
                   const CVec3 ke = cross(khat.cast<cdouble>(), mode.pol.e);
                   const cdouble kk = bilinear(ke, ke);
                   f.mean_E_sq = e_unit * (0.5 + std::norm(g) - std::real(ee * g2));
                   f.mean_B_sq = b_unit * (0.5 + std::norm(g) - std::real(kk * g2));
                 },
             },
             state);
  return f;
}

Vec3 poynting_expectation(const CoherentState& state, const ModeSpec& mode, const Vec3& r,
                          double t, const Constants& k) {
  validate_mode(mode);
  const Vec3 ep = mode.pol.real_part();
  const Vec3 epp = mode.pol.imag_part();
  if (std::abs(ep.dot(epp)) > 1e-9) {
    throw DomainError("poynting_expectation requires e'.e'' = 0");
  }
  const Vec3 khat = unit_vector(mode.khat);
  const double omega = mode.wave.omega();
  const double g2 = std::norm(state.gamma);
  const double psi = mode.wave.k0() * khat.dot(r) - omega * t + std::arg(state.gamma);
  const double scale = k.hbar * omega * k.c / mode.volume;
  const double bracket =
      0.5 + g2 - (ep.squaredNorm() - epp.squaredNorm()) * g2 * std::cos(2.0 * psi);
  return scale * bracket * khat;
}

GammaComposition compose_gamma_operators(cdouble g1, cdouble g2) {
  return {std::exp(std::real(g1 * std::conj(g2))), g1 + g2};
}

ThermalDistribution thermal_from_p_representation(double zeta, int n_max) {
  if (!(zeta > 0.0)) throw DomainError("P-representation requires zeta > 0");
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  const ThermalState s = ThermalState::from_zeta(zeta);
  ThermalDistribution out{s.mean_n(), {}};
  out.pmf.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out.pmf[n] = s.pmf(n);
  return out;
}

}  // namespace photonpath
