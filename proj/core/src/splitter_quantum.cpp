#include "photonpath/splitter_quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "photonpath/errors.hpp"

namespace photonpath {

namespace {

void check_counts(const FockPairInput& inp) {
  if (inp.n1 < 0 || inp.n2 < 0) throw DomainError("photon counts must be >= 0");
  if (inp.n1 + inp.n2 > inp.max_total) {
    std::ostringstream os;
    os << "n1 + n2 = " << inp.n1 + inp.n2 << " exceeds the configured maximum " << inp.max_total;
    throw DomainError(os.str());
  }
}

double lfact(int n) { return std::lgamma(n + 1.0); }

// z^p as (log|z|^p, arg z^p); a zero base with a positive power yields -inf.
struct LogPow {
  double log_mod;
  double phase;
};

LogPow log_pow(cdouble z, int p) {
  if (p == 0) return {0.0, 0.0};
  const double mod = std::abs(z);
  if (mod == 0.0) return {-std::numeric_limits<double>::infinity(), 0.0};
  return {p * std::log(mod), p * std::arg(z)};
}

}  // namespace

std::vector<double> AmplitudeDistribution::probabilities() const {
  std::vector<double> p(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) p[i] = std::norm(amps[i]);
  return p;
}

AmplitudeDistribution fock_transform(const FockPairInput& inp, const SplitterCoefficients& s) {
  check_counts(inp);
  require_lossless(s, "fock_transform");
  const int n1 = inp.n1, n2 = inp.n2, total = n1 + n2;
  AmplitudeDistribution out{total, std::vector<cdouble>(total + 1)};
  const double half_log_norm = 0.5 * (lfact(n1) + lfact(n2));
  for (int m = 0; m <= total; ++m) {
    const double log_outer = half_log_norm + 0.5 * (lfact(m) + lfact(total - m));
    cdouble acc = 0.0;
    for (int m1 = std::max(0, m - n2); m1 <= std::min(m, n1); ++m1) {
      const int m2 = m - m1;
      // port 1: m1 reflections (rho), n1 - m1 transmissions (tau)
      // port 2: m2 transmissions (tau'), n2 - m2 reflections (rho')
      const LogPow parts[] = {log_pow(s.rho, m1), log_pow(s.tau, n1 - m1),
                              log_pow(s.tau_prime, m2), log_pow(s.rho_prime, n2 - m2)};
      double log_mod = log_outer - lfact(m1) - lfact(m2) - lfact(n1 - m1) - lfact(n2 - m2);
      double phase = 0.0;
      for (const LogPow& lp : parts) {
        log_mod += lp.log_mod;
        phase += lp.phase;
      }
      if (std::isinf(log_mod)) continue;
      acc += std::polar(std::exp(log_mod), phase);
    }
    out.amps[m] = acc;
  }
  return out;
}

AmplitudeDistribution fock_oracle(const FockPairInput& inp, const SplitterCoefficients& s) {
  check_counts(inp);
  require_lossless(s, "fock_oracle");
  const int n1 = inp.n1, n2 = inp.n2, total = n1 + n2;
  // poly[k] is the coefficient of x^k y^(deg - k).
  std::vector<cdouble> poly{1.0};
  auto multiply = [&poly](cdouble ax, cdouble by) {
    std::vector<cdouble> next(poly.size() + 1, 0.0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += ax * poly[k];
      next[k] += by * poly[k];
    }
    poly.swap(next);
  };
  for (int i = 0; i < n1; ++i) multiply(s.rho, s.tau);
  for (int i = 0; i < n2; ++i) multiply(s.tau_prime, s.rho_prime);
  AmplitudeDistribution out{total, std::vector<cdouble>(total + 1)};
  for (int m = 0; m <= total; ++m) {
    const double scale =
        std::exp(0.5 * (lfact(m) + lfact(total - m) - lfact(n1) - lfact(n2)));
    out.amps[m] = poly[m] * scale;
  }
  return out;
}

double hom_coincidence_probability(const SplitterCoefficients& s) {
  require_lossless(s, "hom_coincidence_probability");
  return std::norm(s.rho * s.rho_prime + s.tau * s.tau_prime);
}

CoherentPair coherent_combine(cdouble g1, cdouble g2, const SplitterCoefficients& s) {
  require_lossless(s, "coherent_combine");
  return {s.rho * g1 + s.tau_prime * g2, s.tau * g1 + s.rho_prime * g2};
}

ReflectedCountStats number_state_reflect_stats(int n, const SplitterCoefficients& s) {
  if (n < 0) throw DomainError("photon count must be >= 0");
  require_lossless(s, "number_state_reflect_stats");
  const double r2 = std::norm(s.rho);
  const double t2 = std::norm(s.tau);
  ReflectedCountStats out;
  out.mean = n * r2;
  out.second_moment = static_cast<double>(n) * n * r2 * r2 + n * r2 * t2;
  out.pmf.resize(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) out.pmf[m] = binomial_pmf(n, m, r2);
  return out;
}

ThermalState thermal_split(const ThermalState& t, const SplitterCoefficients& s) {
  require_lossless(s, "thermal_split");
  return ThermalState::from_mean(std::norm(s.rho) * t.mean_n());
}

}  // namespace photonpath
