#include "photonpath/layered_media.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "photonpath/errors.hpp"

namespace photonpath {

namespace {

constexpr double kResonanceGuard = 1e-15;

void check_layer(const Layer& l) {
  if (!(l.d >= 0.0) || !std::isfinite(l.d)) throw DomainError("layer thickness must be >= 0");
  if (l.n.imag() < 0.0) throw DomainError("layer index must have Im(n) >= 0");
}

cdouble guarded_inverse(cdouble den, const char* what) {
  if (std::abs(den) < kResonanceGuard) {
    throw DomainError(std::string(what) + ": resonant denominator");
  }
  return 1.0 / den;
}

double sheet_beta(const SheetPolarizability& sp, const WaveParams& wave) {
  if (!(sp.d > 0.0)) throw DomainError("sheet thickness must be positive");
  if (!(sp.d < wave.lambda0() / 20.0)) {
    throw DomainError("sheet is not thin: thickness must be below lambda0/20");
  }
  return kPi * sp.d / wave.lambda0();
}

double zeta_phase(cdouble zeta) { return zeta == cdouble(0.0) ? 0.0 : std::arg(zeta); }

}  // namespace

Interface fresnel_semiinfinite(cdouble n) {
  if (n == cdouble(-1.0)) throw DomainError("fresnel_semiinfinite: n = -1");
  const cdouble rho = (1.0 - n) / (1.0 + n);
  return {rho, 1.0 + rho};
}

ReflectTransmit slab_coefficients(const Layer& l, const WaveParams& wave) {
  check_layer(l);
  const cdouble rho = fresnel_semiinfinite(l.n).rho;
  const cdouble phi = l.n * wave.k0() * l.d;
  const cdouble e2 = std::exp(2.0 * kI * phi);
  const cdouble inv = guarded_inverse(1.0 - rho * rho * e2, "slab_coefficients");
  return {(1.0 - e2) * rho * inv, (1.0 - rho * rho) * std::exp(kI * phi) * inv};
}

ReflectTransmit bilayer_coefficients(cdouble r1, cdouble t1, cdouble r2, cdouble t2) {
  const cdouble inv = guarded_inverse(1.0 - r1 * r2, "bilayer_coefficients");
  return {(r1 - (r1 * r1 - t1 * t1) * r2) * inv, t1 * t2 * inv};
}

TwoSided compose(const TwoSided& a, const TwoSided& b) {
  // Geometric series of round trips inside the zero-width gap.
  const cdouble inv = guarded_inverse(1.0 - a.r_back * b.r_front, "compose");
  return {a.r_front + a.t_front * b.r_front * a.t_back * inv, a.t_front * b.t_front * inv,
          b.r_back + b.t_back * a.r_back * b.t_front * inv, b.t_back * a.t_back * inv};
}

MultilayerCoefficients multilayer_coefficients(const std::vector<Layer>& stack,
                                               const WaveParams& wave) {
  if (stack.empty()) throw DomainError("multilayer_coefficients: empty stack");
  auto fold = [&wave](auto first, auto last) {
    TwoSided acc{0.0, 1.0, 0.0, 1.0};
    for (auto it = first; it != last; ++it) {
      const ReflectTransmit s = slab_coefficients(*it, wave);
      acc = compose(acc, {s.r, s.t, s.r, s.t});
    }
    return acc;
  };
  const TwoSided front = fold(stack.begin(), stack.end());
  const TwoSided back = fold(stack.rbegin(), stack.rend());
  return {front.r_front, front.t_front, back.r_front, back.t_front};
}

SheetPolarizability SheetPolarizability::lossless(double phi_zeta, double d, const WaveParams& wave) {
  if (!(phi_zeta >= 0.0 && phi_zeta <= kPi)) throw DomainError("phi_zeta must lie in [0, pi]");
  const double beta = sheet_beta({0.0, d}, wave);
  return {std::polar(std::sin(phi_zeta) / beta, phi_zeta), d};
}

SheetResponse thin_sheet_response(const SheetPolarizability& sp, const WaveParams& wave) {
  const double beta = sheet_beta(sp, wave);
  const double drive = beta * std::abs(sp.zeta);
  const double limit = std::sin(zeta_phase(sp.zeta));
  if (drive > limit + 1e-12 * std::max(1.0, drive)) {
    throw DomainError("thin_sheet_response: (pi d/lambda0)|zeta| exceeds sin(phi_zeta) (gain medium)");
  }
  SheetResponse out;
  out.r_coeff = kI * beta * sp.zeta;
  out.t_coeff = 1.0 + out.r_coeff;
  out.reflectance = std::norm(out.r_coeff);
  out.transmittance = std::norm(out.t_coeff);
  out.chi_e = sp.zeta / out.t_coeff;
  out.lossless = std::abs(drive - limit) <= 1e-9;
  return out;
}

RoundTrip sheet_time_reversal_roundtrip(const SheetPolarizability& sp, const WaveParams& wave) {
  const SheetResponse s = thin_sheet_response(sp, wave);
  if (!s.lossless) throw DomainError("sheet_time_reversal_roundtrip: sheet is lossy");
  // Conjugated transmitted beam returns from the right, conjugated reflected
  // beam from the left; each is split again by the sheet.
  const cdouble back_t = std::conj(s.t_coeff);
  const cdouble back_r = std::conj(s.r_coeff);
  return {s.t_coeff * back_t + s.r_coeff * back_r, s.r_coeff * back_t + s.t_coeff * back_r};
}

cdouble backward_radiation_integral(cdouble n, double z_begin, double z_end, const WaveParams& wave) {
  if (n.imag() < 0.0) throw DomainError("extinction: Im(n) must be >= 0");
  if (!(z_begin >= 0.0) || !(z_end >= z_begin)) throw DomainError("extinction: bad segment");
  const double k0 = wave.k0();
  const cdouble prefactor = kI * k0 * (n - 1.0);  // tau (i pi / lambda0) chi_e
  const cdouble q = (n + 1.0) * k0;
  auto antiderivative = [&](double z) -> cdouble {
    if (std::isinf(z)) return 0.0;
    return std::exp(kI * q * z) / (kI * q);
  };
  return prefactor * (antiderivative(z_end) - antiderivative(z_begin));
}

cdouble extinction_reflection(cdouble n, const WaveParams& wave) {
  if (n == cdouble(-1.0)) throw DomainError("extinction: n = -1");
  return backward_radiation_integral(n, 0.0, std::numeric_limits<double>::infinity(), wave);
}

ExtinctionInterior extinction_interior(cdouble n, double z0, const WaveParams& wave) {
  if (!(z0 > 0.0)) throw DomainError("extinction_interior: z0 must be positive");
  if (n.imag() < 0.0) throw DomainError("extinction: Im(n) must be >= 0");
  const double k0 = wave.k0();
  const cdouble prefactor = kI * k0 * (n - 1.0);
  const cdouble incident = std::exp(kI * (k0 * z0));
  // Forward radiation from [0, z0): prefactor e^{i k0 z0} int e^{i(n-1)k0 z} dz.
  // Its antiderivative has the coefficient prefactor / (i (n-1) k0), which is
  // 1 for every n != 1 and taken as its limit at n = 1.
  const cdouble a = (n == cdouble(1.0)) ? cdouble(1.0) : prefactor / (kI * (n - 1.0) * k0);
  const cdouble upper = a * std::exp(kI * (n * k0 * z0));
  const cdouble lower = -a * incident;
  ExtinctionInterior out;
  out.forward_segment = upper + lower;
  out.backward_segment =
      std::exp(-kI * (k0 * z0)) *
      backward_radiation_integral(n, z0, std::numeric_limits<double>::infinity(), wave);
  out.transmitted_term = upper + out.backward_segment;
  out.cancellation_term = lower;
  if (std::abs(out.cancellation_term + incident) > 1e-12) {
    throw DomainError("extinction_interior: incident-wave cancellation failed");
  }
  return out;
}

}  // namespace photonpath
