#pragma once

#include <vector>

#include "photonpath/foundations.hpp"

namespace photonpath {

struct Layer {
  cdouble n{1.0};
  double d = 0.0;
};

// Normal-incidence amplitudes of an element embedded in vacuum. Front means
// light arriving from the first layer's side.
struct ReflectTransmit {
  cdouble r;
  cdouble t;
};

struct Interface {
  cdouble rho;
  cdouble tau;
};

// Vacuum into a half-space of index n.
Interface fresnel_semiinfinite(cdouble n);

// Homogeneous slab; symmetric, so r and t are the same from either side.
ReflectTransmit slab_coefficients(const Layer& l, const WaveParams& wave);

// Two symmetric elements in contact (zero gap), first then second.
ReflectTransmit bilayer_coefficients(cdouble r1, cdouble t1, cdouble r2, cdouble t2);

// A possibly asymmetric element: reflection and transmission from each side.
struct TwoSided {
  cdouble r_front;
  cdouble t_front;
  cdouble r_back;
  cdouble t_back;
};

// Zero-gap composition of a general element followed by another.
TwoSided compose(const TwoSided& first, const TwoSided& second);

struct MultilayerCoefficients {
  cdouble rho_front;
  cdouble tau_front;
  cdouble rho_back;
  cdouble tau_back;
};

// Left fold of the zero-gap composition over the stack in the given order
// (front) and over the reversed stack (back).
MultilayerCoefficients multilayer_coefficients(const std::vector<Layer>& stack,
                                               const WaveParams& wave);

struct SheetPolarizability {
  cdouble zeta{0.0};
  double d = 0.0;

  // Sheet on the lossless boundary: (pi d / lambda0) |zeta| = sin(phi_zeta).
  static SheetPolarizability lossless(double phi_zeta, double d, const WaveParams& wave);
};

struct SheetResponse {
  cdouble t_coeff;
  cdouble r_coeff;
  double reflectance;
  double transmittance;
  cdouble chi_e;
  bool lossless;
};

SheetResponse thin_sheet_response(const SheetPolarizability& sp, const WaveParams& wave);

struct RoundTrip {
  cdouble left_amp;
  cdouble right_amp;
};

// Unit beam hits the sheet; both outputs are phase-conjugated and sent back.
RoundTrip sheet_time_reversal_roundtrip(const SheetPolarizability& sp, const WaveParams& wave);

// Integral of the backward radiation from dipole sheets at depths in
// [z_begin, z_end) of a medium with index n filling z >= 0. z_end may be
// +infinity; the boundary term at infinity is dropped.
cdouble backward_radiation_integral(cdouble n, double z_begin, double z_end, const WaveParams& wave);

// Reflection of a half-space built from the backward radiation of its dipole
// sheets; equals (1 - n) / (1 + n).
cdouble extinction_reflection(cdouble n, const WaveParams& wave);

struct ExtinctionInterior {
  cdouble forward_segment;   // sheets in [0, z0) radiating forward
  cdouble backward_segment;  // sheets in [z0, inf) radiating backward
  cdouble transmitted_term;  // (2 / (n + 1)) e^{i n k0 z0}
  cdouble cancellation_term;  // -e^{i k0 z0}
};

ExtinctionInterior extinction_interior(cdouble n, double z0, const WaveParams& wave);

}  // namespace photonpath
