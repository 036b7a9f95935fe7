#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

namespace photonpath::cli {

namespace {

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double rel_diff(cdouble a, cdouble b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::vector<double> head(const std::vector<double>& pmf, int n_max) {
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
  std::copy_n(pmf.begin(), std::min(out.size(), pmf.size()), out.begin());
  return out;
}

ThermalState read_thermal(const Params& p) {
  const int given = int(p.has("mean_n")) + int(p.has("zeta")) + int(p.has("temperature"));
  if (given != 1) throw ConfigError(p.field("mean_n"), "give exactly one of mean_n, zeta, temperature");
  if (p.has("mean_n")) return ThermalState::from_mean(p.non_negative("mean_n"));
  if (p.has("zeta")) return ThermalState::from_zeta(p.positive("zeta"));
  return ThermalState::from_temperature(read_wave(p), p.non_negative("temperature"));
}

PhotonState read_state(const Params& p) {
  const std::string kind = p.choice("kind", {"number", "coherent", "thermal"});
  PhotonState s;
  if (kind == "number") {
    const int n = p.integer("n");
    if (n < 0) throw ConfigError(p.field("n"), "must be non-negative");
    s = NumberState{n};
  } else if (kind == "coherent") {
    s = CoherentState{p.complex("gamma")};
  } else {
    s = read_thermal(p);
  }
  p.finish();
  return s;
}

void put_splitter(Results& r, const SplitterCoefficients& s) {
  r.value("rho", s.rho, "1");
  r.value("tau", s.tau, "1");
  r.value("rho_prime", s.rho_prime, "1");
  r.value("tau_prime", s.tau_prime, "1");
}

// --- splitter -------------------------------------------------------------

Runner prepare_splitter(const Params& p) {
  const SplitterCoefficients s = read_splitter(p.table("splitter"));
  const cdouble e1 = p.complex("e1", 1.0), e2 = p.complex("e2", 0.0);
  p.finish();
  return [=](Results& r) {
    require_lossless(s, "splitter");
    const ValidationReport rep = validate_lossless(s);
    put_splitter(r, s);
    r.flag("valid", rep.valid);
    r.flag("balanced", is_balanced(s));
    const PcmRoundTrip rt = pcm_roundtrip(s);
    r.value("pcm_channel1", rt.channel1, "1");
    r.value("pcm_channel2", rt.channel2, "1");
    r.value("cross_term", cross_term(s), "1");
    static const char* const keys[kSplitterConstraintCount] = {"front_energy", "back_energy", "transmission",
                                                                 "reflection_modulus", "phase"};
    for (int c = 0; c < kSplitterConstraintCount; ++c) r.residual(keys[c], rep.residual[c]);
    r.residual("two_beam_energy", std::abs(two_beam_energy_residual(s, e1, e2)));
  };
}

// --- fock / hom / coherent / thermal ----------------------------------------

Runner prepare_fock(const Params& p) {
  FockPairInput in;
  in.n1 = p.integer("n1");
  in.n2 = p.integer("n2");
  in.max_total = p.integer("max_total", in.max_total);
  const SplitterCoefficients s = read_splitter(p.table("splitter"));
  p.finish();
  return [=](Results& r) {
    const AmplitudeDistribution d = fock_transform(in, s);
    const std::vector<double> prob = d.probabilities();
    r.value("total", static_cast<double>(d.total), "photons");
    r.value("amplitudes", d.amps, "1");
    r.value("probabilities", prob, "1");
    r.residual("normalization", std::abs(std::accumulate(prob.begin(), prob.end(), 0.0) - 1.0));
    const AmplitudeDistribution o = fock_oracle(in, s);
    double worst = 0.0;
    for (std::size_t m = 0; m < d.amps.size(); ++m) worst = std::max(worst, std::abs(d.amps[m] - o.amps[m]));
    r.residual("oracle_max_difference", worst);
  };
}

Runner prepare_hom(const Params& p) {
  const SplitterCoefficients s = read_splitter(p.table("splitter"));
  p.finish();
  return [=](Results& r) {
    const double pc = hom_coincidence_probability(s);
    const std::vector<double> prob = fock_transform({1, 1}, s).probabilities();
    r.value("reflectance", std::norm(s.rho), "1");
    r.value("coincidence_probability", pc, "1");
    r.value("both_port4_probability", prob[0], "1");
    r.value("both_port3_probability", prob[2], "1");
    r.residual("fock_consistency", std::abs(pc - prob[1]));
    r.residual("normalization", std::abs(prob[0] + prob[1] + prob[2] - 1.0));
  };
}

Runner prepare_coherent(const Params& p) {
  const cdouble g1 = p.complex("gamma1"), g2 = p.complex("gamma2", 0.0);
  const SplitterCoefficients s = read_splitter(p.table("splitter"));
  p.finish();
  return [=](Results& r) {
    const CoherentPair out = coherent_combine(g1, g2, s);
    r.value("gamma3", out.g3, "1");
    r.value("gamma4", out.g4, "1");
    r.value("mean_n3", std::norm(out.g3), "photons");
    r.value("mean_n4", std::norm(out.g4), "photons");
    const double in = std::norm(g1) + std::norm(g2);
    r.residual("photon_number", std::abs(std::norm(out.g3) + std::norm(out.g4) - in) / std::max(1.0, in));
  };
}

Runner prepare_thermal(const Params& p) {
  const ThermalState t = read_thermal(p);
  const SplitterCoefficients s = read_splitter(p.table("splitter"));
  const int pmf_max = p.integer("pmf_max", 10);
  if (pmf_max < 0 || pmf_max > 10000) throw ConfigError(p.field("pmf_max"), "must lie in [0, 10000]");
  p.finish();
  return [=](Results& r) {
    const ThermalState out = thermal_split(t, s);
    const PhotonStatistics st = photon_statistics(out);
    const double m = out.mean_n();
    r.value("reflectance", std::norm(s.rho), "1");
    r.value("input_mean", t.mean_n(), "photons");
    r.value("reflected_mean", m, "photons");
    r.value("reflected_variance", st.variance, "photons^2");
    std::vector<double> pmf(static_cast<std::size_t>(pmf_max) + 1);
    for (int n = 0; n <= pmf_max; ++n) pmf[n] = out.pmf(n);
    r.value("reflected_pmf", pmf, "1");
    r.residual("variance_identity", rel_diff(st.variance, m + m * m));
    r.residual("mean_scaling", rel_diff(m, std::norm(s.rho) * t.mean_n()));
  };
}

// --- states -----------------------------------------------------------------

Runner prepare_states(const Params& p) {
  const PhotonState state = read_state(p.table("state"));
  const int pmf_max = p.integer("pmf_max", 10);
  if (pmf_max < 0 || pmf_max > 10000) throw ConfigError(p.field("pmf_max"), "must lie in [0, 10000]");
  std::optional<ModeSpec> mode;
  Vec3 at = Vec3::Zero();
  double t = 0.0;
  if (p.has("mode")) {
    const Params m = p.table("mode");
    const Json& pol = m.raw("polarization");
    if (!pol.is_array() || pol.size() != 3) throw ConfigError(m.field("polarization"), "expected 3 complex entries");
    CVec3 e;
    for (int i = 0; i < 3; ++i) e[i] = json_complex(pol[i], m.field("polarization") + "[" + std::to_string(i) + "]");
    mode = ModeSpec{read_wave(m), read_direction(m, "theta", "phi"), {e}, m.positive("volume")};
    at = m.vec3("r", Vec3::Zero());
    t = m.number("t", 0.0);
    m.finish();
  }
  p.finish();
  return [=](Results& r) {
    const PhotonStatistics st = photon_statistics(state);
    r.value("mean", st.mean, "photons");
    r.value("variance", st.variance, "photons^2");
    r.value("pmf", head(st.pmf, pmf_max), "1");
    r.value("truncation", static_cast<double>(st.pmf.size() - 1), "photons");
    r.residual("pmf_normalization", std::abs(std::accumulate(st.pmf.begin(), st.pmf.end(), 0.0) - 1.0));
    if (mode) {
      validate_mode(*mode);
      const FieldExpectations f = field_expectations(state, *mode, at, t);
      r.value("mean_E", f.mean_E, "V/m");
      r.value("mean_E_sq", f.mean_E_sq, "V^2/m^2");
      r.value("var_E", f.var_E, "V^2/m^2");
      r.value("mean_B", f.mean_B, "T");
      r.value("mean_B_sq", f.mean_B_sq, "T^2");
      r.value("var_B", f.var_B, "T^2");
    }
  };
}

// --- interferometers ----------------------------------------------------------

Runner prepare_mzi(const Params& p) {
  MachZehnderConfig cfg;
  cfg.s1 = read_splitter_or_default(p, "s1");
  cfg.s2 = read_splitter_or_default(p, "s2");
  cfg.phi1 = p.number("phi1", 0.0);
  cfg.phi2 = p.number("phi2", 0.0);
  cfg.strict = p.boolean("strict", true);
  std::optional<std::pair<double, double>> coherence;
  if (p.has("path_difference") || p.has("packet_duration")) {
    coherence = {p.non_negative("path_difference"), p.positive("packet_duration")};
  }
  p.finish();
  return [=](Results& r) {
    const MzExitAmplitudes a = mzi_exit_amplitudes(cfg);
    r.value("phase_difference", cfg.phi1 - cfg.phi2, "rad");
    r.value("exit1_amplitude", a.exit1, "1");
    r.value("exit2_amplitude", a.exit2, "1");
    r.value("exit1_probability", std::norm(a.exit1), "1");
    r.value("exit2_probability", std::norm(a.exit2), "1");
    Json paths = Json::array();
    for (const MzPath& path : mzi_paths(cfg)) {
      paths.push_back(Json{{"name", path.name}, {"exit", path.exit}, {"amplitude", complex_json(path.amplitude)}});
    }
    r.table("paths", paths);
    r.residual("probability_sum", std::abs(std::norm(a.exit1) + std::norm(a.exit2) - 1.0));
    if (coherence) {
      if (auto w = coherence_warning(coherence->first, coherence->second)) r.warn(*w);
    }
  };
}

Runner prepare_sagnac(const Params& p) {
  SagnacGeometry g;
  g.S = p.vec3("S");
  g.M1 = p.vec3("M1");
  g.M2 = p.vec3("M2");
  g.C = p.vec3("C", Vec3::Zero());
  g.Omega = p.vec3("Omega");
  g.wave = read_wave(p);
  const SplitterCoefficients s = read_splitter_or_default(p, "splitter");
  p.finish();
  return [=](Results& r) {
    const SagnacPhaseRoutes routes = sagnac_phase_routes(g);
    const double phase = sagnac_phase(g);
    r.value("phase", phase, "rad");
    r.value("leg_sum", routes.leg_sum, "rad");
    r.value("closed_form", routes.closed_form, "rad");
    r.value("area", routes.area, "m^2");
    r.value("detection_probability", sagnac_detection_probability(g, s), "1");
    r.residual("routes", rel_diff(routes.leg_sum, routes.closed_form));
  };
}

// --- scattering ---------------------------------------------------------------

DipoleKind read_kind(const Params& p) {
  return p.choice("kind", {"electric", "magnetic"}) == "electric" ? DipoleKind::kElectric : DipoleKind::kMagnetic;
}

Runner prepare_scatter(const Params& p) {
  const WaveParams wave = read_wave(p);
  const DipoleKind kind = read_kind(p);
  const CMat3 tensor = read_tensor(p);
  const Params c = p.table("channel");
  ScatterChannel ch;
  ch.dir_in = read_direction(c, "theta_in", "phi_in");
  ch.pol_in = read_helicity(c, "pol_in");
  ch.dir_out = read_direction(c, "theta_out", "phi_out");
  ch.pol_out = read_helicity(c, "pol_out");
  c.finish();
  const cdouble e_in = p.complex("e_in", 1.0);
  std::optional<double> e0;
  if (p.has("power_balance_amplitude")) e0 = p.positive("power_balance_amplitude");
  if (e0 && (kind != DipoleKind::kElectric || !p.has("isotropic"))) {
    throw ConfigError(p.field("power_balance_amplitude"), "power balance needs an isotropic electric dipole");
  }
  p.finish();
  return [=](Results& r) {
    auto amplitude = [&](const ScatterChannel& x) {
      return kind == DipoleKind::kElectric ? electric_scattering_amplitude({tensor}, x, e_in, wave)
                                           : magnetic_scattering_amplitude({tensor}, x, e_in, wave);
    };
    const cdouble a = amplitude(ch), b = amplitude(reversed(ch));
    r.value("amplitude", a, "V");
    r.value("reversed_amplitude", b, "V");
    r.flag("tensor_symmetric", is_symmetric(tensor));
    r.residual("reciprocity", rel_diff(a, b));
    if (e0) {
      const cdouble alpha = tensor(0, 0);
      const PowerBalance pb = dipole_power_balance(alpha, *e0, wave);
      const PolarizabilityBound bound = polarizability_bound(alpha, wave);
      r.value("P_out", pb.P_out, "W");
      r.value("P_in", pb.P_in_mag, "W");
      r.value("P_abs", pb.P_abs, "W");
      r.flag("physical", pb.physical);
      r.value("polarizability_bound", bound.bound, "F m^2");
      r.flag("within_bound", bound.satisfied);
      r.value("net_absorbed", pb.P_in_mag - pb.P_out, "W");
      r.residual("inflow_vs_work", rel_diff(pb.P_in_mag, pb.P_abs));
    }
  };
}

Runner prepare_optical_theorem(const Params& p) {
  const WaveParams wave = read_wave(p);
  const Params inc = p.table("incident");
  const IncidentCircular in{inc.complex("plus"), inc.complex("minus", 0.0)};
  inc.finish();
  ScattererAssembly assembly;
  bool single_isotropic_electric = false;
  for (const Params& s : p.table_list("scatterers")) {
    Scatterer sc;
    sc.position = s.vec3("position", Vec3::Zero());
    sc.kind = read_kind(s);
    single_isotropic_electric = sc.kind == DipoleKind::kElectric && s.has("isotropic");
    sc.tensor = read_tensor(s);
    s.finish();
    assembly.push_back(sc);
  }
  if (assembly.empty()) throw ConfigError(p.field("scatterers"), "at least one scatterer is required");
  single_isotropic_electric = single_isotropic_electric && assembly.size() == 1;
  p.finish();
  return [=](Results& r) {
    const OpticalTheorem ot = optical_theorem_cross_section(assembly, in, wave);
    r.value("cross_section", ot.cross_section, "m^2");
    r.value("incident_flux", ot.incident_flux, "W/m^2");
    r.value("extinguished_power", ot.cross_section * ot.incident_flux, "W");
    r.value("forward_field", std::vector<cdouble>(ot.forward_vector.data(), ot.forward_vector.data() + 3), "V");
    if (single_isotropic_electric) {
      // Unit circular components carry |E|^2 = 2 each.
      const double e0 = std::sqrt(2.0 * (std::norm(in.plus) + std::norm(in.minus)));
      const PowerBalance pb = dipole_power_balance(assembly[0].tensor(0, 0), e0, wave);
      r.value("P_abs", pb.P_abs, "W");
      r.residual("extinction_vs_work", rel_diff(ot.cross_section * ot.incident_flux, pb.P_abs));
    }
  };
}

// --- layered media ------------------------------------------------------------

Runner prepare_layers(const Params& p) {
  const WaveParams wave = read_wave(p);
  std::vector<Layer> stack;
  bool lossless = true;
  for (const Params& l : p.table_list("layers")) {
    Layer layer{l.complex("n"), l.non_negative("d")};
    if (layer.n.imag() < 0.0) throw ConfigError(l.field("n"), "Im(n) must be >= 0 (no gain)");
    lossless = lossless && layer.n.imag() == 0.0;
    l.finish();
    stack.push_back(layer);
  }
  if (stack.empty()) throw ConfigError(p.field("layers"), "at least one layer is required");
  const bool back = p.choice("orientation", {"front", "back"}, "front") == "back";
  p.finish();
  return [=](Results& r) {
    const MultilayerCoefficients m = multilayer_coefficients(stack, wave);
    const cdouble rho = back ? m.rho_back : m.rho_front;
    const cdouble tau = back ? m.tau_back : m.tau_front;
    r.text("orientation", back ? "back" : "front");
    r.value("rho", rho, "1");
    r.value("tau", tau, "1");
    r.value("reflectance", std::norm(rho), "1");
    r.value("transmittance", std::norm(tau), "1");
    r.value("absorptance", 1.0 - std::norm(rho) - std::norm(tau), "1");
    r.residual("front_back_transmission", std::abs(m.tau_front - m.tau_back));
    if (lossless) r.residual("energy", std::abs(std::norm(rho) + std::norm(tau) - 1.0));
  };
}

Runner prepare_sheet(const Params& p) {
  const WaveParams wave = read_wave(p);
  const double d = p.positive("d");
  if (p.has("zeta") == p.has("phi_zeta")) throw ConfigError(p.field("zeta"), "give exactly one of zeta, phi_zeta");
  SheetPolarizability sp;
  if (p.has("zeta")) {
    sp = {p.complex("zeta"), d};
  } else {
    const double phi = p.number("phi_zeta");
    if (!(phi >= 0.0 && phi <= kPi)) throw ConfigError(p.field("phi_zeta"), "must lie in [0, pi]");
    sp = SheetPolarizability::lossless(phi, d, wave);
  }
  p.finish();
  return [=](Results& r) {
    const SheetResponse s = thin_sheet_response(sp, wave);
    r.value("zeta", sp.zeta, "1");
    r.value("r", s.r_coeff, "1");
    r.value("t", s.t_coeff, "1");
    r.value("reflectance", s.reflectance, "1");
    r.value("transmittance", s.transmittance, "1");
    r.value("chi_e", s.chi_e, "1");
    r.flag("lossless", s.lossless);
    if (s.lossless) {
      const RoundTrip rt = sheet_time_reversal_roundtrip(sp, wave);
      r.value("roundtrip_left", rt.left_amp, "1");
      r.value("roundtrip_right", rt.right_amp, "1");
      r.residual("energy", std::abs(s.reflectance + s.transmittance - 1.0));
      r.residual("roundtrip", std::abs(rt.left_amp - 1.0) + std::abs(rt.right_amp));
    }
  };
}

Runner prepare_extinction(const Params& p) {
  const WaveParams wave = read_wave(p);
  const cdouble n = p.complex("n");
  if (n.imag() < 0.0) throw ConfigError(p.field("n"), "Im(n) must be >= 0 (no gain)");
  std::optional<double> z0;
  if (p.has("z0")) z0 = p.positive("z0");
  p.finish();
  return [=](Results& r) {
    const cdouble refl = extinction_reflection(n, wave);
    const cdouble fresnel = (1.0 - n) / (1.0 + n);
    r.value("reflection", refl, "1");
    r.value("fresnel_reflection", fresnel, "1");
    r.residual("reflection", std::abs(refl - fresnel));
    if (z0) {
      const ExtinctionInterior e = extinction_interior(n, *z0, wave);
      const cdouble expect = 2.0 / (n + 1.0) * std::exp(kI * (n * wave.k0() * *z0));
      r.value("forward_segment", e.forward_segment, "1");
      r.value("backward_segment", e.backward_segment, "1");
      r.value("transmitted_term", e.transmitted_term, "1");
      r.value("cancellation_term", e.cancellation_term, "1");
      r.residual("transmitted", std::abs(e.transmitted_term - expect));
      r.residual("cancellation", std::abs(e.cancellation_term + std::exp(kI * (wave.k0() * *z0))));
    }
  };
}

// --- diffraction --------------------------------------------------------------

Eigen::MatrixXcd read_samples(const Params& a, const std::string& key, int nx, int ny) {
  const Json& v = a.raw(key);
  const std::string f = a.field(key);
  if (!v.is_array() || v.size() != static_cast<std::size_t>(nx) * ny) {
    throw ConfigError(f, "expected nx*ny = " + std::to_string(nx * ny) + " complex samples");
  }
  Eigen::MatrixXcd m(nx, ny);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      const std::size_t k = static_cast<std::size_t>(i) * ny + j;
      m(i, j) = json_complex(v[k], f + "[" + std::to_string(k) + "]");
    }
  return m;
}

FieldGrid read_aperture(const Params& a) {
  const std::string shape = a.choice("shape", {"gaussian", "uniform", "samples"});
  const int nx = a.integer("nx"), ny = a.integer("ny");
  if (nx < 1 || ny < 1 || static_cast<long long>(nx) * ny > 4'000'000) {
    throw ConfigError(a.field("nx"), "grid must have between 1 and 4e6 samples");
  }
  const double dx = a.positive("dx");
  const double dy = a.has("dy") ? a.positive("dy") : dx;
  FieldGrid g;
  if (shape == "samples") {
    g.dx = dx;
    g.dy = dy;
    g.a = read_samples(a, "values", nx, ny);
    if (a.has("values_y")) g.ay = read_samples(a, "values_y", nx, ny);
  } else {
    const double w = shape == "gaussian" ? a.positive("waist") : 0.0;
    g = FieldGrid::sample(nx, ny, dx, dy, [w](double x, double y) {
      return w > 0.0 ? cdouble(std::exp(-(x * x + y * y) / (w * w))) : cdouble(1.0);
    });
    if (a.has("polarization")) {
      const Json& pol = a.raw("polarization");
      if (!pol.is_array() || pol.size() != 2) throw ConfigError(a.field("polarization"), "expected [Ex, Ey]");
      const cdouble ex = json_complex(pol[0], a.field("polarization") + "[0]");
      const cdouble ey = json_complex(pol[1], a.field("polarization") + "[1]");
      g.ay = g.a * ey;
      g.a *= ex;
    }
  }
  a.finish();
  return g;
}

Runner prepare_diffract(const Params& p) {
  const WaveParams wave = read_wave(p);
  const FieldGrid g = read_aperture(p.table("aperture"));
  const std::string method = p.choice("method", {"far_field", "far_field_vector", "angular_spectrum"});
  const double z = p.positive("z");
  const Json& pts = p.raw("points");
  if (!pts.is_array() || pts.empty()) throw ConfigError(p.field("points"), "expected a non-empty list of [x, y]");
  std::vector<std::pair<double, double>> points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string f = p.field("points") + "[" + std::to_string(i) + "]";
    if (!pts[i].is_array() || pts[i].size() != 2) throw ConfigError(f, "expected [x, y]");
    points.emplace_back(json_number(pts[i][0], f + "[0]"), json_number(pts[i][1], f + "[1]"));
  }
  AngularSpectrumOptions opt;
  const std::string scheme = p.choice("scheme", {"auto", "cartesian", "polar"}, "auto");
  opt.scheme = scheme == "auto" ? QuadratureScheme::kAuto
               : scheme == "cartesian" ? QuadratureScheme::kCartesian
                                       : QuadratureScheme::kPolar;
  if (method == "far_field_vector" && !g.is_vector()) {
    throw ConfigError(p.field("aperture"), "far_field_vector needs a vector aperture (polarization or values_y)");
  }
  p.finish();
  return [=](Results& r) {
    validate_grid(g);
    std::vector<std::string> warnings;
    auto note = [&](const std::vector<std::string>& ws) {
      for (const auto& w : ws)
        if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(w);
    };
    if (method == "far_field") {
      std::vector<cdouble> amp;
      for (const auto& [x, y] : points) {
        const FarFieldScalar f = far_field_scalar(g, {x, y, z}, wave);
        amp.push_back(f.amplitude);
        note(f.warnings);
      }
      r.value("amplitude", amp, "field units");
    } else if (method == "far_field_vector") {
      std::vector<cdouble> plus, minus;
      for (const auto& [x, y] : points) {
        const FarFieldVector f = far_field_vector(g, {x, y, z}, wave);
        plus.push_back(f.plus);
        minus.push_back(f.minus);
        note(f.warnings);
      }
      r.value("plus", plus, "field units");
      r.value("minus", minus, "field units");
    } else {
      std::vector<cdouble> amp;
      for (const auto& [x, y] : points) amp.push_back(angular_spectrum_propagate(g, x, y, z, wave, opt));
      r.value("amplitude", amp, "field units");
    }
    for (const auto& w : warnings) r.warn(w);
  };
}

}  // namespace

const std::vector<Command>& commands() {
  static const std::vector<Command> all{
      {"splitter", prepare_splitter},
      {"fock", prepare_fock},
      {"hom", prepare_hom},
      {"coherent", prepare_coherent},
      {"thermal", prepare_thermal},
      {"mzi", prepare_mzi},
      {"sagnac", prepare_sagnac},
      {"scatter", prepare_scatter},
      {"optical-theorem", prepare_optical_theorem},
      {"layers", prepare_layers},
      {"sheet", prepare_sheet},
      {"extinction", prepare_extinction},
      {"diffract", prepare_diffract},
      {"states", prepare_states},
  };
  return all;
}

const Command* find_command(const std::string& name) {
  for (const Command& c : commands())
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace photonpath::cli
