#pragma once

#include <vector>

namespace ringsim {

/// One characterized operating point of the ITO accumulation layer:
/// carrier concentration, complex ITO and effective indices, drive voltage
/// and the induced (blue) resonance shift.
struct ItoStatePoint {
  double carrier_conc_cm3;
  double re_n_ito;
  double im_n_ito;
  double re_n_eff;
  double im_n_eff;
  double voltage_v;
  double res_shift_pm;
};

/// Lorentzian all-pass microring modulator model.
///
/// The through-port notch is
///   T(lambda) = 1 - (1 - t_min) / (1 + ((lambda - lambda_r')/HWHM)^2)
/// with lambda_r' = resonance_nm - shift_pm * 1e-3, HWHM = resonance_nm/(2 Q)
/// and t_min = 10^(-er_db/10).
struct MrmModel {
  double resonance_nm = 1600.0;   // rest resonance (L-band operation)
  double q_loaded = 2000.0;       // loaded quality factor
  double fsr_nm = 18.0;           // free spectral range
  double il_db = 0.235;           // through-port insertion loss (link budget)
  double er_db = 8.2;             // extinction-ratio notch depth
  double tuning_pm_per_v = 450.0; // small-signal tuning efficiency
  std::vector<ItoStatePoint> shift_curve;

  /// Model with the measured six-point voltage->shift characterization.
  static MrmModel default_model();

  double hwhm_nm() const { return resonance_nm / (2.0 * q_loaded); }
  double t_min() const;
  double max_shift_pm() const;
  double max_voltage_v() const;

  /// Checks curve monotonicity and the agreement between the endpoint-derived
  /// tuning efficiency and tuning_pm_per_v (within 10%). Throws ConfigError.
  void validate() const;
};

/// Piecewise-linear interpolation of the voltage->shift curve. Exact at the
/// characterization nodes, monotone, no extrapolation: v outside
/// [0, max voltage] is an error.
double resonance_shift_at(const MrmModel& model, double voltage_v);

/// Through-port power transmission at a probe wavelength with an applied
/// resonance shift. The probe must lie within one FSR of the rest resonance;
/// the adjacent resonance is not modeled.
double through_transmission(const MrmModel& model, double lambda_nm,
                            double shift_pm);

/// Blue-side inverse of through_transmission at the rest-resonance probe:
/// the shift that realizes transmission `t` at lambda = resonance_nm.
/// t below the notch floor or above the max-shift transmission is infeasible.
double shift_for_transmission(const MrmModel& model, double t);

/// One synthesized weighting level.
struct WeightLevel {
  double transmission;  // through-port power transmission in [t_min, t_max]
  double shift_pm;      // blue shift realizing it at the rest-resonance probe
};

/// The 2^bits discrete weighting levels, equally spaced in linear power
/// transmission between the notch floor (level 0) and the transmission at the
/// maximum characterized shift (level 2^bits - 1). Strictly increasing.
std::vector<WeightLevel> weight_levels(const MrmModel& model, int bits);

}  // namespace ringsim
