#include "ringsim/device.hpp"

#include <cmath>
#include <string>

#include "ringsim/errors.hpp"

namespace ringsim {

MrmModel MrmModel::default_model() {
  MrmModel m;
  m.shift_curve = {
      {1e19, 1.9556, 0.0100, 1.9735, 0.0001, 0.0, 0.0},
      {5e19, 1.9111, 0.0403, 1.9724, 0.0003, 1.8, 830.0},
      {9e19, 1.8667, 0.0896, 1.9712, 0.0006, 3.7, 1580.0},
      {13e19, 1.8222, 0.1289, 1.9701, 0.0011, 5.5, 2470.0},
      {17e19, 1.7778, 0.1582, 1.9692, 0.0017, 7.3, 3210.0},
      {20e19, 1.7333, 0.1874, 1.9680, 0.0022, 9.2, 4000.0},
  };
  return m;
}

double MrmModel::t_min() const { return std::pow(10.0, -er_db / 10.0); }

double MrmModel::max_shift_pm() const {
  return shift_curve.empty() ? 0.0 : shift_curve.back().res_shift_pm;
}

double MrmModel::max_voltage_v() const {
  return shift_curve.empty() ? 0.0 : shift_curve.back().voltage_v;
}

void MrmModel::validate() const {
  if (q_loaded <= 0.0 || fsr_nm <= 0.0 || er_db <= 0.0 || resonance_nm <= 0.0) {
    throw ConfigError("MrmModel: q_loaded, fsr_nm, er_db, resonance_nm must be > 0");
  }
  if (shift_curve.size() < 2) {
    throw ConfigError("MrmModel: shift_curve needs at least two points");
  }
  for (std::size_t i = 1; i < shift_curve.size(); ++i) {
    if (shift_curve[i].voltage_v <= shift_curve[i - 1].voltage_v ||
        shift_curve[i].res_shift_pm <= shift_curve[i - 1].res_shift_pm) {
      throw ConfigError("MrmModel: shift_curve must be strictly increasing in "
                        "voltage and shift");
    }
  }
  double endpoint_eff = max_shift_pm() / max_voltage_v();
  if (std::abs(endpoint_eff - tuning_pm_per_v) > 0.10 * tuning_pm_per_v) {
    throw ConfigError("MrmModel: endpoint tuning efficiency " +
                      std::to_string(endpoint_eff) +
                      " pm/V disagrees with tuning_pm_per_v by more than 10%");
  }
}

double resonance_shift_at(const MrmModel& model, double voltage_v) {
  const auto& curve = model.shift_curve;
  if (curve.size() < 2) throw ConfigError("resonance_shift_at: empty shift curve");
  if (voltage_v < curve.front().voltage_v || voltage_v > curve.back().voltage_v) {
    throw ConfigError("resonance_shift_at: voltage " + std::to_string(voltage_v) +
                      " V outside [" + std::to_string(curve.front().voltage_v) +
                      ", " + std::to_string(curve.back().voltage_v) + "] V");
  }
  for (std::size_t i = 1; i < curve.size(); ++i) {
    if (voltage_v <= curve[i].voltage_v) {
      const auto& a = curve[i - 1];
      const auto& b = curve[i];
      double t = (voltage_v - a.voltage_v) / (b.voltage_v - a.voltage_v);
      return a.res_shift_pm + t * (b.res_shift_pm - a.res_shift_pm);
    }
  }
  return curve.back().res_shift_pm;
}

double through_transmission(const MrmModel& model, double lambda_nm,
                            double shift_pm) {
  if (std::abs(lambda_nm - model.resonance_nm) > model.fsr_nm) {
    throw ConfigError("through_transmission: probe " + std::to_string(lambda_nm) +
                      " nm outside one FSR of the resonance");
  }
  double lambda_r = model.resonance_nm - shift_pm * 1e-3;  // blue shift
  double x = (lambda_nm - lambda_r) / model.hwhm_nm();
  double t_min = model.t_min();
  return 1.0 - (1.0 - t_min) / (1.0 + x * x);
}

double shift_for_transmission(const MrmModel& model, double t) {
  double t_min = model.t_min();
  double t_max = through_transmission(model, model.resonance_nm, model.max_shift_pm());
  if (t < t_min - 1e-12 || t > t_max + 1e-12) {
    throw InfeasibleError("shift_for_transmission: transmission " +
                          std::to_string(t) + " outside [" + std::to_string(t_min) +
                          ", " + std::to_string(t_max) +
                          "] reachable within the characterized shift range");
  }
  if (t <= t_min) return 0.0;
  // invert T = 1 - (1-t_min)/(1+x^2) with x = shift_nm / HWHM
  double x = std::sqrt((1.0 - t_min) / (1.0 - t) - 1.0);
  double shift_pm = x * model.hwhm_nm() * 1e3;
  return std::min(shift_pm, model.max_shift_pm());
}

std::vector<WeightLevel> weight_levels(const MrmModel& model, int bits) {
  if (bits < 1 || bits > 8) {
    throw ConfigError("weight_levels: bits must be in [1, 8]");
  }
  double t_min = model.t_min();
  double t_max = through_transmission(model, model.resonance_nm, model.max_shift_pm());
  int n_levels = 1 << bits;
  double step = (t_max - t_min) / static_cast<double>(n_levels - 1);

  std::vector<WeightLevel> levels;
  levels.reserve(n_levels);
  for (int i = 0; i < n_levels; ++i) {
    double t = (i == n_levels - 1) ? t_max : t_min + step * i;
    double shift;
    try {
      shift = shift_for_transmission(model, t);
    } catch (const InfeasibleError&) {
      throw InfeasibleError(
          "weight_levels: level " + std::to_string(i) + " of " +
          std::to_string(n_levels) + " needs a shift beyond the " +
          std::to_string(model.max_shift_pm()) + " pm range; max feasible "
          "bits = " + std::to_string(bits - 1));
    }
    levels.push_back({t, shift});
  }
  return levels;
}

}  // namespace ringsim
