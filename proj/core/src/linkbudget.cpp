#include "ringsim/linkbudget.hpp"

#include <cmath>
#include <string>

#include "ringsim/errors.hpp"
#include "ringsim/units.hpp"

namespace ringsim {

void PrecisionQuery::validate() const {
  if (bits < 1 || bits > 8) throw ConfigError("PrecisionQuery: bits must be in [1, 8]");
  if (!(dr_sps > 0.0)) throw ConfigError("PrecisionQuery: dr_sps must be > 0");
}

double bits_from_power(double p_pd_dbm, double dr_sps, const PlatformParams& params) {
  if (!std::isfinite(p_pd_dbm)) throw ConfigError("bits_from_power: non-finite power");
  if (!(dr_sps > 0.0)) throw ConfigError("bits_from_power: dr_sps must be > 0");

  const double p_w = dbm_to_w(p_pd_dbm);
  const double rp = params.responsivity * p_w;
  const double rin_lin = db_to_linear(params.rin_db_per_hz);  // 1/Hz
  const double q = PhysicalConstants::q;
  const double thermal = 4.0 * PhysicalConstants::k_B * params.temperature_k /
                         params.load_resistance_ohm;

  // noise amplitude densities of the illuminated and dark photodiodes, A/sqrt(Hz)
  const double n_on = std::sqrt(2.0 * q * (rp + params.dark_current_a) + thermal +
                                rp * rp * rin_lin);
  const double n_off = std::sqrt(2.0 * q * params.dark_current_a + thermal);
  const double bw_factor = std::sqrt(dr_sps / std::sqrt(2.0));

  const double snr = rp / ((n_on + n_off) * bw_factor);
  return (20.0 * std::log10(snr) - 1.76) / 6.02;
}

double pd_sensitivity(const PrecisionQuery& query, const PlatformParams& params) {
  query.validate();
  double lo = -60.0;
  double hi = 10.0;
  const double target = static_cast<double>(query.bits);

  double f_lo = bits_from_power(lo, query.dr_sps, params) - target;
  double f_hi = bits_from_power(hi, query.dr_sps, params) - target;
  if (f_lo * f_hi > 0.0) {
    throw InfeasibleError("pd_sensitivity: " + std::to_string(query.bits) +
                          " bits at " + std::to_string(query.dr_sps) +
                          " S/s unreachable for any power in [-60, 10] dBm");
  }
  while (hi - lo > 1e-3) {
    double mid = 0.5 * (lo + hi);
    double f_mid = bits_from_power(mid, query.dr_sps, params) - target;
    if (f_mid * f_lo <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
  }
  return 0.5 * (lo + hi);
}

double p_output(int n, const PlatformParams& params) {
  if (n < 1) throw ConfigError("p_output: n must be >= 1");
  const double nd = static_cast<double>(n);
  double out = params.p_laser_dbm - params.p_smf_db - params.p_coupling_db;
  out -= params.wg_loss_db_per_cm * params.d_mrr_cm * nd;
  if (n > 20) {
    out -= params.p_inc_db_per_cm_per_lambda * params.d_mrr_cm * (nd - 20.0);
  }
  out -= params.splitter_il_db * std::log2(nd);
  out -= params.mrm_il_db;
  out -= params.mrr_il_db;
  out -= (nd - 1.0) * params.mrm_obl_db;
  out -= (nd - 1.0) * params.mrr_obl_db;
  out -= params.penalty_db;
  return out;
}

double error_function(int n, const PrecisionQuery& query, const PlatformParams& params) {
  return p_output(n, params) - pd_sensitivity(query, params);
}

namespace {

// Search with the sensitivity already solved; shared by optimal_n and the
// calibration grid scan.
int optimal_n_given_sensitivity(double sens_dbm, const PlatformParams& params,
                                int n_max) {
  int best = 0;
  for (int n = 1; n <= n_max; ++n) {
    if (p_output(n, params) - sens_dbm >= 0.0) {
      best = n;
    } else {
      break;  // p_output is strictly decreasing in n
    }
  }
  return best;
}

}  // namespace

ScalabilityResult optimal_n(const PrecisionQuery& query, const PlatformParams& params,
                            int n_max) {
  if (n_max < 1) throw ConfigError("optimal_n: n_max must be >= 1");
  const double sens = pd_sensitivity(query, params);
  const int n = optimal_n_given_sensitivity(sens, params, n_max);
  if (n == 0) {
    throw InfeasibleError("optimal_n: even a single multiplier cannot meet " +
                          std::to_string(query.bits) + " bits at " +
                          std::to_string(query.dr_sps) + " S/s on platform " +
                          platform_name(params.platform_id));
  }
  ScalabilityResult r;
  r.n_opt = n;
  r.pd_sensitivity_dbm = sens;
  r.p_output_dbm = p_output(n, params);
  r.ef_db = r.p_output_dbm - sens;
  r.platform_id = params.platform_id;
  r.query = query;
  return r;
}

std::map<PlatformId, CalibrationResult> calibrate_d_mrr(
    const std::vector<CalibrationTarget>& targets,
    const std::map<PlatformId, PlatformParams>& base_params,
    double range_lo_cm, double range_hi_cm, int n_max) {
  if (targets.empty()) throw ConfigError("calibrate_d_mrr: empty target set");
  if (!(range_lo_cm > 0.0) || range_hi_cm < range_lo_cm) {
    throw ConfigError("calibrate_d_mrr: invalid search range");
  }

  std::map<PlatformId, std::vector<CalibrationTarget>> by_platform;
  for (const auto& t : targets) by_platform[t.platform].push_back(t);

  std::map<PlatformId, CalibrationResult> results;
  for (const auto& [platform, plat_targets] : by_platform) {
    auto base_it = base_params.find(platform);
    if (base_it == base_params.end()) {
      throw ConfigError(std::string("calibrate_d_mrr: no base parameters for ") +
                        platform_name(platform));
    }
    PlatformParams params = base_it->second;

    // sensitivity is independent of d_mrr; solve once per (bits, rate)
    std::map<std::pair<int, double>, double> sens;
    for (const auto& t : plat_targets) {
      auto key = std::make_pair(t.bits, t.dr_sps);
      if (!sens.count(key)) {
        sens[key] = pd_sensitivity({t.bits, t.dr_sps}, params);
      }
    }

    const long um_lo = std::lround(std::ceil(range_lo_cm * 1e4));
    const long um_hi = std::lround(std::floor(range_hi_cm * 1e4));
    long best_um = -1;
    long best_residual = -1;
    for (long um = um_lo; um <= um_hi; ++um) {
      params.d_mrr_cm = static_cast<double>(um) * 1e-4;
      long residual = 0;
      for (const auto& t : plat_targets) {
        int n = optimal_n_given_sensitivity(sens.at({t.bits, t.dr_sps}), params, n_max);
        residual += std::labs(static_cast<long>(n) - t.expected_n);
      }
      if (best_um < 0 || residual < best_residual) {  // tie keeps smaller d
        best_um = um;
        best_residual = residual;
      }
    }

    CalibrationResult res;
    res.d_mrr_cm = static_cast<double>(best_um) * 1e-4;
    res.total_residual = static_cast<int>(best_residual);
    params.d_mrr_cm = res.d_mrr_cm;
    for (const auto& t : plat_targets) {
      int n = optimal_n_given_sensitivity(sens.at({t.bits, t.dr_sps}), params, n_max);
      res.cells.push_back({t, n, std::abs(n - t.expected_n)});
    }
    results[platform] = res;
  }
  return results;
}

std::vector<CalibrationTarget> reference_n_targets() {
  return {
      {PlatformId::Soi, 4, 1e9, 22},  {PlatformId::Soi, 4, 5e9, 15},
      {PlatformId::Soi, 4, 10e9, 13}, {PlatformId::Soi, 3, 1e9, 35},
      {PlatformId::SiN, 4, 1e9, 47},  {PlatformId::SiN, 4, 5e9, 28},
      {PlatformId::SiN, 4, 10e9, 22}, {PlatformId::SiN, 3, 1e9, 52},
  };
}

}  // namespace ringsim
