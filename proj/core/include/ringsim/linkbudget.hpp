#pragma once

#include <map>
#include <vector>

#include "ringsim/params.hpp"

namespace ringsim {

/// Target bit precision and data rate for a sensitivity query.
struct PrecisionQuery {
  int bits = 4;          // 1..8
  double dr_sps = 1e9;   // data rate, samples/second

  void validate() const;
};

/// Outcome of the two-step optimal-TPC-size search.
struct ScalabilityResult {
  int n_opt = 0;                  // optimal N (= M)
  double pd_sensitivity_dbm = 0;  // required power at the photodiode
  double p_output_dbm = 0;        // power actually reaching the PD at n_opt
  double ef_db = 0;               // residual error-function value (>= 0)
  PlatformId platform_id = PlatformId::SiN;
  PrecisionQuery query;
};

/// Achievable bit precision at a given optical power and data rate:
///   B = [20 log10( R P / ((sqrt(2q(RP+I_d) + 4kT/R_L + (RP)^2 RIN)
///        + sqrt(2q I_d + 4kT/R_L)) sqrt(DR/sqrt(2)))) - 1.76] / 6.02
/// with P in watts and RIN linearized. May be negative at very low power.
double bits_from_power(double p_pd_dbm, double dr_sps, const PlatformParams& params);

/// Photodiode sensitivity: the power where bits_from_power equals the target,
/// found by bisection on [-60, +10] dBm to 0.001 dB. The relation is strictly
/// increasing in power, so the root is unique. No bracket -> InfeasibleError.
double pd_sensitivity(const PrecisionQuery& query, const PlatformParams& params);

/// Optical power surviving the photonic path of an N-multiplier DPE, in dBm.
/// All loss arithmetic stays in dB. The per-wavelength excess loss term
/// applies only above 20 wavelengths per waveguide.
double p_output(int n, const PlatformParams& params);

/// Error function: p_output(n) - pd_sensitivity(query). Strictly decreasing
/// in n.
double error_function(int n, const PrecisionQuery& query, const PlatformParams& params);

/// Exhaustive search (N = M) for the largest n in [1, n_max] whose error
/// function is still nonnegative, i.e. the minimum positive residual.
/// ef(1) < 0 -> InfeasibleError.
ScalabilityResult optimal_n(const PrecisionQuery& query, const PlatformParams& params,
                            int n_max = 512);

/// One calibration anchor: a platform/precision/rate cell and the TPC size it
/// should reproduce.
struct CalibrationTarget {
  PlatformId platform;
  int bits;
  double dr_sps;
  int expected_n;
};

struct CalibrationCell {
  CalibrationTarget target;
  int n_opt;      // achieved at the calibrated diameter
  int residual;   // |n_opt - expected|
};

struct CalibrationResult {
  double d_mrr_cm = 0.0;
  int total_residual = 0;
  std::vector<CalibrationCell> cells;
};

/// Grid search (1 um steps) over the ring diameter to minimize the total
/// |n_opt - expected_n| across the platform's targets. Ties break toward the
/// smaller diameter. Targets may mix platforms; one result per platform.
std::map<PlatformId, CalibrationResult> calibrate_d_mrr(
    const std::vector<CalibrationTarget>& targets,
    const std::map<PlatformId, PlatformParams>& base_params,
    double range_lo_cm, double range_hi_cm, int n_max = 512);

/// The published TPC-size anchors used to calibrate the shipped config:
/// the 4-bit N cells at 1/5/10 GS/s plus the 3-bit cells at 1 GS/s.
std::vector<CalibrationTarget> reference_n_targets();

}  // namespace ringsim
