#pragma once

#include <map>
#include <string>
#include <vector>

namespace ringsim {

/// Fixed physical constants (SI). Not configurable.
struct PhysicalConstants {
  static constexpr double q = 1.602176634e-19;   // electron charge, C
  static constexpr double k_B = 1.380649e-23;    // Boltzmann constant, J/K
};

enum class PlatformId { Soi, SiN };

const char* platform_name(PlatformId id);
PlatformId platform_from_name(const std::string& name);

/// Loss/noise/electrical constants for one waveguide material platform.
/// Instances are treated as immutable once loaded; share by const reference.
struct PlatformParams {
  PlatformId platform_id = PlatformId::SiN;

  double p_laser_dbm = 10.0;        // per-wavelength laser power
  double p_smf_db = 0.0;            // single-mode fiber attenuation
  double p_coupling_db = 1.6;       // fiber-to-chip coupling loss
  double wg_loss_db_per_cm = 0.5;   // waveguide propagation loss
  double p_inc_db_per_cm_per_lambda = 0.01;  // extra loss per lambda above 20
  double splitter_il_db = 0.01;     // per-stage splitter loss
  double mrm_il_db = 0.235;         // modulator through-port insertion loss
  double mrr_il_db = 0.01;          // filter ring insertion loss
  double mrm_obl_db = 0.01;         // modulator out-of-band loss
  double mrr_obl_db = 0.01;         // filter ring out-of-band loss
  double penalty_db = 1.8;          // network penalty
  double responsivity = 1.2;        // photodiode responsivity, A/W
  double dark_current_a = 35e-9;    // photodiode dark current
  double load_resistance_ohm = 50.0;
  double temperature_k = 300.0;
  double rin_db_per_hz = -140.0;    // laser relative intensity noise

  // Appears in the waveguide-length terms of the output-power budget. No
  // published value exists; the shipped default config carries the value
  // calibrated against the reference TPC-size table (see linkbudget).
  double d_mrr_cm = 2e-3;  // documented fallback default: 20 um

  /// Platform defaults (SOI: 1.5 dB/cm, 0.1 dB/cm/lambda, 4.0 dB MRM IL;
  /// SiN: 0.5, 0.01, 0.235).
  static PlatformParams defaults(PlatformId id);

  /// Names of all override-addressable fields.
  static std::vector<std::string> field_names();

  /// Set a field by name. Unknown key or invalid value is a ConfigError.
  void set_field(const std::string& key, double value);
  double get_field(const std::string& key) const;

  /// Check invariants (losses >= 0, responsivity > 0, ...). Throws ConfigError.
  void validate() const;
};

/// Defaults with overrides applied. Unknown override keys are a hard error.
PlatformParams load_platform(PlatformId id,
                             const std::map<std::string, double>& overrides = {});

/// Load both platforms from a JSON config file of the shape
///   {"soi": {field: value, ...}, "sin": {...}}
/// Unknown keys are a hard error (no silent ignore).
std::map<PlatformId, PlatformParams> load_platforms_file(const std::string& path);

/// One peripheral row: power, latency and area.
struct PeripheralRecord {
  double power_mw = 0.0;
  double latency_s = 0.0;
  double area_mm2 = 0.0;
};

/// Accelerator peripheral constants. Defaults reproduce the published
/// per-component table used by the system-level simulator.
struct PeripheralParams {
  PeripheralRecord reduction{0.050, 3.125e-9, 3.0e-5};
  PeripheralRecord activation{0.52, 0.78e-9, 6.0e-5};
  PeripheralRecord io_interface{140.18, 0.78e-9, 2.44e-2};
  PeripheralRecord pooling{0.4, 3.125e-9, 2.4e-4};
  PeripheralRecord edram{41.1, 1.56e-9, 1.66e-1};

  // Bus and router latencies are quoted in cycles of the operating data rate.
  double bus_power_mw = 7.0;
  double bus_latency_cycles = 5.0;
  double bus_area_mm2 = 9.0e-3;
  double router_power_mw = 42.0;
  double router_latency_cycles = 2.0;
  double router_area_mm2 = 1.5e-2;

  PeripheralRecord dac{12.5, 0.78e-9, 2.5e-3};

  // ADC power depends on the sampling rate; only the listed rates exist.
  // Requesting any other rate is an error.
  std::map<double, PeripheralRecord> adc_by_rate{
      {1e9, {2.55, 0.78e-9, 2.0e-3}},
      {5e9, {11.0, 0.78e-9, 21.0e-3}},
      {10e9, {30.0, 0.78e-9, 103.0e-3}},
  };

  double mrm_eo_energy_pj_per_bit = 1.4;
  double mrm_area_mm2 = 0.95e-4;

  static PeripheralParams defaults() { return {}; }

  /// ADC record for a data rate; ConfigError for unlisted rates.
  const PeripheralRecord& adc(double rate_sps) const;

  /// eDRAM energy per access (power x latency), joules.
  double edram_energy_per_access_j() const {
    return edram.power_mw * 1e-3 * edram.latency_s;
  }
};

/// Default data directory (bundled models, platform configs). Compile-time
/// default, overridable with the RINGSIM_DATA_DIR environment variable.
std::string default_data_dir();

}  // namespace ringsim
