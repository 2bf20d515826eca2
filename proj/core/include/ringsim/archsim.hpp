#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ringsim/params.hpp"
#include "ringsim/workload.hpp"

namespace ringsim {

/// One tensor processing core: N multipliers per dot-product element and
/// M (= N) elements per core, at a native precision and data rate.
struct TpcConfig {
  int n = 47;
  int m = 47;
  int bits = 4;          // native analog precision; two cores pair up for 8-bit
  double dr_sps = 1e9;
  PlatformId platform_id = PlatformId::SiN;

  void validate() const;
};

/// Full accelerator: a fleet of paired TPCs grouped four per tile.
struct AcceleratorConfig {
  TpcConfig tpc;
  int tpc_count = 50;
  PeripheralParams peripherals = PeripheralParams::defaults();
  double laser_mw_per_lambda = 10.0;

  // Fraction of the buffer-access latency hidden behind compute, in [0, 1].
  // The conservative default serializes buffer traffic completely.
  double buffer_overlap = 0.0;

  // Always-on power charged per tile for the frame duration: the tile's
  // unified-buffer standby. Set to 0 to disable.
  double tile_standby_mw = 41.1;

  int tiles() const { return (tpc_count + 3) / 4; }        // 4 DPUs per tile
  int paired_tpcs() const { return tpc_count / 2; }        // 8-bit pairing

  void validate() const;

  /// Published reference configuration (TPC size and count) for a platform
  /// and data rate; pass-through defaults for the comparison study.
  static AcceleratorConfig reference(PlatformId platform, double dr_sps);
};

/// Cycle/access accounting for one GEMM under output-stationary dataflow.
struct GemmSchedule {
  std::int64_t outputs = 0;            // logical output elements
  std::int64_t chunks_per_output = 0;  // ceil(inner / N) accumulation cycles
  std::int64_t waves = 0;              // output batches over paired TPCs
  std::int64_t cycles = 0;             // waves * chunks_per_output
  std::int64_t dpe_cycles = 0;         // physical DPE-cycles (both pair halves)
  std::int64_t buffer_reads = 0;       // input + weight chunk deliveries
  std::int64_t buffer_writes = 0;      // final output samples
  std::int64_t busy_pair_cycles = 0;   // pair-cycles with work assigned
  std::int64_t macs = 0;
};

GemmSchedule schedule_gemm(const GemmOp& op, const AcceleratorConfig& cfg);

/// Latency phases and per-component energies. Totals are the exact sums of
/// their parts.
struct CostBreakdown {
  // latency, seconds
  double lat_compute = 0.0;
  double lat_buffer = 0.0;
  double lat_peripheral = 0.0;

  // energy, joules
  double e_laser = 0.0;
  double e_mrm_eo = 0.0;
  double e_dac = 0.0;
  double e_adc = 0.0;
  double e_edram = 0.0;
  double e_bus = 0.0;
  double e_router = 0.0;
  double e_reduction = 0.0;
  double e_activation = 0.0;
  double e_pooling = 0.0;
  double e_io = 0.0;
  double e_tile_standby = 0.0;

  std::int64_t macs = 0;
  std::int64_t buffer_accesses = 0;

  double fps = 0.0;
  double fps_per_watt = 0.0;

  double total_latency() const { return lat_compute + lat_buffer + lat_peripheral; }
  double total_energy() const {
    return e_laser + e_mrm_eo + e_dac + e_adc + e_edram + e_bus + e_router +
           e_reduction + e_activation + e_pooling + e_io + e_tile_standby;
  }
  CostBreakdown& operator+=(const CostBreakdown& other);

  /// Named component list, fixed order (report serialization).
  std::vector<std::pair<std::string, double>> energy_components() const;
};

/// Cost of one scheduled GEMM (no frame-level terms: IO and standby are
/// charged once per frame in simulate_model).
CostBreakdown cost_gemm(const GemmOp& op, const AcceleratorConfig& cfg,
                        const GemmSchedule& schedule);

/// Full-model inference cost: sequential layers, per-tile pooling/activation
/// units, frame-level IO and tile standby power, FPS and FPS/W.
CostBreakdown simulate_model(const Model& model, const AcceleratorConfig& cfg);

/// TPC counts under a fixed total-area budget (mm^2). Per-TPC area:
/// M (2N mrm + N dac + adc) + reduction overhead.
std::vector<int> area_proportionate_counts(const std::vector<TpcConfig>& variants,
                                           double budget_mm2,
                                           const PeripheralParams& peripherals);

double tpc_area_mm2(const TpcConfig& tpc, const PeripheralParams& peripherals);

/// Key for a simulation cell and its normalized report entry.
struct SimKey {
  std::string model;
  PlatformId platform;
  double dr_sps;
  bool operator<(const SimKey& o) const;
};

struct NormalizedEntry {
  CostBreakdown cost;
  double norm_fps = 0.0;
  double norm_fps_per_watt = 0.0;
};

struct NormalizedReport {
  SimKey baseline;
  std::map<SimKey, NormalizedEntry> entries;
  // geometric means across models, per (platform, data rate)
  std::map<std::pair<PlatformId, double>, double> gmean_fps;
  std::map<std::pair<PlatformId, double>, double> gmean_fps_per_watt;
  std::map<std::pair<PlatformId, double>, double> gmean_norm_fps;
  std::map<std::pair<PlatformId, double>, double> gmean_norm_fps_per_watt;
};

/// Divide every FPS / FPS-per-watt by the baseline cell's and aggregate
/// geometric means. The baseline must be present.
NormalizedReport normalize_report(const std::map<SimKey, CostBreakdown>& reports,
                                  const SimKey& baseline);

double gmean(const std::vector<double>& values);

}  // namespace ringsim
